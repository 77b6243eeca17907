#include <doctest.h>

#include <bit>

#include "family.hpp"
#include "traces/errors.hpp"

using namespace traces;
using testfam::makeAlphabet;

TEST_CASE("validate accepts well-formed alphabets") {
  auto a = makeAlphabet({"a", "b"}, {{"a", "b"}});
  CHECK(a->size() == 2);
  CHECK(a->independent(0, 1));
  CHECK(a->independent(1, 0));
  CHECK(a->dependent(0, 0));

  auto path = makeAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(path->independent(0, 1));
  CHECK(path->independent(1, 2));
  CHECK_FALSE(path->independent(0, 2));
}

TEST_CASE("validate rejects bad input") {
  CHECK_THROWS_AS(makeAlphabet({"a"}, {{"a", "a"}}), ReflexivePair);
  CHECK_THROWS_AS(makeAlphabet({"a"}, {{"a", "b"}}), UnknownLetter);
  CHECK_THROWS_AS(makeAlphabet({"a", "a"}, {}), Error);
}

TEST_CASE("lookup by name") {
  auto a = makeAlphabet({"a", "b"}, {});
  CHECK(a->find("b") == LetterId{1});
  CHECK_FALSE(a->find("z"));
  CHECK_THROWS_AS(a->require("z"), UnknownLetter);
}

TEST_CASE("cliques enumeration") {
  auto a = makeAlphabet({"a", "b", "c"}, {{"a", "b"}});
  const std::vector<LetterSet> expect = {letterBit(0), letterBit(1),
                                         letterBit(2),
                                         letterBit(0) | letterBit(1)};
  CHECK(a->cliques() == expect);

  auto single = makeAlphabet({"a"}, {});
  CHECK(single->cliques() == std::vector<LetterSet>{letterBit(0)});

  auto triangle =
      makeAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(triangle->cliques().size() == 7);
}

TEST_CASE("connected components") {
  auto free2 = makeAlphabet({"a", "b"}, {});
  CHECK(free2->connectedComponents() ==
        std::vector<LetterSet>{letterBit(0), letterBit(1)});

  auto triangle =
      makeAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(triangle->connectedComponents() == std::vector<LetterSet>{0b111});

  auto path = makeAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(path->connectedComponents() == std::vector<LetterSet>{0b111});
}

TEST_CASE("clique union classification") {
  auto path = makeAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK_FALSE(path->isCliqueUnion());

  CHECK(makeAlphabet({"a", "b"}, {})->isCliqueUnion());

  auto triPlusD = makeAlphabet({"a", "b", "c", "d"},
                               {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(triPlusD->isCliqueUnion());
}

TEST_CASE("forbidden-pattern classification") {
  auto p4 = makeAlphabet({"a", "b", "c", "d"},
                         {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK_FALSE(p4->isTypeT());

  auto c4 = makeAlphabet({"a", "b", "c", "d"},
                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  CHECK_FALSE(c4->isTypeT());

  // Triangle {a,b,y}, x adjacent only to b, c adjacent to exactly b and y.
  auto f3 = makeAlphabet({"a", "b", "x", "y", "c"},
                         {{"a", "b"},
                          {"a", "y"},
                          {"b", "y"},
                          {"b", "x"},
                          {"b", "c"},
                          {"y", "c"}});
  CHECK_FALSE(f3->isTypeT());

  auto path = makeAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(path->isTypeT());

  auto cliques = makeAlphabet({"a", "b", "c", "d"},
                              {{"a", "b"}, {"c", "d"}});
  CHECK(cliques->isTypeT());
}

TEST_CASE("clique-union equals local transitivity, exhaustively") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : testfam::allAlphabets(n)) {
      bool transitive = true;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (a != b && b != c && a != c && g->independent(a, b) &&
                g->independent(b, c) && !g->independent(a, c))
              transitive = false;
      CHECK(g->isCliqueUnion() == transitive);
      if (g->isCliqueUnion()) CHECK(g->isTypeT());
    }
}

TEST_CASE("clique union implies no forbidden pattern, |A| <= 6") {
  // Larger alphabets exercise the 5-vertex pattern search.
  for (const auto& g : testfam::allAlphabets(5)) {
    bool transitive = true;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          if (a != b && b != c && a != c && g->independent(a, b) &&
              g->independent(b, c) && !g->independent(a, c))
            transitive = false;
    if (transitive) CHECK(g->isTypeT());
  }
}

TEST_CASE("cliques are closed under nonempty subsets") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : testfam::allAlphabets(n)) {
      const auto cs = g->cliques();
      for (LetterSet b : cs)
        for (LetterSet sub = b & (b - 1); sub; sub = (sub - 1) & b)
          CHECK(g->isClique(sub));
    }
}

TEST_CASE("induced sub-alphabet keeps names and edges") {
  auto path = makeAlphabet({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto sub = path->induced(letterBit(0) | letterBit(1));
  CHECK(sub->size() == 2);
  CHECK(sub->name(0) == "a");
  CHECK(sub->name(1) == "b");
  CHECK(sub->independent(0, 1));
  auto ends = path->induced(letterBit(0) | letterBit(2));
  CHECK_FALSE(ends->independent(0, 1));
}

TEST_CASE("letter set helpers") {
  auto a = makeAlphabet({"a", "b", "c"}, {});
  CHECK(setToLetters(0b101) == std::vector<LetterId>{0, 2});
  CHECK(letterSetToString(*a, 0b101) == "{a,c}");
  CHECK(letterSetToString(*a, 0) == "{}");
  CHECK(a->allLetters() == 0b111);
}

#include "traces/problem_spec.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "traces/errors.hpp"

namespace traces {

namespace {

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ProblemSpec parseSpec(std::string_view text) {
  std::vector<std::string> letters;
  std::vector<std::pair<std::string, std::string>> pairs;
  // letter -> (image tokens, line) in first-seen order
  std::vector<std::pair<std::string, std::vector<std::string>>> maps;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::vector<std::string> toks = tokens(raw);
    if (toks.empty()) continue;
    const std::string& head = toks.front();
    if (head == "letters:") {
      if (!letters.empty())
        throw ParseError(lineNo, "duplicate letters: line");
      letters.assign(toks.begin() + 1, toks.end());
      if (letters.empty()) throw ParseError(lineNo, "letters: needs letters");
    } else if (head == "edges:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& e = toks[i];
        const auto dash = e.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == e.size())
          throw ParseError(lineNo, "edge '" + e + "' is not of the form a-b");
        const std::string a = e.substr(0, dash);
        const std::string b = e.substr(dash + 1);
        if (a == b)
          throw ParseError(lineNo, "reflexive edge on letter '" + a + "'");
        pairs.emplace_back(a, b);
      }
    } else if (head == "map:") {
      if (toks.size() < 3 || toks[2] != "->")
        throw ParseError(lineNo, "map: needs the form 'map: a -> word'");
      const std::string& src = toks[1];
      for (const auto& [seen, img] : maps)
        if (seen == src) throw DuplicateMap(src);
      maps.emplace_back(src,
                        std::vector<std::string>(toks.begin() + 3, toks.end()));
    } else {
      throw ParseError(lineNo, "unknown directive '" + head + "'");
    }
  }
  if (letters.empty()) throw ParseError(lineNo, "missing letters: line");

  ProblemSpec spec;
  try {
    spec.alphabet = Alphabet::validate(letters, pairs);
  } catch (const Error& e) {
    throw ParseError(lineNo, e.what());
  }

  if (!maps.empty()) {
    std::map<std::string, std::vector<std::string>> byLetter(maps.begin(),
                                                             maps.end());
    std::vector<Trace> images;
    for (const std::string& a : letters) {
      const auto it = byLetter.find(a);
      if (it == byLetter.end()) throw MissingMap(a);
      std::vector<LetterId> word;
      for (const std::string& t : it->second) {
        const auto id = spec.alphabet->find(t);
        if (!id)
          throw ParseError(lineNo, "map image uses unknown letter '" + t + "'");
        word.push_back(*id);
      }
      images.push_back(
          Trace::fromWord(spec.alphabet, std::span<const LetterId>(word)));
      byLetter.erase(it);
    }
    if (!byLetter.empty())
      throw ParseError(lineNo, "map line for unknown letter '" +
                                   byLetter.begin()->first + "'");
    spec.endo = Endomorphism::make(spec.alphabet, std::move(images));
  }
  return spec;
}

}  // namespace traces

// Batch front end: parse a problem file, run one operation, print
// deterministic text. Exit codes: 0 ok, 2 parse error, 3 precondition
// violation; one-line diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "traces/boundary.hpp"
#include "traces/errors.hpp"
#include "traces/fixpoints.hpp"
#include "traces/mp_rational.hpp"
#include "traces/problem_spec.hpp"

namespace {

using namespace traces;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

const Endomorphism& requireEndo(const ProblemSpec& spec) {
  if (!spec.endo)
    throw PreconditionViolated("the spec file defines no endomorphism");
  return *spec.endo;
}

void printGenerators(const GeneratorSet& g) {
  for (const Trace& t : g.generators) std::cout << t.str() << "\n";
}

int dispatch(const std::string& cmd, const ProblemSpec& spec,
             const std::vector<std::string>& words, const std::string& which,
             int maxLen, int maxExp) {
  const AlphabetPtr& alpha = spec.alphabet;
  if (cmd == "check") {
    std::cout << "ok: " << alpha->size() << " letters, endomorphism "
              << (spec.endo ? "present" : "absent") << "\n";
  } else if (cmd == "fnf") {
    std::cout << Trace::fromWord(alpha, words[0]).str() << "\n";
  } else if (cmd == "eq") {
    const Trace u = Trace::fromWord(alpha, words[0]);
    const Trace v = Trace::fromWord(alpha, words[1]);
    std::cout << (u == v ? "true" : "false") << "\n";
  } else if (cmd == "dist") {
    const Trace u = Trace::fromWord(alpha, words[0]);
    const Trace v = Trace::fromWord(alpha, words[1]);
    std::cout << u.distance(v).str() << "\n";
  } else if (cmd == "uc") {
    const auto w = requireEndo(spec).ucWitness();
    if (!w)
      std::cout << "uniformly-continuous\n";
    else
      std::cout << "witness " << alpha->name(w->a) << " " << alpha->name(w->b)
                << " " << alpha->name(w->c) << "\n";
  } else if (cmd == "fix") {
    printGenerators(fixGenerators(requireEndo(spec)));
  } else if (cmd == "per") {
    const GeneratorSet g = perGenerators(requireEndo(spec));
    printGenerators(g);
    std::cout << "exponent " << g.exponent << "\n";
  } else if (cmd == "graph") {
    std::cout << "clique-union: " << (alpha->isCliqueUnion() ? "true" : "false")
              << "\n";
    std::cout << "type-T: " << (alpha->isTypeT() ? "true" : "false") << "\n";
    std::cout << "components:";
    for (LetterSet c : alpha->connectedComponents())
      std::cout << " " << letterSetToString(*alpha, c);
    std::cout << "\n";
  } else if (cmd == "boundary") {
    std::cout << boundaryFixDescription(requireEndo(spec)).str() << "\n";
  } else if (cmd == "oracle") {
    const Endomorphism& phi = requireEndo(spec);
    const auto set = which == "fix" ? fixOracle(phi, maxLen)
                                    : perOracle(phi, maxLen, maxExp);
    for (const Trace& t : set) std::cout << t.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace monoid toolkit: Foata normal forms, the FNF "
               "ultrametric, and endomorphism fixed-point analysis"};
  app.require_subcommand(1);

  std::string specPath;
  std::vector<std::string> words;
  std::string which;
  int maxLen = 4;
  int maxExp = 1;

  auto addSpec = [&](CLI::App* sub) {
    sub->add_option("spec", specPath, "problem spec file")->required();
    return sub;
  };
  addSpec(app.add_subcommand("check", "validate the spec file"));
  addSpec(app.add_subcommand("fnf", "Foata normal form of a word"))
      ->add_option("word", words, "word")->expected(1);
  addSpec(app.add_subcommand("eq", "trace equality of two words"))
      ->add_option("words", words, "two words")->expected(2);
  addSpec(app.add_subcommand("dist", "FNF ultrametric distance"))
      ->add_option("words", words, "two words")->expected(2);
  addSpec(app.add_subcommand("uc", "uniform continuity check"));
  addSpec(app.add_subcommand("fix", "fixed-point generators"));
  addSpec(app.add_subcommand("per", "periodic-point generators"));
  addSpec(app.add_subcommand("graph", "independence graph classification"));
  addSpec(app.add_subcommand(
      "boundary", "description of the boundary fixed points"));
  CLI::App* oracle = addSpec(app.add_subcommand(
      "oracle", "brute-force fixed/periodic point sets"));
  oracle->add_option("which", which, "fix or per")
      ->required()
      ->check(CLI::IsMember({"fix", "per"}));
  oracle->add_option("--max-len", maxLen, "length bound");
  oracle->add_option("--max-exp", maxExp, "exponent bound (per)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  std::ifstream in(specPath);
  if (!in) {
    std::cerr << "cannot read spec file '" << specPath << "'\n";
    return kExitParse;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    traces::ProblemSpec spec = traces::parseSpec(buf.str());
    return dispatch(app.get_subcommands().front()->get_name(), spec, words,
                    which, maxLen, maxExp);
  } catch (const traces::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const traces::UnknownLetter& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const traces::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitPrecondition;
  }
}

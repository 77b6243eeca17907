#pragma once

#include <stdexcept>
#include <string>

namespace traces {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReflexivePair : Error {
  explicit ReflexivePair(const std::string& letter)
      : Error("reflexive independence pair on letter '" + letter + "'") {}
};

struct UnknownLetter : Error {
  explicit UnknownLetter(const std::string& letter)
      : Error("unknown letter '" + letter + "'") {}
};

struct AlphabetMismatch : Error {
  AlphabetMismatch() : Error("operands live over different alphabets") {}
};

struct NotAPrefix : Error {
  NotAPrefix() : Error("left operand is not a prefix of the right operand") {}
};

// Carries the independent pair whose images fail to commute.
struct NotWellDefined : Error {
  NotWellDefined(const std::string& a, const std::string& b)
      : Error("images of independent pair {" + a + "," + b +
              "} do not commute"),
        first(a),
        second(b) {}
  std::string first, second;
};

struct NotClosed : Error {
  explicit NotClosed(const std::string& what)
      : Error("restriction is not well defined: " + what) {}
};

struct OrbitGrowth : Error {
  explicit OrbitGrowth(std::size_t limit)
      : Error("orbit exceeded budget of " + std::to_string(limit) +
              " without cycling") {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& what)
      : Error("precondition violated: " + what) {}
};

struct TrivialGenerator : Error {
  TrivialGenerator() : Error("generator set contains the identity") {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what)
      : Error("budget exceeded: " + what) {}
};

struct NotUniformlyContinuous : Error {
  NotUniformlyContinuous()
      : Error("endomorphism is not uniformly continuous") {}
};

struct NotCliqueUnion : Error {
  NotCliqueUnion() : Error("alphabet is not a clique union") {}
};

struct NotCommutativeComponent : Error {
  NotCommutativeComponent()
      : Error("alphabet is not a free commutative component") {}
};

struct DuplicateMap : Error {
  explicit DuplicateMap(const std::string& letter)
      : Error("letter '" + letter + "' has more than one map line") {}
};

struct MissingMap : Error {
  explicit MissingMap(const std::string& letter)
      : Error("letter '" + letter + "' has no map line") {}
};

struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

}  // namespace traces

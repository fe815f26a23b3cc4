#ifndef SGCHAIN_ERRORS_HPP_
#define SGCHAIN_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgchain {

// Base class for every error raised by the library.  Each concrete error
// carries its witness data as public fields so callers (and tests) can
// inspect the offending indices without parsing the message.
struct Error : std::runtime_error {
  explicit Error(std::string const& msg) : std::runtime_error(msg) {}
};

struct ShapeError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  std::size_t requested;
  explicit SizeLimitError(std::size_t req)
      : Error("size limit exceeded: " + std::to_string(req) +
              " > 4096 elements"),
        requested(req) {}
};

// Witness triple (i, j, k) with (ij)k != i(jk).
struct NonAssociativeError : Error {
  std::uint32_t i, j, k;
  NonAssociativeError(std::uint32_t a, std::uint32_t b, std::uint32_t c)
      : Error("table is not associative at (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")"),
        i(a),
        j(b),
        k(c) {}
};

struct BadZeroError : Error {
  std::uint32_t witness;
  explicit BadZeroError(std::uint32_t w)
      : Error("declared zero fails absorption at element " +
              std::to_string(w)),
        witness(w) {}
};

struct BadIdentityError : Error {
  std::uint32_t witness;
  explicit BadIdentityError(std::uint32_t w)
      : Error("declared identity fails at element " + std::to_string(w)),
        witness(w) {}
};

struct DuplicateLabelError : Error {
  std::string label;
  explicit DuplicateLabelError(std::string lab)
      : Error("duplicate label \"" + lab + "\""), label(std::move(lab)) {}
};

struct EmptyGeneratorsError : Error {
  EmptyGeneratorsError() : Error("generating set is empty") {}
};

struct EmptySubsetError : Error {
  EmptySubsetError() : Error("subset is empty") {}
};

struct NotAnIdealError : Error {
  std::uint32_t element, multiplier;
  bool left_failure;  // true: multiplier * element escapes, false: element * multiplier
  NotAnIdealError(std::uint32_t e, std::uint32_t m, bool left)
      : Error(std::string("set is not an ideal: ") +
              (left ? "left" : "right") + " absorption fails at (" +
              std::to_string(e) + ", " + std::to_string(m) + ")"),
        element(e),
        multiplier(m),
        left_failure(left) {}
};

struct NotARightIdealError : Error {
  using Error::Error;
};

struct NotASubsemigroupError : Error {
  using Error::Error;
};

struct NoZeroError : Error {
  NoZeroError() : Error("operation requires a semigroup with zero") {}
};

struct MissingZeroError : Error {
  std::size_t part;
  explicit MissingZeroError(std::size_t idx)
      : Error("part " + std::to_string(idx) + " has no zero"), part(idx) {}
};

struct BadSandwichMatrixError : Error {
  using Error::Error;
};

struct NotAGroupError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct NotAnActionError : Error {
  std::uint32_t point, s, t;
  NotAnActionError(std::uint32_t a, std::uint32_t x, std::uint32_t y)
      : Error("action is not associative at (" + std::to_string(a) + ", " +
              std::to_string(x) + ", " + std::to_string(y) + ")"),
        point(a),
        s(x),
        t(y) {}
};

struct NotASubactError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct ActMismatchError : Error {
  using Error::Error;
};

// rewrite module
struct UnknownLetterError : Error {
  std::string letter;
  explicit UnknownLetterError(std::string l)
      : Error("unknown letter \"" + l + "\""), letter(std::move(l)) {}
};

struct BadRuleOrderError : Error {
  using Error::Error;
};

struct UnorientableRuleError : Error {
  UnorientableRuleError()
      : Error("relation has the same shortlex value on both sides") {}
};

struct NotConfluentError : Error {
  NotConfluentError() : Error("rewriting system is not confluent") {}
};

// chains module
struct NotInKernelError : Error {
  std::string word;
  explicit NotInKernelError(std::string w)
      : Error("word \"" + w + "\" is not a kernel element"),
        word(std::move(w)) {}
};

struct NotZeroMinimalError : Error {
  using Error::Error;
};

// cli module
struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t ln, std::string const& msg)
      : Error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct SemanticError : Error {
  using Error::Error;
};

struct InvalidArgumentError : Error {
  using Error::Error;
};

}  // namespace sgchain

#endif  // SGCHAIN_ERRORS_HPP_

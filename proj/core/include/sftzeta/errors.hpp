#ifndef SFTZETA_ERRORS_HPP
#define SFTZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sftzeta {

enum class Errc {
  // field construction and scanning
  NotPrime,
  DegreeZero,
  ScanLimitExceeded,
  ZeroPolynomial,
  NotSeparable,
  NotSplitWithinBound,
  CrossContext,
  // shift construction
  NotSquare,
  EntryOutOfRange,
  DimensionMismatch,
  DuplicateState,
  EmptyShift,
  CapExceeded,
  LengthZero,
  // block maps
  InconsistentTable,
  WordTooShort,
  InadmissibleWord,
  // decomposition
  NotIrreducible,
  Empty,
  NotWeaklyConnected,
  // spectral
  NoCycle,
  LMaxTooSmall,
  // zeta / twists
  IntegralityViolation,
  NotBijective,
  NotAutomorphism,
  // translation
  FrobeniusNotAutomorphism,
  AlphabetTooLarge,
  // file formats
  SyntaxError,
  SemanticError,
  // internal cross-checks that must never fire
  InternalCheck,
};

const char* errc_name(Errc c);

/// Domain error carrying a stable error name (used verbatim by the CLI).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

inline void require(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace sftzeta

#endif

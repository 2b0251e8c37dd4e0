#ifndef RLDUAL_TYPES_HPP
#define RLDUAL_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rldual {

/// Elements of a finite algebra are indices 0..size-1.
using Elem = int;

/// Subsets of a carrier (or of a point set) as bitmasks; carriers are
/// capped at 64 elements.
using Mask = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int mask_count(Mask m) { return __builtin_popcountll(m); }

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct NotBounded : Error { using Error::Error; };
struct NotSbp : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotUpset : Error { using Error::Error; };
struct NotHomomorphism : Error { using Error::Error; };
struct ModeMismatch : Error { using Error::Error; };
struct HasZeroDivisors : Error { using Error::Error; };
struct ClosureFailure : Error { using Error::Error; };
struct NoDecomposition : Error { using Error::Error; };
struct SpaceInvalid : Error { using Error::Error; };
struct QuadrupleInvalid : Error { using Error::Error; };
struct DualQuadrupleInvalid : Error { using Error::Error; };

/// A computation contradicted a theorem that holds for all finite
/// instances.  Either the input is outside the hypotheses or there is a
/// bug; both are hard errors.
struct TheoremViolation : Error { using Error::Error; };
struct WellDefinednessFailure : TheoremViolation { using TheoremViolation::TheoremViolation; };
struct DisagreementBug : TheoremViolation { using TheoremViolation::TheoremViolation; };

/// One failed check: which clause broke and on which elements.
struct Violation {
  std::string clause;
  std::vector<Elem> witness;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  /// Records the first witness per clause; later tuples for an already
  /// failed clause are dropped.
  void add(std::string clause, std::vector<Elem> witness, std::string detail = {}) {
    for (const auto& v : violations) {
      if (v.clause == clause) return;
    }
    violations.push_back({std::move(clause), std::move(witness), std::move(detail)});
  }
  std::string to_string() const;
};

}  // namespace rldual

#endif

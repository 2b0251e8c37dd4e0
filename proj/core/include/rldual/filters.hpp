#ifndef RLDUAL_FILTERS_HPP
#define RLDUAL_FILTERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rldual/algebra.hpp"

namespace rldual {

/// Index into the canonical prime-filter list of one algebra.
using PrimeFilterId = int;

/// Outcome of the complex product on prime filters: either a prime
/// filter, or the whole algebra (bounded mode only).
class BulletOutcome {
 public:
  static BulletOutcome whole() { return BulletOutcome(-1); }
  static BulletOutcome at(PrimeFilterId id) { return BulletOutcome(id); }

  bool is_whole() const { return id_ < 0; }
  PrimeFilterId id() const {
    if (is_whole()) throw Error("bullet outcome is the whole algebra");
    return id_;
  }
  bool operator==(const BulletOutcome&) const = default;

 private:
  explicit BulletOutcome(int id) : id_(id) {}
  int id_;
};

/// Smallest filter containing a nonempty subset: the up-set of the meet
/// of its members.
Mask generated_filter(const Algebra& a, Mask subset);

/// Upward closure of a subset.
Mask upward_closure(const Algebra& a, Mask subset);

bool is_filter(const Algebra& a, Mask f);
bool is_prime_filter(const Algebra& a, Mask f);  // proper prime

/// Canonical list of (generalized, in GMTL mode) prime filters, sorted by
/// cardinality then mask value.  GMTL mode admits the whole carrier.
std::vector<Mask> list_prime_filters(const Algebra& a);

/// Interned prime-filter tables of one algebra: the complex product, its
/// partial residual and the Routley star, all precomputed and checked
/// against the lemmas that make them well defined.  Owns a copy of the
/// algebra.
class Spectrum {
 public:
  explicit Spectrum(const Algebra& a);

  const Algebra& algebra() const { return algebra_; }
  int count() const { return static_cast<int>(filters_.size()); }
  Mask filter(PrimeFilterId i) const { return filters_[i]; }
  const std::vector<Mask>& filters() const { return filters_; }

  /// Id of a filter mask; NotPrime if the mask is not in the list.
  PrimeFilterId id_of(Mask f) const;
  std::optional<PrimeFilterId> try_id_of(Mask f) const;

  bool included(PrimeFilterId i, PrimeFilterId j) const {
    return mask_subset(filters_[i], filters_[j]);
  }

  /// Up-closure of the elementwise product; Whole only in bounded mode.
  BulletOutcome bullet(PrimeFilterId i, PrimeFilterId j) const {
    return bullet_[static_cast<size_t>(i) * count() + j];
  }

  /// Greatest a with a * b <= c, when one exists.  TheoremViolation if
  /// the witnesses have no prime union (impossible under semilinearity).
  std::optional<PrimeFilterId> arrow(PrimeFilterId b, PrimeFilterId c) const {
    int v = arrow_[static_cast<size_t>(b) * count() + c];
    if (v == kBroken)
      throw TheoremViolation("residual of primes is not prime on '" + algebra_->name + "'");
    return v == kNoWitness ? std::nullopt : std::optional<PrimeFilterId>(v);
  }

  /// {a : ~a not in f}; bounded mode only.
  PrimeFilterId star(PrimeFilterId i) const;

  /// Id of the whole-carrier point (GMTL mode only).
  std::optional<PrimeFilterId> whole_point() const { return whole_; }

 private:
  static constexpr int kNoWitness = -1;
  static constexpr int kBroken = -2;

  const Algebra* algebra_;
  std::vector<Mask> filters_;
  std::vector<BulletOutcome> bullet_;
  std::vector<int> arrow_;
  std::vector<int> star_;
  std::optional<PrimeFilterId> whole_;
};

/// Mask-level complex product ↑{x*y : x in f, y in g} of two prime
/// filters; the full carrier signals the Whole outcome in bounded mode.
Mask filter_bullet_mask(const Algebra& a, Mask f, Mask g);

/// One-shot forms of the interned operations (inputs as masks).
std::optional<Mask> filter_arrow(const Algebra& a, Mask f, Mask g);
Mask routley_star(const Algebra& a, Mask f);

/// JSON dump of the spectrum: filters, bullet table ("whole" sentinel),
/// arrow table ("none" sentinel), star table.
std::string spectrum_to_json(const Spectrum& s);

}  // namespace rldual

#endif

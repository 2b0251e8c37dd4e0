#ifndef RLDUAL_ALGEBRA_HPP
#define RLDUAL_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rldual/types.hpp"

namespace rldual {

/// A finite commutative integral distributive residuated lattice, given
/// by its order table and its monoid table.  Meets, joins and the
/// residuum are derived from these two tables, never stored.
///
/// Two carrier modes share this type: a present `zero` means the bottom
/// constant is part of the signature (bounded / MTL mode), an absent
/// `zero` means the algebra is taken as a prelinear semihoop (GMTL mode).
struct FiniteResiduatedLattice {
  std::string name;
  int size = 0;
  std::vector<std::uint8_t> leq;  // size*size, leq[a*size+b] == 1 iff a <= b
  std::vector<Elem> mul;          // size*size monoid table
  Elem one = 0;
  std::optional<Elem> zero;       // engaged iff bounded

  bool bounded() const { return zero.has_value(); }

  bool le(Elem a, Elem b) const { return leq[static_cast<size_t>(a) * size + b] != 0; }
  Elem prod(Elem a, Elem b) const { return mul[static_cast<size_t>(a) * size + b]; }

  /// Greatest lower bound, or -1 if the pair has none (pre-validation).
  Elem meet(Elem a, Elem b) const;
  /// Least upper bound, or -1.
  Elem join(Elem a, Elem b) const;
  /// max{d : a*d <= b}, or -1 if the set of such d has no greatest element.
  Elem res(Elem a, Elem b) const;

  Elem neg(Elem a) const;           // a -> 0; requires bounded mode
  Elem oplus(Elem a, Elem b) const; // neg(neg(a) * neg(b)); requires bounded mode

  /// Least element of the carrier lattice (exists in any finite lattice,
  /// designated or not).
  Elem minimum() const;

  Mask carrier_mask() const { return full_mask(size); }
};

using Algebra = FiniteResiduatedLattice;

/// Total unary map over a named carrier.
struct UnaryTable {
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  int size() const { return static_cast<int>(map.size()); }
};

/// Checks every axiom of the class on every tuple and reports each
/// violated clause with a concrete witness.  Table shape mismatch is a
/// DimensionMismatch error instead of a report entry.
Report validate(const Algebra& a);

/// Convenience: validate and throw Error on failure.
void require_valid(const Algebra& a);

struct Flag {
  bool holds = false;
  std::vector<Elem> witness;  // counterexample tuple when !holds
};

struct ClassificationReport {
  Flag commutative;
  Flag integral;
  Flag distributive;
  Flag semilinear;
  bool bounded = false;
  Flag mtl;
  // Bounded-only properties; disengaged in GMTL mode.
  std::optional<Flag> smtl;
  std::optional<Flag> sbp;
  std::optional<Flag> ibp;
  std::optional<Flag> has_zero_divisors;
  std::optional<Flag> directly_indecomposable;

  bool is_mtl() const { return mtl.holds; }
  bool is_sbp() const { return sbp && sbp->holds; }
};

ClassificationReport classify(const Algebra& a);

/// True iff `a` is a nontrivial sbp-algebra (the quadruple machinery
/// needs size >= 2).
bool is_sbp_algebra(const Algebra& a);
void require_sbp(const Algebra& a);

struct IdentityCheck {
  int id = 0;          // 1..14
  bool holds = false;
  std::vector<Elem> witness;
};

/// Evaluates the fourteen arithmetic (in)equalities that hold in every
/// GMTL-algebra (items 1-10) resp. every MTL-algebra (items 11-14) over
/// all tuples.  Items 11-14 are skipped in GMTL mode.
std::vector<IdentityCheck> check_cidrl_identities(const Algebra& a);

/// Largest Boolean subalgebra {u : u v ~u = 1} together with the
/// embedding new index -> ambient index.  Bounded mode only.
std::pair<Algebra, std::vector<Elem>> boolean_skeleton(const Algebra& a);

/// {x : ~x < x}, as a mask over the carrier.  Requires sbp.
Mask radical(const Algebra& a);
/// {x : x < ~x} = {~x : x in radical}.  Requires sbp.
Mask coradical(const Algebra& a);

/// The radical with the inherited operations, as a GMTL-mode algebra,
/// plus the embedding new index -> ambient index.
std::pair<Algebra, std::vector<Elem>> radical_algebra(const Algebra& a);

/// x |-> ~~x restricted to the radical, as a table over the indices of
/// radical_algebra(a).
UnaryTable double_negation_nucleus(const Algebra& a);

struct WdlCheck {
  bool admissible = false;
  std::string clause;          // failing law when !admissible
  std::vector<Elem> witness;
};

/// Closure-operator laws, the nucleus law d(a)*d(b) <= d(a*b), and
/// preservation of meet and join.
WdlCheck is_wdl_admissible(const Algebra& gmtl, const UnaryTable& delta);

/// Adjoin an absorbing bottom to a GMTL-mode algebra (new element 0,
/// everything else shifted up by one).
Algebra add_bottom(const Algebra& gmtl);
/// Remove the bottom of a bounded algebra without zero divisors.
Algebra strip_bottom(const Algebra& mtl);

Algebra product(const Algebra& a, const Algebra& b);
/// Ordinal sum 2 (+) H, i.e. add_bottom.
Algebra ordinal_sum_2_h(const Algebra& hoop);

/// Restriction of the algebra to a submask that is closed under meet,
/// join and product.  Throws ClosureFailure otherwise.  The result keeps
/// `one` and keeps/recomputes `zero` per `keep_zero`.
std::pair<Algebra, std::vector<Elem>> subalgebra(const Algebra& a, Mask carrier,
                                                 bool keep_zero);

/// True iff `f` (indexed by elements of `a`) is a homomorphism a -> b in
/// the signature of the common mode; both algebras must share the mode.
bool is_homomorphism(const Algebra& a, const Algebra& b, const std::vector<Elem>& f,
                     std::string* why = nullptr);

}  // namespace rldual

#endif

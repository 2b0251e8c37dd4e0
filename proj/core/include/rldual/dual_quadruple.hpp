#ifndef RLDUAL_DUAL_QUADRUPLE_HPP
#define RLDUAL_DUAL_QUADRUPLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rldual/filter_pairs.hpp"
#include "rldual/space.hpp"

namespace rldual {

inline constexpr int kMaxStonePoints = 12;

/// (S, X, Upsilon, Delta): a finite Stone space, a GMTL^tau space, one
/// point map per subset of S, and a closure operator compatible with R.
struct DualQuadruple {
  int stone_points = 0;
  ResiduatedSpace space;                  // GMTL^tau mode
  std::vector<std::vector<int>> upsilon;  // indexed by subset mask of S
  std::vector<int> delta_map;             // Delta : X -> X

  const std::vector<int>& upsilon_of(Mask u_subset) const {
    return upsilon[u_subset];
  }
  int delta(int x) const { return delta_map[x]; }
};

/// Exhaustive verification: X is GMTL^tau, every upsilon_U is a
/// GMTL^tau-morphism, the induced map (U,V) |-> upsilon_U^{-1}[V] is an
/// external join on the up-set algebras, Delta is a closure operator
/// with R(x,y,z) => R(Dx,Dy,Dz), and Delta^{-1} is wdl-admissible on the
/// up-set algebra.
Report validate_dual_quadruple(const DualQuadruple& dq);

/// u in S fixes x in X: every upsilon_U with u outside U leaves x fixed.
bool dual_fixes(const DualQuadruple& dq, int u, int x);

struct RotationPoint {
  bool upper = false;
  int u = -1;  // Stone point
  int x = -1;  // X point (Upper points carry Delta-closed coordinates)

  bool operator==(const RotationPoint&) const = default;
};

/// The rotated space: fixing pairs below, their Delta-decorated
/// duplicates above, with the three-clause order and four-clause partial
/// operation.
struct RotationSpace {
  std::vector<RotationPoint> points;
  std::vector<std::uint8_t> leq;
  std::vector<int> comp;  // -1 = undefined

  int count() const { return static_cast<int>(points.size()); }
  bool le(int p, int q) const { return leq[static_cast<size_t>(p) * count() + q] != 0; }
  int compose(int p, int q) const { return comp[static_cast<size_t>(p) * count() + q]; }
  int index_of(const RotationPoint& pt) const;

  /// View as a bounded-mode residuated space (E = everything, no top).
  ResiduatedSpace as_space() const;

  /// Subbasic set: U a subset of Stone points, V an up-set of X points.
  Mask w_set(const DualQuadruple& dq, Mask u_subset, Mask v_upset) const;
};

/// Throws DualQuadrupleInvalid unless validate_dual_quadruple passes;
/// the result is asserted to satisfy the bounded residuated-space axioms.
RotationSpace rotate(const DualQuadruple& dq);

/// (S(B(A)), S(R(A)), mu over the Boolean preimages, double-negation
/// preimage), validated.
DualQuadruple extract_dual_quadruple(const FilterPairContext& ctx);
DualQuadruple extract_dual_quadruple(const Algebra& a);

/// The five splitting clauses of the mu family, checked for every pair of
/// skeleton elements and every generalized prime radical filter.
Report check_mu_splitting(const FilterPairContext& ctx);

struct CommuteSquare {
  bool rotation_matches_spectrum = false;   // rotate(extract(A)) ~ S(A)
  bool bowtie_matches_spectrum = false;     // alpha transports order and products
  bool upsets_match_algebra = false;        // A(rotate(extract(A))) ~ A
  bool compose_matches_algebra = false;     // compose(extract_quadruple(A)) ~ A
  std::string detail;

  bool all() const {
    return rotation_matches_spectrum && bowtie_matches_spectrum && upsets_match_algebra &&
           compose_matches_algebra;
  }
};

CommuteSquare commute_square(const Algebra& a);

/// alpha transports the filter product to the bowtie operation, including
/// agreement of the undefined/Whole cases.
Report check_alpha_transport(const FilterPairContext& ctx, const BowtieSpace& bt,
                             const std::vector<int>& alpha_map);

std::string dual_quadruple_to_json(const DualQuadruple& dq);
DualQuadruple dual_quadruple_from_json(const std::string& text);
DualQuadruple load_dual_quadruple(const std::string& path);

std::string rotation_to_dot(const RotationSpace& rot);

}  // namespace rldual

#endif

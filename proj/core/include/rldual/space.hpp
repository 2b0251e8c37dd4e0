#ifndef RLDUAL_SPACE_HPP
#define RLDUAL_SPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rldual/filters.hpp"
#include "rldual/isomorphism.hpp"

namespace rldual {

enum class SpaceMode { Mtl, Gmtl };

inline constexpr int kMaxSpacePoints = 20;

/// Finite extended Priestley space presented functionally: a poset with a
/// partial product, a unit set and (in GMTL mode) a designated top.  The
/// ternary relation is derived: R(x,y,z) iff x*y is defined and x*y <= z.
struct ResiduatedSpace {
  int points = 0;
  std::vector<std::uint8_t> leq;   // points*points
  std::vector<int> prod;           // points*points, -1 = undefined
  Mask unit_set = 0;               // E
  std::optional<int> top;          // engaged iff GMTL^tau mode
  std::vector<std::string> labels; // optional, for emitters

  bool le(int x, int y) const { return leq[static_cast<size_t>(x) * points + y] != 0; }
  int apply(int x, int y) const { return prod[static_cast<size_t>(x) * points + y]; }
  bool rel(int x, int y, int z) const {
    int p = apply(x, y);
    return p >= 0 && le(p, z);
  }
  SpaceMode mode() const { return top ? SpaceMode::Gmtl : SpaceMode::Mtl; }
};

/// Spectrum space of an algebra: points are the canonical (generalized)
/// prime filters, the order is inclusion, the product is the filter
/// product, E is everything, and GMTL mode designates the whole-algebra
/// point as top.
ResiduatedSpace spectrum_space(const Spectrum& s);
ResiduatedSpace spectrum_space(const Algebra& a);

/// All up-sets of the space's order as point masks, canonical order.
std::vector<Mask> upsets_of(const ResiduatedSpace& x);

/// Exhaustive verification of the residuated-space axioms, plus the
/// MTL^tau conditions (commutativity, E = S, the linearity clause) and,
/// in GMTL mode, totality of * and the designated greatest point.
Report check_residuated_space(const ResiduatedSpace& x, SpaceMode mode);

/// Algebra of (nonempty, in GMTL mode) up-sets under intersection, union
/// and the relational product / residual.  Throws SpaceInvalid if the
/// space fails check_residuated_space or the construction leaves the
/// up-set family.
Algebra upset_algebra(const ResiduatedSpace& x, SpaceMode mode);

/// phi_A: element -> index into upset_algebra(spectrum(a)); asserted to
/// be an isomorphism.
std::vector<Elem> unit_map(const Algebra& a);

/// Greatest y such that x*y is defined (bounded mode: the Routley star on
/// points).
int star_point(const ResiduatedSpace& x, int p);
/// Greatest x with x*y <= z, or nullopt if no witness exists.
std::optional<int> arrow_point(const ResiduatedSpace& x, int y, int z);

/// Dual of a verified homomorphism f : a -> b, as the preimage point map
/// S(b) -> S(a); the bounded-morphism clauses are asserted.
std::vector<int> dualize_hom(const Algebra& a, const Algebra& b, const std::vector<Elem>& f);

SpaceShape space_shape(const ResiduatedSpace& x);

std::string space_to_dot(const ResiduatedSpace& x);
std::string space_to_json(const ResiduatedSpace& x);

}  // namespace rldual

#endif

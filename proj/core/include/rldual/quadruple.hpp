#ifndef RLDUAL_QUADRUPLE_HPP
#define RLDUAL_QUADRUPLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rldual/algebra.hpp"

namespace rldual {

/// Boolean skeleton, radical and double-negation data of one sbp-algebra,
/// with both embeddings; shared by the quadruple and filter-pair layers.
/// Owns a copy of the ambient algebra.
struct SbpParts {
  Algebra ambient;
  Algebra skeleton;               // bounded, Boolean
  std::vector<Elem> skel_embed;   // skeleton index -> ambient index
  Algebra radical;                // GMTL mode
  std::vector<Elem> rad_embed;    // radical index -> ambient index
  UnaryTable delta;               // double negation on the radical

  std::vector<Elem> skel_back;    // ambient -> skeleton index or -1
  std::vector<Elem> rad_back;     // ambient -> radical index or -1

  explicit SbpParts(const Algebra& a);
};

/// (B, A, v_e, delta): a Boolean algebra, a GMTL-algebra, an external
/// join given as the table of maps nu_u, and a wdl-admissible nucleus.
/// The carriers are separate index spaces; the two units are identified
/// by construction, which realizes the one-point intersection.
struct AlgebraicQuadruple {
  Algebra skeleton;
  Algebra radical;
  std::vector<Elem> ext_join;  // skeleton.size x radical.size, nu_u(x)
  UnaryTable delta;

  Elem nu(Elem u, Elem x) const {
    return ext_join[static_cast<size_t>(u) * radical.size + x];
  }
};

/// Exhaustive check of the quadruple conditions: both carriers are in
/// their classes, each nu_u is a GMTL endomorphism, each lambda_x is a
/// lattice homomorphism, nu_0 = id, nu_1 = 1, the join-exchange law, and
/// wdl-admissibility of delta.
Report validate_quadruple(const AlgebraicQuadruple& q);

/// (B(A), R(A), join, double negation) of a nontrivial sbp-algebra.
AlgebraicQuadruple extract_quadruple(const Algebra& a);
AlgebraicQuadruple extract_quadruple(const SbpParts& parts);

/// Result of composing a quadruple: the algebra on pair classes plus the
/// class structure (canonical representative per class, class of every
/// pair).
struct QuadrupleComposition {
  Algebra algebra;
  std::vector<std::pair<Elem, Elem>> rep;  // class -> least (u,x)
  std::vector<int> class_of;               // u * |A| + x -> class

  int pair_class(Elem u, Elem x) const {
    return class_of[static_cast<size_t>(u) * cols + x];
  }
  int cols = 0;
};

/// The pair-class algebra under the four pair formulas.  Verifies
/// representative independence of every operation (WellDefinednessFailure
/// otherwise), that the formula meet/join/residual agree with the ones
/// derived from the order, and that the result is an sbp-algebra.
QuadrupleComposition compose(const AlgebraicQuadruple& q);

/// Least (u, x) in skeleton x radical indices with
/// ambient == (u v ~x) ^ (~u v x).
std::pair<Elem, Elem> decompose_element(const SbpParts& parts, Elem ambient);

struct GoodPairCheck {
  bool good = false;
  std::string clause;
  std::vector<Elem> witness;
};

/// Checks g(nu_u(x)) = nu'_{f(u)}(g(x)) and g . delta = delta' . g for
/// verified homomorphisms f, g.
GoodPairCheck check_good_morphism_pair(const AlgebraicQuadruple& q,
                                       const AlgebraicQuadruple& q2,
                                       const std::vector<Elem>& f,
                                       const std::vector<Elem>& g);

/// Searches for a pair of isomorphisms forming a good morphism pair.
std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> find_quadruple_isomorphism(
    const AlgebraicQuadruple& q, const AlgebraicQuadruple& q2);

/// Text form: two embedded algebra records, the nu table, the delta row.
std::string print_quadruple(const AlgebraicQuadruple& q);
AlgebraicQuadruple parse_quadruple(const std::string& text);
AlgebraicQuadruple load_quadruple(const std::string& path);

}  // namespace rldual

#endif

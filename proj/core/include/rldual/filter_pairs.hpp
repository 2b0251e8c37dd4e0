#ifndef RLDUAL_FILTER_PAIRS_HPP
#define RLDUAL_FILTER_PAIRS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rldual/filters.hpp"
#include "rldual/quadruple.hpp"
#include "rldual/space.hpp"

namespace rldual {

/// Everything the filter-pair construction needs for one sbp-algebra:
/// the ambient, skeleton, radical and nuclear-image spectra plus the maps
/// between them.
class FilterPairContext {
 public:
  explicit FilterPairContext(const Algebra& a);

  // the interned spectra point into the members; keep the object pinned
  FilterPairContext(const FilterPairContext&) = delete;
  FilterPairContext& operator=(const FilterPairContext&) = delete;

  const Algebra& ambient() const { return parts_.ambient; }
  const SbpParts& parts() const { return parts_; }
  const AlgebraicQuadruple& quadruple() const { return quad_; }
  const Spectrum& ambient_spec() const { return *ambient_spec_; }
  const Spectrum& skel_spec() const { return *skel_spec_; }
  const Spectrum& rad_spec() const { return *rad_spec_; }
  /// delta[R(A)] materialized as its own GMTL-mode algebra (nuclear image).
  const Algebra& image_algebra() const { return image_; }
  const std::vector<Elem>& image_embed() const { return image_embed_; }
  const Spectrum& image_spec() const { return *image_spec_; }

  /// mu_u(x) = {r : u v r in x} as a radical-spectrum id; u is a skeleton
  /// element.
  PrimeFilterId mu(Elem u_skel, PrimeFilterId x_rad) const;

  /// Whether the ultrafilter fixes the radical filter; decided both by
  /// witness search in S(A) and by external primality, which must agree.
  bool fixes(PrimeFilterId u_ult, PrimeFilterId x_rad) const;

  /// Intersection of all fixing ultrafilters, as a skeleton filter mask.
  Mask f_filter(PrimeFilterId x_rad) const;

  /// Elementwise delta image of a radical filter, as an image-spectrum id.
  PrimeFilterId delta_image(PrimeFilterId x_rad) const;
  /// delta^{-1} of an image filter, as a radical-spectrum id.
  PrimeFilterId delta_preimage(PrimeFilterId y_img) const;

  /// Trace of an ambient prime filter on the skeleton (an ultrafilter id).
  PrimeFilterId skeleton_trace(PrimeFilterId a_amb) const;
  /// Trace on the radical (a generalized prime id).
  PrimeFilterId radical_trace(PrimeFilterId a_amb) const;

  /// Interned filters as masks over ambient elements.
  Mask skeleton_filter_ambient(PrimeFilterId u) const;
  Mask radical_filter_ambient(PrimeFilterId x) const;

 private:
  SbpParts parts_;
  AlgebraicQuadruple quad_;
  std::unique_ptr<Spectrum> ambient_spec_;
  std::unique_ptr<Spectrum> skel_spec_;
  std::unique_ptr<Spectrum> rad_spec_;
  Algebra image_;
  std::vector<Elem> image_embed_;   // image index -> radical index
  std::vector<Elem> image_back_;    // radical index -> image index or -1
  std::unique_ptr<Spectrum> image_spec_;
};

struct BowtiePoint {
  bool upper = false;
  PrimeFilterId u = -1;  // ultrafilter of the skeleton
  PrimeFilterId x = -1;  // Lower: radical-spectrum id; Upper: image-spectrum id

  bool operator==(const BowtiePoint&) const = default;
};

/// F_A joined with its decorated duplicate F_A^d, with the three-clause
/// order and the four-clause partial operation.
struct BowtieSpace {
  std::vector<BowtiePoint> points;  // Lower block first, canonical order
  std::vector<std::uint8_t> leq;
  std::vector<int> comp;            // -1 = undefined

  int count() const { return static_cast<int>(points.size()); }
  bool le(int p, int q) const { return leq[static_cast<size_t>(p) * count() + q] != 0; }
  int compose(int p, int q) const { return comp[static_cast<size_t>(p) * count() + q]; }
  int index_of(const BowtiePoint& pt) const;

  /// View as a residuated space (order, composition, E = everything).
  ResiduatedSpace as_space() const;
};

BowtieSpace build_bowtie(const FilterPairContext& ctx);

/// The two-case map S(A) -> bowtie; asserted bijective and an order
/// isomorphism in both directions.
std::vector<int> alpha(const FilterPairContext& ctx, const BowtieSpace& bt);

/// Subbasic set W_(U,V) as a mask over bowtie points; U is an up-set of
/// skeleton-spectrum points, V of radical-spectrum points.
Mask w_set(const FilterPairContext& ctx, const BowtieSpace& bt, Mask u_set, Mask v_set);

/// Table lookup for the partial operation (absent = undefined, matching
/// the Whole outcome on the algebra side).
std::optional<BowtiePoint> compose_points(const BowtieSpace& bt, int p, int q);

/// The three-case description of the filter product over one site:
/// inside R_u the product descends to the radical, across the star
/// sandwich it is a starred radical residual, anywhere else it is the
/// whole algebra.  Every prime pair is classified and checked.
Report check_extrinsic_trichotomy(const FilterPairContext& ctx);

std::string bowtie_to_dot(const FilterPairContext& ctx, const BowtieSpace& bt);
std::string bowtie_to_json(const FilterPairContext& ctx, const BowtieSpace& bt);

}  // namespace rldual

#endif

#include "doctest.h"

#include <algorithm>

#include "rldual/dual_quadruple.hpp"
#include "rldual/fixtures.hpp"
#include "rldual/isomorphism.hpp"

using namespace rldual;

namespace {

// n-chain space with the join product and top n-1 (the spectrum shape of
// an n-element Goedel hoop)
ResiduatedSpace chain_space(int n) {
  ResiduatedSpace x;
  x.points = n;
  x.leq.assign(static_cast<size_t>(n) * n, 0);
  x.prod.assign(static_cast<size_t>(n) * n, -1);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p <= q) x.leq[static_cast<size_t>(p) * n + q] = 1;
      x.prod[static_cast<size_t>(p) * n + q] = std::max(p, q);
    }
  x.unit_set = full_mask(n);
  x.top = n - 1;
  return x;
}

DualQuadruple single_stone(const ResiduatedSpace& x, std::vector<int> delta) {
  DualQuadruple dq;
  dq.stone_points = 1;
  dq.space = x;
  std::vector<int> ident(x.points), to_top(x.points, *x.top);
  for (int p = 0; p < x.points; ++p) ident[p] = p;
  dq.upsilon = {ident, to_top};
  dq.delta_map = std::move(delta);
  return dq;
}

// Boolean algebra of subset masks of an n-point set
Algebra mask_boolean(int n) {
  std::vector<Mask> subsets;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    subsets.push_back(m);
    if (m == full_mask(n)) break;
  }
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    int ca = mask_count(a), cb = mask_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  const int sz = static_cast<int>(subsets.size());
  Algebra b;
  b.name = "P" + std::to_string(n);
  b.size = sz;
  b.leq.assign(static_cast<size_t>(sz) * sz, 0);
  b.mul.assign(static_cast<size_t>(sz) * sz, 0);
  auto index_of = [&](Mask m) {
    return static_cast<int>(std::find(subsets.begin(), subsets.end(), m) - subsets.begin());
  };
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      b.leq[static_cast<size_t>(i) * sz + j] = mask_subset(subsets[i], subsets[j]) ? 1 : 0;
      b.mul[static_cast<size_t>(i) * sz + j] = index_of(subsets[i] & subsets[j]);
    }
  b.one = index_of(full_mask(n));
  b.zero = 0;
  return b;
}

// (A(S), A(X), upsilon-preimage join, Delta-preimage nucleus)
AlgebraicQuadruple reconstruction_quadruple(const DualQuadruple& dq) {
  AlgebraicQuadruple q;
  q.skeleton = mask_boolean(dq.stone_points);
  q.radical = upset_algebra(dq.space, SpaceMode::Gmtl);

  std::vector<Mask> subsets;
  for (Mask m = 0; m <= full_mask(dq.stone_points); ++m) {
    subsets.push_back(m);
    if (m == full_mask(dq.stone_points)) break;
  }
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    int ca = mask_count(a), cb = mask_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<Mask> ups = upsets_of(dq.space);
  ups.erase(std::remove(ups.begin(), ups.end(), Mask{0}), ups.end());
  auto upset_index = [&](Mask m) {
    return static_cast<int>(std::find(ups.begin(), ups.end(), m) - ups.begin());
  };
  auto preimage = [&](const std::vector<int>& f, Mask v) {
    Mask out = 0;
    for (int p = 0; p < dq.space.points; ++p) {
      if (mask_has(v, f[p])) out |= mask_bit(p);
    }
    return out;
  };
  q.ext_join.assign(static_cast<size_t>(q.skeleton.size) * q.radical.size, 0);
  for (int bi = 0; bi < q.skeleton.size; ++bi)
    for (int ai = 0; ai < q.radical.size; ++ai)
      q.ext_join[static_cast<size_t>(bi) * q.radical.size + ai] =
          upset_index(preimage(dq.upsilon[subsets[bi]], ups[ai]));
  q.delta.map.resize(q.radical.size);
  for (int ai = 0; ai < q.radical.size; ++ai)
    q.delta.map[ai] = upset_index(preimage(dq.delta_map, ups[ai]));
  return q;
}

}  // namespace

TEST_CASE("extraction from the named fixtures") {
  DualQuadruple nm4 = extract_dual_quadruple(*builtin_fixture("nm4"));
  CHECK(nm4.stone_points == 1);
  CHECK(nm4.space.points == 2);
  CHECK(nm4.delta_map == std::vector<int>{0, 1});  // identity

  DualQuadruple g3 = extract_dual_quadruple(*builtin_fixture("g3"));
  CHECK(g3.stone_points == 1);
  CHECK(g3.space.points == 2);
  // constant-one nucleus dualizes to the constant-top closure
  REQUIRE(g3.space.top.has_value());
  for (int v : g3.delta_map) CHECK(v == *g3.space.top);

  DualQuadruple big = extract_dual_quadruple(*builtin_fixture("g3xg3"));
  CHECK(big.stone_points == 2);
  CHECK(big.space.points == 3);
  // the two singleton subsets act differently
  CHECK(big.upsilon[1] != big.upsilon[2]);
}

TEST_CASE("validation flags constructed defects") {
  // a non-idempotent closure on the 3-chain
  DualQuadruple bad = single_stone(chain_space(3), {1, 2, 2});
  Report r = validate_dual_quadruple(bad);
  REQUIRE_FALSE(r.passed());
  bool idem = false;
  for (const auto& v : r.violations) idem = idem || v.clause == "delta.idempotent";
  CHECK(idem);

  // upsilon for the empty subset must be the identity
  DualQuadruple bad2 = single_stone(chain_space(2), {0, 1});
  bad2.upsilon[0] = {1, 1};
  Report r2 = validate_dual_quadruple(bad2);
  REQUIRE_FALSE(r2.passed());
  bool v2 = false;
  for (const auto& v : r2.violations) v2 = v2 || v.clause == "join.V2.nu_zero_identity";
  CHECK(v2);
}

TEST_CASE("dual fixing") {
  // a singleton Stone space fixes everything
  DualQuadruple dq = single_stone(chain_space(2), {0, 1});
  REQUIRE(validate_dual_quadruple(dq).passed());
  for (int x = 0; x < 2; ++x) CHECK(dual_fixes(dq, 0, x));

  // in g3xg3 each ultrafilter fixes its own factor's points plus the top
  DualQuadruple big = extract_dual_quadruple(*builtin_fixture("g3xg3"));
  int fixed_total = 0;
  for (int u = 0; u < 2; ++u) {
    CHECK(dual_fixes(big, u, *big.space.top));
    for (int x = 0; x < big.space.points; ++x) fixed_total += dual_fixes(big, u, x) ? 1 : 0;
  }
  CHECK(fixed_total == 4);
}

TEST_CASE("rotation of the trivial dual quadruple") {
  ResiduatedSpace pt;
  pt.points = 1;
  pt.leq = {1};
  pt.prod = {0};
  pt.unit_set = 1;
  pt.top = 0;
  DualQuadruple dq = single_stone(pt, {0});
  RotationSpace rot = rotate(dq);
  CHECK(rot.count() == 1);
  CHECK_FALSE(rot.points[0].upper);
  Algebra two = upset_algebra(rot.as_space(), SpaceMode::Mtl);
  CHECK(find_isomorphism(two, godel_chain(2)).has_value());
}

TEST_CASE("rotations reproduce the fixture spectra") {
  for (const char* name : {"nm4", "g3", "g3xg3", "nm6"}) {
    CAPTURE(name);
    Algebra a = *builtin_fixture(name);
    RotationSpace rot = rotate(extract_dual_quadruple(a));
    ResiduatedSpace spec = spectrum_space(a);
    CHECK(rot.count() == spec.points);
    CHECK(find_space_isomorphism(space_shape(rot.as_space()), space_shape(spec)).has_value());
  }
}

TEST_CASE("abstract dual quadruple with the identity closure") {
  // one Stone point over the 2-chain: the shape of nm4
  DualQuadruple dq = single_stone(chain_space(2), {0, 1});
  REQUIRE(validate_dual_quadruple(dq).passed());
  RotationSpace rot = rotate(dq);
  CHECK(rot.count() == 3);
  Algebra composed = upset_algebra(rot.as_space(), SpaceMode::Mtl);
  CHECK(is_sbp_algebra(composed));
  CHECK(find_isomorphism(composed, nm_chain(4)).has_value());

  AlgebraicQuadruple expected = reconstruction_quadruple(dq);
  REQUIRE(validate_quadruple(expected).passed());
  CHECK(find_quadruple_isomorphism(extract_quadruple(composed), expected).has_value());
}

TEST_CASE("abstract dual quadruple with the constant-top closure") {
  DualQuadruple dq = single_stone(chain_space(2), {1, 1});
  REQUIRE(validate_dual_quadruple(dq).passed());
  RotationSpace rot = rotate(dq);
  CHECK(rot.count() == 2);  // the decorated copy of the top is dropped
  Algebra composed = upset_algebra(rot.as_space(), SpaceMode::Mtl);
  CHECK(find_isomorphism(composed, godel_chain(3)).has_value());

  AlgebraicQuadruple expected = reconstruction_quadruple(dq);
  CHECK(find_quadruple_isomorphism(extract_quadruple(composed), expected).has_value());
}

TEST_CASE("abstract two-point Stone space") {
  // X: two incomparable points under a common top
  ResiduatedSpace x;
  x.points = 3;
  x.leq.assign(9, 0);
  auto set_le = [&](int p, int q) { x.leq[static_cast<size_t>(p) * 3 + q] = 1; };
  for (int p = 0; p < 3; ++p) set_le(p, p);
  set_le(0, 2);
  set_le(1, 2);
  x.prod = {0, 2, 2, 2, 1, 2, 2, 2, 2};
  x.unit_set = full_mask(3);
  x.top = 2;

  DualQuadruple dq;
  dq.stone_points = 2;
  dq.space = x;
  dq.upsilon = {
      {0, 1, 2},  // empty subset: identity
      {2, 1, 2},  // {0}: collapse the first factor
      {0, 2, 2},  // {1}: collapse the second factor
      {2, 2, 2},  // everything: constantly top
  };
  dq.delta_map = {0, 1, 2};
  REQUIRE(validate_dual_quadruple(dq).passed());

  CHECK(dual_fixes(dq, 0, 0));
  CHECK_FALSE(dual_fixes(dq, 0, 1));
  CHECK(dual_fixes(dq, 1, 1));

  RotationSpace rot = rotate(dq);
  CHECK(rot.count() == 6);
  Algebra composed = upset_algebra(rot.as_space(), SpaceMode::Mtl);
  CHECK(is_sbp_algebra(composed));
  Algebra nm4sq = product(nm_chain(4), nm_chain(4));
  CHECK(find_isomorphism(composed, nm4sq).has_value());

  AlgebraicQuadruple expected = reconstruction_quadruple(dq);
  CHECK(find_quadruple_isomorphism(extract_quadruple(composed), expected).has_value());
}

TEST_CASE("upsilon maps are the duals of the join endomorphisms") {
  for (const char* name : {"nm4", "g3", "g3xg3", "nm4xg3"}) {
    CAPTURE(name);
    Algebra a = *builtin_fixture(name);
    FilterPairContext ctx(a);
    DualQuadruple dq = extract_dual_quadruple(ctx);
    const AlgebraicQuadruple& q = ctx.quadruple();
    const Spectrum& su = ctx.skel_spec();
    for (Elem u = 0; u < q.skeleton.size; ++u) {
      std::vector<Elem> nu_u(q.radical.size);
      for (Elem x = 0; x < q.radical.size; ++x) nu_u[x] = q.nu(u, x);
      std::vector<int> dual_nu = dualize_hom(q.radical, q.radical, nu_u);
      Mask phi_u = 0;
      for (int i = 0; i < su.count(); ++i) {
        if (mask_has(su.filter(i), u)) phi_u |= mask_bit(i);
      }
      CHECK(dual_nu == dq.upsilon[phi_u]);
    }
  }
}

TEST_CASE("mu splitting clauses") {
  for (const char* name : {"nm4", "g3xg3", "nm4xg3"}) {
    CAPTURE(name);
    FilterPairContext ctx(*builtin_fixture(name));
    CHECK(check_mu_splitting(ctx).passed());
  }
}

TEST_CASE("the full commuting square") {
  for (const char* name : {"nm4", "g3", "bool4", "nm4xg3"}) {
    CAPTURE(name);
    CommuteSquare sq = commute_square(*builtin_fixture(name));
    CHECK(sq.rotation_matches_spectrum);
    CHECK(sq.bowtie_matches_spectrum);
    CHECK(sq.upsets_match_algebra);
    CHECK(sq.compose_matches_algebra);
  }
}

TEST_CASE("rotation w-sets and emitters") {
  DualQuadruple dq = single_stone(chain_space(2), {0, 1});
  RotationSpace rot = rotate(dq);
  // U = S, V = {top}: the lower pair at the top plus the decorated point
  Mask w = rot.w_set(dq, mask_bit(0), mask_bit(1));
  CHECK(mask_has(w, rot.index_of({false, 0, 1})));
  CHECK(mask_has(w, rot.index_of({true, 0, 0})));
  CHECK_FALSE(mask_has(w, rot.index_of({false, 0, 0})));
  CHECK_THROWS_AS(rot.w_set(dq, mask_bit(0), mask_bit(0)), NotUpset);

  std::string dot = rotation_to_dot(rot);
  CHECK(dot.find("rank=max") != std::string::npos);
}

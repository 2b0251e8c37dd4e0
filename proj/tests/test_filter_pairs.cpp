#include "doctest.h"

#include "rldual/dual_quadruple.hpp"
#include "rldual/filter_pairs.hpp"
#include "rldual/fixtures.hpp"

using namespace rldual;

namespace {

Mask of_elems(std::initializer_list<Elem> xs) {
  Mask m = 0;
  for (Elem x : xs) m |= mask_bit(x);
  return m;
}

}  // namespace

TEST_CASE("mu maps on nm4") {
  FilterPairContext ctx(*builtin_fixture("nm4"));
  const Spectrum& sx = ctx.rad_spec();
  PrimeFilterId unit = sx.id_of(of_elems({1}));   // radical indices: 0 = b, 1 = 1
  PrimeFilterId whole = *sx.whole_point();
  // mu_0 is the identity, mu_1 is constantly the whole radical
  CHECK(ctx.mu(0, unit) == unit);
  CHECK(ctx.mu(0, whole) == whole);
  CHECK(ctx.mu(1, unit) == whole);
  CHECK(ctx.mu(1, whole) == whole);
}

TEST_CASE("fixing pairs") {
  FilterPairContext nm4(*builtin_fixture("nm4"));
  PrimeFilterId u0 = 0;  // the unique ultrafilter of a two-element skeleton
  CHECK(nm4.fixes(u0, nm4.rad_spec().id_of(of_elems({1}))));
  CHECK(nm4.fixes(u0, *nm4.rad_spec().whole_point()));

  // crossing the factors of g3xg3 fails to fix
  FilterPairContext pp(*builtin_fixture("g3xg3"));
  int fixing = 0, total = 0;
  for (int u = 0; u < pp.skel_spec().count(); ++u)
    for (int x = 0; x < pp.rad_spec().count(); ++x) {
      ++total;
      if (pp.fixes(u, x)) ++fixing;
    }
  CHECK(total == 6);   // 2 ultrafilters x 3 generalized radical primes
  CHECK(fixing == 4);  // the two crossings are rejected
}

TEST_CASE("the f-filter characterizes the fixing ultrafilters") {
  FilterPairContext pp(*builtin_fixture("g3xg3"));
  const Spectrum& su = pp.skel_spec();
  for (int x = 0; x < pp.rad_spec().count(); ++x) {
    Mask f = pp.f_filter(x);
    CHECK(f != 0);
    for (int u = 0; u < su.count(); ++u)
      CHECK(pp.fixes(u, x) == mask_subset(f, su.filter(u)));
  }
  // a proper radical prime of one factor pins down that factor's atom
  int pinned = 0;
  for (int x = 0; x < pp.rad_spec().count(); ++x) {
    if (pp.rad_spec().whole_point() == x) continue;
    int count = 0;
    for (int u = 0; u < su.count(); ++u) count += pp.fixes(u, x) ? 1 : 0;
    if (count == 1) ++pinned;
  }
  CHECK(pinned == 2);
}

TEST_CASE("bowtie carriers of the fixtures") {
  struct Expect {
    const char* name;
    int points;
    int upper;
  };
  for (Expect e : {Expect{"nm4", 3, 1}, Expect{"g3", 2, 0}, Expect{"g3xg3", 4, 0},
                   Expect{"nm4xg3", 5, 1}, Expect{"bool4", 2, 0}, Expect{"nm6", 5, 2}}) {
    CAPTURE(e.name);
    FilterPairContext ctx(*builtin_fixture(e.name));
    BowtieSpace bt = build_bowtie(ctx);
    CHECK(bt.count() == e.points);
    int upper = 0;
    for (const BowtiePoint& p : bt.points) upper += p.upper ? 1 : 0;
    CHECK(upper == e.upper);
    CHECK(bt.count() == ctx.ambient_spec().count());
  }
}

TEST_CASE("alpha on nm4 sends the top filter to the decorated point") {
  Algebra nm4 = *builtin_fixture("nm4");
  FilterPairContext ctx(nm4);
  BowtieSpace bt = build_bowtie(ctx);
  std::vector<int> al = alpha(ctx, bt);
  const Spectrum& sa = ctx.ambient_spec();

  int unit = sa.id_of(of_elems({3}));
  int mid = sa.id_of(of_elems({2, 3}));
  int top = sa.id_of(of_elems({1, 2, 3}));
  CHECK_FALSE(bt.points[al[unit]].upper);
  CHECK_FALSE(bt.points[al[mid]].upper);
  CHECK(bt.points[al[top]].upper);
  // the mid filter traces to the whole radical
  CHECK(bt.points[al[mid]].x == *ctx.rad_spec().whole_point());
}

TEST_CASE("alpha sends the radical-generated filters to whole-radical pairs") {
  for (const char* name : {"nm4", "g3xg3", "nm4xg3"}) {
    CAPTURE(name);
    Algebra a = *builtin_fixture(name);
    FilterPairContext ctx(a);
    BowtieSpace bt = build_bowtie(ctx);
    std::vector<int> al = alpha(ctx, bt);
    Mask rad_amb = 0;
    for (Elem e : ctx.parts().rad_embed) rad_amb |= mask_bit(e);
    for (int u = 0; u < ctx.skel_spec().count(); ++u) {
      Mask r_u = generated_filter(a, ctx.skeleton_filter_ambient(u) | rad_amb);
      int point = al[ctx.ambient_spec().id_of(r_u)];
      CHECK(bt.points[point] ==
            BowtiePoint{false, u, *ctx.rad_spec().whole_point()});
    }
  }
}

TEST_CASE("partial operation against the filter product") {
  Algebra nm4 = *builtin_fixture("nm4");
  FilterPairContext ctx(nm4);
  BowtieSpace bt = build_bowtie(ctx);
  std::vector<int> al = alpha(ctx, bt);
  const Spectrum& sa = ctx.ambient_spec();

  int unit = al[sa.id_of(of_elems({3}))];
  int mid = al[sa.id_of(of_elems({2, 3}))];
  int top = al[sa.id_of(of_elems({1, 2, 3}))];

  // lower * lower stays lower
  REQUIRE(compose_points(bt, mid, mid).has_value());
  CHECK(*compose_points(bt, mid, mid) == bt.points[mid]);
  // the unit pair composes with the decorated point
  REQUIRE(compose_points(bt, unit, top).has_value());
  CHECK(*compose_points(bt, unit, top) == bt.points[top]);
  // whole on the algebra side means undefined here
  CHECK_FALSE(compose_points(bt, mid, top).has_value());
  CHECK_FALSE(compose_points(bt, top, top).has_value());

  Report tr = check_alpha_transport(ctx, bt, al);
  CHECK(tr.passed());
}

TEST_CASE("w-sets of the worked examples") {
  Algebra nm4 = *builtin_fixture("nm4");
  FilterPairContext ctx(nm4);
  BowtieSpace bt = build_bowtie(ctx);
  std::vector<int> al = alpha(ctx, bt);
  const Spectrum& sa = ctx.ambient_spec();
  const Spectrum& su = ctx.skel_spec();
  const Spectrum& sx = ctx.rad_spec();

  auto phi_u = [&](Elem u) {
    Mask m = 0;
    for (int i = 0; i < su.count(); ++i) {
      if (mask_has(su.filter(i), u)) m |= mask_bit(i);
    }
    return m;
  };
  auto phi_x = [&](Elem x) {
    Mask m = 0;
    for (int i = 0; i < sx.count(); ++i) {
      if (mask_has(sx.filter(i), x)) m |= mask_bit(i);
    }
    return m;
  };

  // U = phi(1), V = phi(b): the whole-radical pair and the decorated point
  Mask w = w_set(ctx, bt, phi_u(1), phi_x(0));  // skeleton 1 is local 1; radical b is local 0
  Mask expected = 0;
  expected |= mask_bit(bt.index_of({false, 0, *sx.whole_point()}));
  for (int p = 0; p < bt.count(); ++p) {
    if (bt.points[p].upper) expected |= mask_bit(p);
  }
  CHECK(w == expected);
  // preimage under alpha is phi(b), with b = ambient element 2
  Mask pre = 0, phi_b = 0;
  for (int i = 0; i < sa.count(); ++i) {
    if (mask_has(w, al[i])) pre |= mask_bit(i);
    if (mask_has(sa.filter(i), 2)) phi_b |= mask_bit(i);
  }
  CHECK(pre == phi_b);

  // U = empty, V = phi(1): nothing remains
  CHECK(w_set(ctx, bt, 0, phi_x(1)) == 0);

  // a non-up-set V is rejected
  Mask not_upset = mask_bit(sx.id_of(of_elems({1})));
  CHECK_THROWS_AS(w_set(ctx, bt, phi_u(1), not_upset), NotUpset);
}

TEST_CASE("g3 w-set example") {
  Algebra g3 = *builtin_fixture("g3");
  FilterPairContext ctx(g3);
  BowtieSpace bt = build_bowtie(ctx);
  std::vector<int> al = alpha(ctx, bt);
  const Spectrum& sx = ctx.rad_spec();

  Mask u_all = full_mask(ctx.skel_spec().count());
  Mask v_half = 0;  // phi(1/2) over the radical spectrum: only the whole radical
  for (int i = 0; i < sx.count(); ++i) {
    if (mask_has(sx.filter(i), 0)) v_half |= mask_bit(i);
  }
  Mask w = w_set(ctx, bt, u_all, v_half);
  CHECK(mask_count(w) == 1);
  // its alpha-preimage is phi(1/2) = { {1/2,1} }
  int point = 0;
  while (!mask_has(w, point)) ++point;
  int pre = 0;
  for (int i = 0; i < ctx.ambient_spec().count(); ++i) {
    if (al[i] == point) pre = i;
  }
  CHECK(ctx.ambient_spec().filter(pre) == of_elems({1, 2}));
}

TEST_CASE("bowtie emitters") {
  FilterPairContext ctx(*builtin_fixture("nm4"));
  BowtieSpace bt = build_bowtie(ctx);
  std::string dot = bowtie_to_dot(ctx, bt);
  CHECK(dot.find("rank=min") != std::string::npos);
  CHECK(dot.find("rank=max") != std::string::npos);
  CHECK(dot.find("alpha") != std::string::npos);
  std::string json = bowtie_to_json(ctx, bt);
  CHECK(json.find("\"upper\"") != std::string::npos);
}

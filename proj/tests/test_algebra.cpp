#include "doctest.h"

#include "rldual/algebra.hpp"
#include "rldual/chains.hpp"
#include "rldual/fixtures.hpp"
#include "rldual/isomorphism.hpp"

using namespace rldual;

namespace {

// hand-written tables, independent of the fixture builders
Algebra make_g3() {
  Algebra a;
  a.name = "g3_hand";
  a.size = 3;
  a.leq = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  a.mul = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  a.one = 2;
  a.zero = 0;
  return a;
}

// 0 < a < b < 1 nilpotent minimum: x*y = 0 iff x+y <= 3
Algebra make_nm4() {
  Algebra a;
  a.name = "nm4_hand";
  a.size = 4;
  a.leq = {1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  a.mul = {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  a.one = 3;
  a.zero = 0;
  return a;
}

Algebra trivial_algebra() {
  Algebra a;
  a.name = "one";
  a.size = 1;
  a.leq = {1};
  a.mul = {0};
  a.one = 0;
  a.zero = 0;
  return a;
}

// independent residuum oracle: scan d from the top of the order
Elem res_oracle(const Algebra& a, Elem x, Elem y) {
  Elem best = -1;
  for (Elem d = 0; d < a.size; ++d) {
    if (!a.le(a.prod(x, d), y)) continue;
    if (best < 0 || (a.le(best, d) && best != d)) best = d;
  }
  return best;
}

}  // namespace

TEST_CASE("validate accepts the Goedel chain and the trivial algebra") {
  CHECK(validate(make_g3()).passed());
  CHECK(validate(trivial_algebra()).passed());
  CHECK(validate(make_nm4()).passed());
}

TEST_CASE("validate flags a broken monoid table with a witness") {
  Algebra bad = make_g3();
  bad.mul[1 * 3 + 1] = 2;  // 1/2 * 1/2 := 1
  bad.mul[1 * 3 + 1] = 2;
  Report r = validate(bad);
  REQUIRE_FALSE(r.passed());
  bool order_or_integral = false;
  for (const auto& v : r.violations) {
    if (v.clause == "monoid.order_preserving" || v.clause == "integral")
      order_or_integral = true;
    CHECK_FALSE(v.witness.empty());
  }
  CHECK(order_or_integral);
}

TEST_CASE("validate rejects inconsistent table shapes") {
  Algebra bad = make_g3();
  bad.mul.pop_back();
  CHECK_THROWS_AS(validate(bad), DimensionMismatch);
}

TEST_CASE("residuum matches the max-scan oracle") {
  Algebra g3 = make_g3();
  CHECK(g3.res(1, 0) == 0);  // so ~(1/2) = 0
  CHECK(g3.res(1, 0) == res_oracle(g3, 1, 0));

  Algebra nm4 = make_nm4();
  CHECK(nm4.res(2, 1) == 1);  // res(b, a) = max(~b, a) = a
  for (Elem x = 0; x < nm4.size; ++x) {
    CHECK(nm4.res(nm4.one, x) == x);
    for (Elem y = 0; y < nm4.size; ++y) CHECK(nm4.res(x, y) == res_oracle(nm4, x, y));
  }
}

TEST_CASE("residuation adjunction holds across the corpus") {
  for (const Algebra& a : bounded_corpus(4)) {
    for (Elem x = 0; x < a.size; ++x)
      for (Elem y = 0; y < a.size; ++y)
        for (Elem d = 0; d < a.size; ++d)
          CHECK(a.le(a.prod(x, d), y) == a.le(d, a.res(x, y)));
  }
}

TEST_CASE("classification of the standard fixtures") {
  ClassificationReport g3 = classify(make_g3());
  CHECK(g3.is_mtl());
  CHECK(g3.smtl->holds);
  CHECK(g3.sbp->holds);
  CHECK_FALSE(g3.has_zero_divisors->holds);
  CHECK(g3.directly_indecomposable->holds);

  ClassificationReport nm4 = classify(make_nm4());
  CHECK(nm4.is_mtl());
  CHECK(nm4.sbp->holds);
  CHECK(nm4.ibp->holds);
  CHECK_FALSE(nm4.smtl->holds);

  Algebra prod_alg = product(make_g3(), make_g3());
  ClassificationReport pp = classify(prod_alg);
  CHECK(pp.has_zero_divisors->holds);
  CHECK_FALSE(pp.directly_indecomposable->holds);
  // witness: two nonzero factors multiplying to zero
  REQUIRE(pp.has_zero_divisors->witness.size() == 2);
  Elem w0 = pp.has_zero_divisors->witness[0];
  Elem w1 = pp.has_zero_divisors->witness[1];
  CHECK(prod_alg.prod(w0, w1) == *prod_alg.zero);

  // Lukasiewicz fails the second sbp identity
  ClassificationReport luk = classify(lukasiewicz_chain(3));
  CHECK(luk.is_mtl());
  CHECK_FALSE(luk.sbp->holds);
}

TEST_CASE("the fourteen arithmetic laws") {
  for (const Algebra& a : {make_g3(), make_nm4()}) {
    for (const IdentityCheck& c : check_cidrl_identities(a)) {
      CAPTURE(c.id);
      CHECK(c.holds);
    }
  }
  // item 14 is an equality everywhere on an involutive chain
  Algebra nm4 = make_nm4();
  for (Elem x = 0; x < nm4.size; ++x) CHECK(nm4.neg(nm4.neg(x)) == x);
}

TEST_CASE("Boolean skeleton") {
  auto [s3, e3] = boolean_skeleton(make_g3());
  CHECK(s3.size == 2);
  CHECK(e3 == std::vector<Elem>{0, 2});

  auto [s9, e9] = boolean_skeleton(product(make_g3(), make_g3()));
  CHECK(s9.size == 4);

  Algebra b4 = product(godel_chain(2), godel_chain(2));
  auto [sb, eb] = boolean_skeleton(b4);
  CHECK(sb.size == 4);
  CHECK(find_isomorphism(sb, b4).has_value());
}

TEST_CASE("radical and coradical") {
  Algebra g3 = make_g3();
  CHECK(radical(g3) == (mask_bit(1) | mask_bit(2)));
  CHECK(coradical(g3) == mask_bit(0));

  Algebra nm4 = make_nm4();
  CHECK(radical(nm4) == (mask_bit(2) | mask_bit(3)));
  CHECK(coradical(nm4) == (mask_bit(0) | mask_bit(1)));

  Algebra b2 = godel_chain(2);
  CHECK(radical(b2) == mask_bit(1));
  CHECK(coradical(b2) == mask_bit(0));

  CHECK_THROWS_AS(radical(trivial_algebra()), NotSbp);
}

TEST_CASE("radical algebra inherits the operations") {
  auto [r3, e3] = radical_algebra(make_g3());
  CHECK(r3.size == 2);
  CHECK_FALSE(r3.bounded());
  CHECK(r3.prod(0, 0) == 0);  // Goedel 2-hoop

  auto [r4, e4] = radical_algebra(make_nm4());
  CHECK(r4.size == 2);
  CHECK(r4.prod(0, 0) == 0);  // b*b = b

  auto [r1, e1] = radical_algebra(godel_chain(2));
  CHECK(r1.size == 1);
}

TEST_CASE("double negation nucleus") {
  UnaryTable d4 = double_negation_nucleus(make_nm4());
  CHECK(d4.map == std::vector<Elem>{0, 1});  // identity on {b,1}

  UnaryTable d3 = double_negation_nucleus(make_g3());
  CHECK(d3.map == std::vector<Elem>{1, 1});  // constantly 1

  // every involutive corpus member gets the identity
  for (const Algebra& a : sbp_corpus(4)) {
    if (!classify(a).ibp->holds) continue;
    UnaryTable d = double_negation_nucleus(a);
    for (int i = 0; i < d.size(); ++i) CHECK(d(i) == i);
  }
}

TEST_CASE("wdl-admissibility") {
  auto [hoop, embed] = radical_algebra(make_nm4());
  UnaryTable ident{{0, 1}};
  CHECK(is_wdl_admissible(hoop, ident).admissible);
  UnaryTable const_one{{1, 1}};
  CHECK(is_wdl_admissible(hoop, const_one).admissible);

  // 3-chain hoop x < y < 1 with the minimum product, delta x = y
  Algebra h;
  h.name = "h3";
  h.size = 3;
  h.leq = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  h.mul = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  h.one = 2;
  REQUIRE(validate(h).passed());
  CHECK(is_wdl_admissible(h, UnaryTable{{1, 1, 2}}).admissible);

  WdlCheck bad = is_wdl_admissible(h, UnaryTable{{1, 0, 2}});  // not monotone
  CHECK_FALSE(bad.admissible);
  CHECK_FALSE(bad.clause.empty());
}

TEST_CASE("bottom adjunction round trips") {
  auto [hoop2, e] = radical_algebra(make_g3());
  Algebra g3_again = add_bottom(hoop2);
  Algebra g3 = godel_chain(3);
  CHECK(g3_again.size == g3.size);
  CHECK(g3_again.leq == g3.leq);
  CHECK(g3_again.mul == g3.mul);
  CHECK(g3_again.one == g3.one);
  CHECK(g3_again.zero == g3.zero);

  Algebra stripped = strip_bottom(make_g3());
  CHECK(stripped.size == 2);
  CHECK_FALSE(stripped.bounded());

  CHECK_THROWS_AS(strip_bottom(product(make_g3(), make_g3())), HasZeroDivisors);
}

TEST_CASE("products and the ordinal sum") {
  Algebra p = product(make_g3(), make_g3());
  CHECK(p.size == 9);
  CHECK(validate(p).passed());

  Algebra trivial_hoop;
  trivial_hoop.name = "h1";
  trivial_hoop.size = 1;
  trivial_hoop.leq = {1};
  trivial_hoop.mul = {0};
  trivial_hoop.one = 0;
  Algebra two = ordinal_sum_2_h(trivial_hoop);
  CHECK(two.size == 2);
  CHECK(find_isomorphism(two, godel_chain(2)).has_value());

  Algebra nm4xg3 = product(make_nm4(), make_g3());
  CHECK(nm4xg3.size == 12);
  CHECK(is_sbp_algebra(nm4xg3));
  // radical of the product is the product of the radicals
  Mask rad_nm4 = radical(make_nm4());
  Mask rad_g3 = radical(make_g3());
  Mask expected = 0;
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 3; ++y) {
      if (mask_has(rad_nm4, x) && mask_has(rad_g3, y)) expected |= mask_bit(x * 3 + y);
    }
  CHECK(radical(nm4xg3) == expected);

  CHECK_THROWS_AS(product(make_g3(), strip_bottom(make_g3())), ModeMismatch);
}

TEST_CASE("isomorphism search") {
  Algebra g3 = make_g3();
  auto ident = find_isomorphism(g3, godel_chain(3));
  REQUIRE(ident.has_value());
  CHECK(*ident == std::vector<Elem>{0, 1, 2});

  CHECK_FALSE(find_isomorphism(g3, make_nm4()).has_value());

  // two presentations of the four-element Boolean algebra
  Algebra b4 = product(godel_chain(2), godel_chain(2));
  Algebra b4_shuffled = b4;
  // swap the two atoms consistently
  std::vector<Elem> perm = {0, 2, 1, 3};
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) {
      b4_shuffled.leq[static_cast<size_t>(perm[x]) * 4 + perm[y]] = b4.le(x, y) ? 1 : 0;
      b4_shuffled.mul[static_cast<size_t>(perm[x]) * 4 + perm[y]] = perm[b4.prod(x, y)];
    }
  CHECK(find_isomorphism(b4, b4_shuffled).has_value());
}

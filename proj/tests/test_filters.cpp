#include "doctest.h"

#include <algorithm>

#include "rldual/filters.hpp"
#include "rldual/fixtures.hpp"

using namespace rldual;

namespace {

// independent oracle: scan all 2^n subsets for proper prime filters
std::vector<Mask> prime_filters_brute(const Algebra& a) {
  std::vector<Mask> out;
  for (Mask m = 1; m <= a.carrier_mask(); ++m) {
    if (m == a.carrier_mask()) {
      if (!a.bounded()) out.push_back(m);  // generalized top
      break;
    }
    bool filter = true;
    for (Elem x = 0; x < a.size && filter; ++x) {
      if (!mask_has(m, x)) continue;
      for (Elem y = 0; y < a.size && filter; ++y) {
        if (a.le(x, y) && !mask_has(m, y)) filter = false;
        if (mask_has(m, y) && !mask_has(m, a.meet(x, y))) filter = false;
      }
    }
    if (!filter) continue;
    bool prime = true;
    for (Elem x = 0; x < a.size && prime; ++x)
      for (Elem y = 0; y < a.size && prime; ++y) {
        if (mask_has(m, a.join(x, y)) && !mask_has(m, x) && !mask_has(m, y)) prime = false;
      }
    if (prime) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    int cx = mask_count(x), cy = mask_count(y);
    return cx != cy ? cx < cy : x < y;
  });
  return out;
}

Mask of_elems(std::initializer_list<Elem> xs) {
  Mask m = 0;
  for (Elem x : xs) m |= mask_bit(x);
  return m;
}

}  // namespace

TEST_CASE("prime filter enumeration matches the subset oracle") {
  for (const Algebra& a : bounded_corpus(4)) {
    CAPTURE(a.name);
    CHECK(list_prime_filters(a) == prime_filters_brute(a));
  }
  // GMTL mode too, via the radicals
  for (const Algebra& a : sbp_corpus(4)) {
    Algebra rad = radical_algebra(a).first;
    CHECK(list_prime_filters(rad) == prime_filters_brute(rad));
  }
}

TEST_CASE("canonical spectra of the named fixtures") {
  Algebra g3 = *builtin_fixture("g3");
  CHECK(list_prime_filters(g3) == std::vector<Mask>{of_elems({2}), of_elems({1, 2})});

  Algebra nm4 = *builtin_fixture("nm4");
  CHECK(list_prime_filters(nm4) ==
        std::vector<Mask>{of_elems({3}), of_elems({2, 3}), of_elems({1, 2, 3})});

  Algebra b2 = *builtin_fixture("bool2");
  CHECK(list_prime_filters(b2) == std::vector<Mask>{of_elems({1})});
}

TEST_CASE("generated filters") {
  Algebra g3 = *builtin_fixture("g3");
  CHECK(generated_filter(g3, of_elems({1})) == of_elems({1, 2}));
  CHECK(generated_filter(g3, of_elems({2})) == of_elems({2}));

  Algebra nm4 = *builtin_fixture("nm4");
  CHECK(generated_filter(nm4, of_elems({1, 2})) == of_elems({1, 2, 3}));

  CHECK_THROWS_AS(generated_filter(g3, 0), Error);
}

TEST_CASE("filter product on nm4") {
  Algebra nm4 = *builtin_fixture("nm4");
  Spectrum s(nm4);
  PrimeFilterId unit = s.id_of(of_elems({3}));
  PrimeFilterId mid = s.id_of(of_elems({2, 3}));
  PrimeFilterId top = s.id_of(of_elems({1, 2, 3}));

  CHECK(s.bullet(mid, mid) == BulletOutcome::at(mid));
  CHECK(s.bullet(top, mid).is_whole());
  CHECK(s.bullet(top, top).is_whole());
  for (PrimeFilterId f : {unit, mid, top}) CHECK(s.bullet(unit, f) == BulletOutcome::at(f));

  CHECK(filter_bullet_mask(nm4, of_elems({2, 3}), of_elems({2, 3})) == of_elems({2, 3}));
  CHECK_THROWS_AS(filter_bullet_mask(nm4, of_elems({1, 3}), of_elems({3})), NotPrime);
}

TEST_CASE("partial residual on nm4") {
  Algebra nm4 = *builtin_fixture("nm4");
  Spectrum s(nm4);
  PrimeFilterId unit = s.id_of(of_elems({3}));
  PrimeFilterId mid = s.id_of(of_elems({2, 3}));
  PrimeFilterId top = s.id_of(of_elems({1, 2, 3}));

  CHECK(s.arrow(mid, mid) == mid);
  CHECK_FALSE(s.arrow(top, unit).has_value());
  // unit adjunction: {1} => c is the largest a with a <= c
  CHECK(s.arrow(unit, mid) == mid);
  CHECK(s.arrow(unit, top) == top);

  // adjunction, exhaustively
  for (int a = 0; a < s.count(); ++a)
    for (int b = 0; b < s.count(); ++b)
      for (int c = 0; c < s.count(); ++c) {
        bool lhs = !s.bullet(a, b).is_whole() && s.included(s.bullet(a, b).id(), c);
        auto arr = s.arrow(b, c);
        bool rhs = arr && s.included(a, *arr);
        CHECK(lhs == rhs);
      }

  CHECK(filter_arrow(nm4, of_elems({2, 3}), of_elems({2, 3})) == of_elems({2, 3}));
  CHECK_FALSE(filter_arrow(nm4, of_elems({1, 2, 3}), of_elems({3})).has_value());
}

TEST_CASE("Routley star on nm4") {
  Algebra nm4 = *builtin_fixture("nm4");
  CHECK(routley_star(nm4, of_elems({3})) == of_elems({1, 2, 3}));
  CHECK(routley_star(nm4, of_elems({2, 3})) == of_elems({2, 3}));
  CHECK(routley_star(nm4, of_elems({1, 2, 3})) == of_elems({3}));

  // order-reversing across the corpus
  for (const Algebra& a : sbp_corpus(4)) {
    Spectrum s(a);
    for (int i = 0; i < s.count(); ++i)
      for (int j = 0; j < s.count(); ++j) {
        if (s.included(i, j)) CHECK(s.included(s.star(j), s.star(i)));
      }
  }
}

TEST_CASE("whole outcome never appears in GMTL mode") {
  for (const Algebra& a : sbp_corpus(4)) {
    Algebra rad = radical_algebra(a).first;
    Spectrum s(rad);
    for (int i = 0; i < s.count(); ++i)
      for (int j = 0; j < s.count(); ++j) CHECK_FALSE(s.bullet(i, j).is_whole());
  }
}

TEST_CASE("spectrum json lists tables with sentinels") {
  Algebra nm4 = *builtin_fixture("nm4");
  Spectrum s(nm4);
  std::string j = spectrum_to_json(s);
  CHECK(j.find("\"whole\"") != std::string::npos);
  CHECK(j.find("\"none\"") != std::string::npos);
  CHECK(j.find("\"star\"") != std::string::npos);
}

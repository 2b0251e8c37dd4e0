#include "rldual/filters.hpp"

#include <algorithm>

#include "json.hpp"

namespace rldual {

Mask upward_closure(const Algebra& a, Mask s) {
  Mask out = 0;
  for (Elem x = 0; x < a.size; ++x) {
    if (!mask_has(s, x)) continue;
    for (Elem y = 0; y < a.size; ++y) {
      if (a.le(x, y)) out |= mask_bit(y);
    }
  }
  return out;
}

Mask generated_filter(const Algebra& a, Mask subset) {
  if (subset == 0) throw Error("generated_filter needs a nonempty subset");
  Elem m = -1;
  for (Elem x = 0; x < a.size; ++x) {
    if (!mask_has(subset, x)) continue;
    m = (m < 0) ? x : a.meet(m, x);
  }
  return upward_closure(a, mask_bit(m));
}

bool is_filter(const Algebra& a, Mask f) {
  if (f == 0) return false;
  for (Elem x = 0; x < a.size; ++x) {
    if (!mask_has(f, x)) continue;
    for (Elem y = 0; y < a.size; ++y) {
      if (a.le(x, y) && !mask_has(f, y)) return false;
      if (mask_has(f, y) && !mask_has(f, a.meet(x, y))) return false;
    }
  }
  return true;
}

bool is_prime_filter(const Algebra& a, Mask f) {
  if (!is_filter(a, f) || f == a.carrier_mask()) return false;
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem y = 0; y < a.size; ++y) {
      if (mask_has(f, a.join(x, y)) && !mask_has(f, x) && !mask_has(f, y)) return false;
    }
  }
  return true;
}

std::vector<Mask> list_prime_filters(const Algebra& a) {
  // Filters of a finite lattice are the principal up-sets; a principal
  // up-set is prime exactly when its generator is join-prime.  The
  // brute-force subset scan lives in the tests as the independent check.
  std::vector<Mask> out;
  for (Elem p = 0; p < a.size; ++p) {
    Mask f = upward_closure(a, mask_bit(p));
    if (f == a.carrier_mask()) continue;  // proper only; GMTL whole added below
    bool prime = true;
    for (Elem x = 0; x < a.size && prime; ++x) {
      for (Elem y = 0; y < a.size && prime; ++y) {
        if (a.le(p, a.join(x, y)) && !a.le(p, x) && !a.le(p, y)) prime = false;
      }
    }
    if (prime) out.push_back(f);
  }
  if (!a.bounded()) out.push_back(a.carrier_mask());
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    int cx = mask_count(x), cy = mask_count(y);
    return cx != cy ? cx < cy : x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Mask complex_product(const Algebra& a, Mask f, Mask g) {
  Mask prods = 0;
  for (Elem x = 0; x < a.size; ++x) {
    if (!mask_has(f, x)) continue;
    for (Elem y = 0; y < a.size; ++y) {
      if (mask_has(g, y)) prods |= mask_bit(a.prod(x, y));
    }
  }
  return upward_closure(a, prods);
}

bool generalized_prime(const Algebra& a, Mask f) {
  return is_prime_filter(a, f) || (!a.bounded() && f == a.carrier_mask());
}

}  // namespace

Mask filter_bullet_mask(const Algebra& a, Mask f, Mask g) {
  if (!generalized_prime(a, f) || !generalized_prime(a, g))
    throw NotPrime("filter_bullet needs prime inputs");
  return complex_product(a, f, g);
}

Spectrum::Spectrum(const Algebra& a) : algebra_(&a) {
  filters_ = list_prime_filters(a);
  const int n = count();
  if (!a.bounded()) {
    for (int i = 0; i < n; ++i) {
      if (filters_[i] == a.carrier_mask()) whole_ = i;
    }
  }

  bullet_.assign(static_cast<size_t>(n) * n, BulletOutcome::whole());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Mask up = complex_product(a, filters_[i], filters_[j]);
      BulletOutcome out = BulletOutcome::whole();
      if (up == a.carrier_mask() && a.bounded()) {
        out = BulletOutcome::whole();
      } else {
        auto id = try_id_of(up);
        if (!id)
          throw TheoremViolation("complex product of primes neither prime nor whole on '" +
                                 a.name + "'");
        out = BulletOutcome::at(*id);
      }
      bullet_[static_cast<size_t>(i) * n + j] = out;
    }
  }

  // The residual and star entries are guaranteed prime only under
  // semilinearity; failures are stored and raised on access, so spectra
  // of other distributive CIDRLs stay usable for the order and product.
  arrow_.assign(static_cast<size_t>(n) * n, kNoWitness);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      Mask uni = 0;
      bool any = false;
      for (int x = 0; x < n; ++x) {
        BulletOutcome o = bullet(x, b);
        if (!o.is_whole() && mask_subset(filters_[o.id()], filters_[c])) {
          uni |= filters_[x];
          any = true;
        }
      }
      if (!any) continue;
      auto id = try_id_of(uni);
      bool sound = id.has_value();
      for (int x = 0; sound && x < n; ++x) {
        BulletOutcome o = bullet(x, b);
        bool witness = !o.is_whole() && mask_subset(filters_[o.id()], filters_[c]);
        // the union must dominate every witness and satisfy the adjunction
        if (witness != mask_subset(filters_[x], uni)) sound = false;
      }
      arrow_[static_cast<size_t>(b) * n + c] = sound ? *id : kBroken;
    }
  }

  star_.assign(n, kBroken);
  if (a.bounded()) {
    for (int i = 0; i < n; ++i) {
      Mask st = 0;
      for (Elem x = 0; x < a.size; ++x) {
        if (!mask_has(filters_[i], a.neg(x))) st |= mask_bit(x);
      }
      auto id = try_id_of(st);
      if (!id) continue;
      // largest prime multiplying with i to a proper filter
      bool largest = !bullet(i, *id).is_whole();
      for (int j = 0; largest && j < n; ++j) {
        if (!bullet(i, j).is_whole() && !mask_subset(filters_[j], st)) largest = false;
      }
      if (largest) star_[i] = *id;
    }
  }
}

PrimeFilterId Spectrum::id_of(Mask f) const {
  auto id = try_id_of(f);
  if (!id) throw NotPrime("mask is not an interned prime filter");
  return *id;
}

std::optional<PrimeFilterId> Spectrum::try_id_of(Mask f) const {
  for (int i = 0; i < count(); ++i) {
    if (filters_[i] == f) return i;
  }
  return std::nullopt;
}

PrimeFilterId Spectrum::star(PrimeFilterId i) const {
  if (!algebra_->bounded()) throw NotBounded("Routley star needs bounded mode");
  if (star_[i] == kBroken)
    throw TheoremViolation("Routley star is not the largest proper cofactor on '" +
                           algebra_->name + "'");
  return star_[i];
}

std::optional<Mask> filter_arrow(const Algebra& a, Mask f, Mask g) {
  Spectrum s(a);
  auto r = s.arrow(s.id_of(f), s.id_of(g));
  if (!r) return std::nullopt;
  return s.filter(*r);
}

Mask routley_star(const Algebra& a, Mask f) {
  Spectrum s(a);
  return s.filter(s.star(s.id_of(f)));
}

std::string spectrum_to_json(const Spectrum& s) {
  nlohmann::json j;
  j["algebra"] = s.algebra().name;
  j["filters"] = nlohmann::json::array();
  for (int i = 0; i < s.count(); ++i) {
    nlohmann::json f = nlohmann::json::array();
    for (Elem x = 0; x < s.algebra().size; ++x) {
      if (mask_has(s.filter(i), x)) f.push_back(x);
    }
    j["filters"].push_back(f);
  }
  auto& bullet = j["bullet"] = nlohmann::json::array();
  auto& arrow = j["arrow"] = nlohmann::json::array();
  for (int i = 0; i < s.count(); ++i) {
    nlohmann::json brow = nlohmann::json::array();
    nlohmann::json arow = nlohmann::json::array();
    for (int k = 0; k < s.count(); ++k) {
      BulletOutcome o = s.bullet(i, k);
      if (o.is_whole())
        brow.push_back("whole");
      else
        brow.push_back(o.id());
      auto r = s.arrow(i, k);
      if (r)
        arow.push_back(*r);
      else
        arow.push_back("none");
    }
    bullet.push_back(brow);
    arrow.push_back(arow);
  }
  if (s.algebra().bounded()) {
    auto& star = j["star"] = nlohmann::json::array();
    for (int i = 0; i < s.count(); ++i) star.push_back(s.star(i));
  }
  return j.dump(2);
}

}  // namespace rldual

#include "rldual/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace rldual {

std::string Report::to_string() const {
  std::ostringstream os;
  if (passed()) {
    os << "ok";
    return os.str();
  }
  for (const auto& v : violations) {
    os << v.clause << " witness=(";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << v.witness[i];
    }
    os << ")";
    if (!v.detail.empty()) os << " " << v.detail;
    os << "\n";
  }
  return os.str();
}

Elem FiniteResiduatedLattice::meet(Elem a, Elem b) const {
  Elem best = -1;
  for (Elem d = 0; d < size; ++d) {
    if (le(d, a) && le(d, b)) {
      if (best < 0 || le(best, d)) best = d;
    }
  }
  if (best < 0) return -1;
  // best must dominate every other lower bound
  for (Elem d = 0; d < size; ++d) {
    if (le(d, a) && le(d, b) && !le(d, best)) return -1;
  }
  return best;
}

Elem FiniteResiduatedLattice::join(Elem a, Elem b) const {
  Elem best = -1;
  for (Elem d = 0; d < size; ++d) {
    if (le(a, d) && le(b, d)) {
      if (best < 0 || le(d, best)) best = d;
    }
  }
  if (best < 0) return -1;
  for (Elem d = 0; d < size; ++d) {
    if (le(a, d) && le(b, d) && !le(best, d)) return -1;
  }
  return best;
}

Elem FiniteResiduatedLattice::res(Elem a, Elem b) const {
  Elem best = -1;
  for (Elem d = 0; d < size; ++d) {
    if (le(prod(a, d), b)) {
      if (best < 0 || le(best, d)) best = d;
    }
  }
  if (best < 0) return -1;
  for (Elem d = 0; d < size; ++d) {
    if (le(prod(a, d), b) && !le(d, best)) return -1;
  }
  return best;
}

Elem FiniteResiduatedLattice::neg(Elem a) const {
  if (!bounded()) throw NotBounded("negation needs a bottom constant");
  return res(a, *zero);
}

Elem FiniteResiduatedLattice::oplus(Elem a, Elem b) const {
  return res(prod(neg(a), neg(b)), *zero);
}

Elem FiniteResiduatedLattice::minimum() const {
  for (Elem m = 0; m < size; ++m) {
    bool least = true;
    for (Elem b = 0; b < size; ++b) {
      if (!le(m, b)) { least = false; break; }
    }
    if (least) return m;
  }
  return -1;
}

Report validate(const Algebra& a) {
  const int n = a.size;
  if (n < 1) throw DimensionMismatch("size must be >= 1");
  if (n > kMaxCarrier) throw BoundExceeded("carrier larger than " + std::to_string(kMaxCarrier));
  if (a.leq.size() != static_cast<size_t>(n) * n) throw DimensionMismatch("leq table shape");
  if (a.mul.size() != static_cast<size_t>(n) * n) throw DimensionMismatch("mul table shape");
  if (a.one < 0 || a.one >= n) throw DimensionMismatch("one out of range");
  if (a.zero && (*a.zero < 0 || *a.zero >= n)) throw DimensionMismatch("zero out of range");
  for (Elem v : a.mul) {
    if (v < 0 || v >= n) throw DimensionMismatch("mul entry out of range");
  }

  Report r;
  for (Elem x = 0; x < n; ++x) {
    if (!a.le(x, x)) r.add("order.reflexive", {x});
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x != y && a.le(x, y) && a.le(y, x)) r.add("order.antisymmetric", {x, y});
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (a.le(x, y) && a.le(y, z) && !a.le(x, z)) r.add("order.transitive", {x, y, z});
      }
    }
  }
  if (!r.passed()) return r;  // lattice scans below assume a poset

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (a.meet(x, y) < 0) r.add("lattice.meet_exists", {x, y});
      if (a.join(x, y) < 0) r.add("lattice.join_exists", {x, y});
    }
  }
  if (!r.passed()) return r;

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = a.meet(x, a.join(y, z));
        Elem rhs = a.join(a.meet(x, y), a.meet(x, z));
        if (lhs != rhs) r.add("lattice.distributive", {x, y, z});
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (a.prod(x, y) != a.prod(y, x)) r.add("monoid.commutative", {x, y});
      for (Elem z = 0; z < n; ++z) {
        if (a.prod(a.prod(x, y), z) != a.prod(x, a.prod(y, z)))
          r.add("monoid.associative", {x, y, z});
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (a.prod(a.one, x) != x) r.add("monoid.unit", {x});
    if (!a.le(x, a.one)) r.add("integral", {x});
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (a.le(x, y) && !a.le(a.prod(x, z), a.prod(y, z)))
          r.add("monoid.order_preserving", {x, y, z});
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (a.res(x, y) < 0) r.add("residuation.maximum_exists", {x, y});
    }
  }

  if (a.zero) {
    for (Elem x = 0; x < n; ++x) {
      if (!a.le(*a.zero, x)) r.add("bounded.zero_is_bottom", {x});
    }
  }
  return r;
}

void require_valid(const Algebra& a) {
  Report r = validate(a);
  if (!r.passed()) throw Error("algebra '" + a.name + "' invalid: " + r.to_string());
}

namespace {

// first tuple falsifying pred, as a Flag
template <typename F>
Flag check1(const Algebra& a, F&& pred) {
  for (Elem x = 0; x < a.size; ++x) {
    if (!pred(x)) return {false, {x}};
  }
  return {true, {}};
}

template <typename F>
Flag check2(const Algebra& a, F&& pred) {
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem y = 0; y < a.size; ++y) {
      if (!pred(x, y)) return {false, {x, y}};
    }
  }
  return {true, {}};
}

template <typename F>
Flag check3(const Algebra& a, F&& pred) {
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem y = 0; y < a.size; ++y) {
      for (Elem z = 0; z < a.size; ++z) {
        if (!pred(x, y, z)) return {false, {x, y, z}};
      }
    }
  }
  return {true, {}};
}

}  // namespace

ClassificationReport classify(const Algebra& a) {
  ClassificationReport c;
  c.commutative = check2(a, [&](Elem x, Elem y) { return a.prod(x, y) == a.prod(y, x); });
  c.integral = check1(a, [&](Elem x) { return a.le(x, a.one); });
  c.distributive = check3(a, [&](Elem x, Elem y, Elem z) {
    return a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z));
  });
  c.semilinear =
      check2(a, [&](Elem x, Elem y) { return a.join(a.res(x, y), a.res(y, x)) == a.one; });
  c.bounded = a.bounded();
  c.mtl = c.semilinear;
  c.mtl.holds = c.semilinear.holds && c.bounded;
  if (!c.bounded) return c;

  c.smtl = check1(a, [&](Elem x) { return a.meet(x, a.neg(x)) == *a.zero; });
  if (c.smtl->holds) c.smtl->holds = c.mtl.holds;

  Flag sbp = check1(a, [&](Elem x) {
    Elem sq = a.prod(x, x);
    if (a.res(a.neg(sq), a.res(a.neg(a.neg(x)), x)) != a.one) return false;
    Elem dbl = a.oplus(x, x);
    return a.prod(dbl, dbl) == a.oplus(sq, sq);
  });
  sbp.holds = sbp.holds && c.mtl.holds;
  c.sbp = sbp;

  Flag ibp = check1(a, [&](Elem x) { return a.neg(a.neg(x)) == x; });
  ibp.holds = ibp.holds && sbp.holds;
  c.ibp = ibp;

  Flag zd{false, {}};
  zd.holds = false;
  bool found = false;
  for (Elem x = 0; x < a.size && !found; ++x) {
    for (Elem y = 0; y < a.size && !found; ++y) {
      if (x != *a.zero && y != *a.zero && a.prod(x, y) == *a.zero) {
        zd.holds = true;
        zd.witness = {x, y};
        found = true;
      }
    }
  }
  c.has_zero_divisors = zd;

  // Boolean-skeleton route: a bounded CIDRL is directly indecomposable
  // iff its only complemented central idempotents are the bounds, i.e.
  // the skeleton is exactly {0, 1}.
  int skel = 0;
  Flag di;
  for (Elem u = 0; u < a.size; ++u) {
    if (a.join(u, a.neg(u)) == a.one) {
      ++skel;
      if (u != a.one && u != *a.zero && di.witness.empty()) di.witness = {u};
    }
  }
  di.holds = (skel == 2);
  if (di.holds) di.witness.clear();
  c.directly_indecomposable = di;

  // Cross-check (nontrivial algebras): no zero divisors iff directly
  // indecomposable SMTL.
  if (a.size >= 2) {
    bool lhs = !zd.holds;
    bool rhs = di.holds && c.smtl->holds;
    if (lhs != rhs)
      throw TheoremViolation("zero-divisor criterion disagrees with skeleton route on '" +
                             a.name + "'");
  }
  return c;
}

bool is_sbp_algebra(const Algebra& a) {
  if (a.size < 2 || !a.bounded()) return false;
  if (!validate(a).passed()) return false;
  return classify(a).is_sbp();
}

void require_sbp(const Algebra& a) {
  if (!is_sbp_algebra(a)) throw NotSbp("'" + a.name + "' is not a nontrivial sbp-algebra");
}

std::vector<IdentityCheck> check_cidrl_identities(const Algebra& a) {
  std::vector<IdentityCheck> out;
  auto from3 = [&](int id, auto&& pred) {
    Flag f = check3(a, pred);
    out.push_back({id, f.holds, f.witness});
  };

  from3(1, [&](Elem x, Elem y, Elem) { return a.le(a.prod(x, a.res(x, y)), y); });
  from3(2, [&](Elem x, Elem y, Elem z) {
    if (!a.le(x, y)) return true;
    return a.le(a.prod(x, z), a.prod(y, z)) && a.le(a.res(z, x), a.res(z, y)) &&
           a.le(a.res(y, z), a.res(x, z));
  });
  from3(3, [&](Elem x, Elem y, Elem z) {
    return a.prod(x, a.join(y, z)) == a.join(a.prod(x, y), a.prod(x, z));
  });
  from3(4, [&](Elem x, Elem y, Elem z) {
    return a.prod(x, a.meet(y, z)) == a.meet(a.prod(x, y), a.prod(x, z));
  });
  from3(5, [&](Elem x, Elem y, Elem z) {
    return a.res(x, a.join(y, z)) == a.join(a.res(x, y), a.res(x, z));
  });
  from3(6, [&](Elem x, Elem y, Elem z) {
    return a.res(x, a.meet(y, z)) == a.meet(a.res(x, y), a.res(x, z));
  });
  from3(7, [&](Elem x, Elem y, Elem z) {
    return a.res(a.join(x, y), z) == a.meet(a.res(x, z), a.res(y, z));
  });
  from3(8, [&](Elem x, Elem y, Elem z) {
    return a.res(a.meet(x, y), z) == a.join(a.res(x, z), a.res(y, z));
  });
  from3(9, [&](Elem x, Elem y, Elem z) {
    return a.res(a.prod(x, y), z) == a.res(x, a.res(y, z));
  });
  from3(10, [&](Elem x, Elem y, Elem) { return a.le(a.prod(x, y), a.meet(x, y)); });

  if (a.bounded()) {
    from3(11, [&](Elem x, Elem y, Elem) {
      return a.neg(a.meet(x, y)) == a.join(a.neg(x), a.neg(y));
    });
    from3(12, [&](Elem x, Elem y, Elem) {
      return a.neg(a.join(x, y)) == a.meet(a.neg(x), a.neg(y));
    });
    from3(13, [&](Elem x, Elem y, Elem) {
      return a.le(a.meet(x, a.neg(x)), a.join(y, a.neg(y)));
    });
    from3(14, [&](Elem x, Elem, Elem) { return a.le(x, a.neg(a.neg(x))); });
  }
  return out;
}

std::pair<Algebra, std::vector<Elem>> subalgebra(const Algebra& a, Mask carrier,
                                                 bool keep_zero) {
  std::vector<Elem> embed;
  std::vector<Elem> back(a.size, -1);
  for (Elem x = 0; x < a.size; ++x) {
    if (mask_has(carrier, x)) {
      back[x] = static_cast<Elem>(embed.size());
      embed.push_back(x);
    }
  }
  const int m = static_cast<int>(embed.size());
  if (m == 0) throw ClosureFailure("empty carrier");

  Algebra s;
  s.name = a.name + "|sub";
  s.size = m;
  s.leq.assign(static_cast<size_t>(m) * m, 0);
  s.mul.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      s.leq[static_cast<size_t>(i) * m + j] = a.le(embed[i], embed[j]) ? 1 : 0;
      Elem p = a.prod(embed[i], embed[j]);
      if (back[p] < 0) throw ClosureFailure("carrier not closed under product");
      s.mul[static_cast<size_t>(i) * m + j] = back[p];
      Elem mt = a.meet(embed[i], embed[j]);
      Elem jn = a.join(embed[i], embed[j]);
      if (mt < 0 || jn < 0 || back[mt] < 0 || back[jn] < 0)
        throw ClosureFailure("carrier not closed under meet/join");
    }
  }
  if (back[a.one] < 0) throw ClosureFailure("carrier misses the unit");
  s.one = back[a.one];
  if (keep_zero) {
    if (!a.bounded() || back[*a.zero] < 0) throw ClosureFailure("carrier misses the bottom");
    s.zero = back[*a.zero];
  }
  return {std::move(s), std::move(embed)};
}

std::pair<Algebra, std::vector<Elem>> boolean_skeleton(const Algebra& a) {
  if (!a.bounded()) throw NotBounded("boolean_skeleton needs bounded mode");
  Mask carrier = 0;
  for (Elem u = 0; u < a.size; ++u) {
    if (a.join(u, a.neg(u)) == a.one) carrier |= mask_bit(u);
  }
  auto [s, embed] = subalgebra(a, carrier, /*keep_zero=*/true);
  s.name = a.name + "|skel";
  // the skeleton must come out Boolean
  for (Elem u = 0; u < s.size; ++u) {
    if (s.join(u, s.neg(u)) != s.one || s.meet(u, s.neg(u)) != *s.zero)
      throw TheoremViolation("boolean skeleton of '" + a.name + "' is not Boolean");
  }
  return {std::move(s), std::move(embed)};
}

Mask radical(const Algebra& a) {
  require_sbp(a);
  Mask r = 0;
  for (Elem x = 0; x < a.size; ++x) {
    Elem nx = a.neg(x);
    if (nx != x && a.le(nx, x)) r |= mask_bit(x);
  }
  return r;
}

Mask coradical(const Algebra& a) {
  require_sbp(a);
  Mask rad = radical(a);
  Mask c = 0;
  for (Elem x = 0; x < a.size; ++x) {
    Elem nx = a.neg(x);
    if (nx != x && a.le(x, nx)) c |= mask_bit(x);
  }
  // c must equal the pointwise negation of the radical
  Mask negs = 0;
  for (Elem x = 0; x < a.size; ++x) {
    if (mask_has(rad, x)) negs |= mask_bit(a.neg(x));
  }
  if (negs != c) throw TheoremViolation("coradical != neg[radical] on '" + a.name + "'");
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem y = 0; y < a.size; ++y) {
      if (mask_has(c, x) && mask_has(rad, y) && !(a.le(x, y) && x != y))
        throw TheoremViolation("coradical element not strictly below radical on '" + a.name +
                               "'");
    }
  }
  if (classify(a).directly_indecomposable->holds && (rad | c) != a.carrier_mask())
    throw TheoremViolation("indecomposable carrier is not radical + coradical on '" + a.name +
                           "'");
  return c;
}

std::pair<Algebra, std::vector<Elem>> radical_algebra(const Algebra& a) {
  Mask rad = radical(a);
  auto [s, embed] = subalgebra(a, rad, /*keep_zero=*/false);
  s.name = a.name + "|rad";
  Report rep = validate(s);
  if (!rep.passed()) throw ClosureFailure("radical of '" + a.name + "' not a GMTL-algebra");
  return {std::move(s), std::move(embed)};
}

UnaryTable double_negation_nucleus(const Algebra& a) {
  auto [rad, embed] = radical_algebra(a);
  std::vector<Elem> back(a.size, -1);
  for (size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<Elem>(i);
  UnaryTable t;
  t.map.resize(embed.size());
  for (size_t i = 0; i < embed.size(); ++i) {
    Elem img = a.neg(a.neg(embed[i]));
    if (back[img] < 0)
      throw TheoremViolation("double negation leaves the radical on '" + a.name + "'");
    t.map[i] = back[img];
  }
  WdlCheck w = is_wdl_admissible(rad, t);
  if (!w.admissible)
    throw TheoremViolation("double negation not wdl-admissible on '" + a.name + "': " +
                           w.clause);
  return t;
}

WdlCheck is_wdl_admissible(const Algebra& g, const UnaryTable& delta) {
  if (delta.size() != g.size) throw DimensionMismatch("delta table size");
  for (Elem x = 0; x < g.size; ++x) {
    if (!g.le(x, delta(x))) return {false, "expanding", {x}};
  }
  for (Elem x = 0; x < g.size; ++x) {
    for (Elem y = 0; y < g.size; ++y) {
      if (g.le(x, y) && !g.le(delta(x), delta(y))) return {false, "monotone", {x, y}};
    }
  }
  for (Elem x = 0; x < g.size; ++x) {
    if (delta(delta(x)) != delta(x)) return {false, "idempotent", {x}};
  }
  for (Elem x = 0; x < g.size; ++x) {
    for (Elem y = 0; y < g.size; ++y) {
      if (!g.le(g.prod(delta(x), delta(y)), delta(g.prod(x, y))))
        return {false, "nucleus", {x, y}};
      if (delta(g.meet(x, y)) != g.meet(delta(x), delta(y)))
        return {false, "meet_preserving", {x, y}};
      if (delta(g.join(x, y)) != g.join(delta(x), delta(y)))
        return {false, "join_preserving", {x, y}};
    }
  }
  return {true, "", {}};
}

Algebra add_bottom(const Algebra& g) {
  if (g.bounded()) throw ModeMismatch("add_bottom expects a GMTL-mode algebra");
  Algebra a;
  a.name = g.name + "+0";
  a.size = g.size + 1;
  const int n = a.size;
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  a.mul.assign(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x) a.leq[0 * n + x] = 1;  // new bottom below everything
  a.leq[0] = 1;
  for (Elem x = 0; x < g.size; ++x) {
    for (Elem y = 0; y < g.size; ++y) {
      a.leq[static_cast<size_t>(x + 1) * n + (y + 1)] = g.le(x, y) ? 1 : 0;
      a.mul[static_cast<size_t>(x + 1) * n + (y + 1)] = g.prod(x, y) + 1;
    }
  }
  // bottom row/column already zero (absorbing)
  a.one = g.one + 1;
  a.zero = 0;
  return a;
}

Algebra strip_bottom(const Algebra& a) {
  if (!a.bounded()) throw ModeMismatch("strip_bottom expects a bounded algebra");
  ClassificationReport c = classify(a);
  if (c.has_zero_divisors->holds)
    throw HasZeroDivisors("'" + a.name + "' factors through a zero divisor");
  Mask carrier = a.carrier_mask() & ~mask_bit(*a.zero);
  auto [s, embed] = subalgebra(a, carrier, /*keep_zero=*/false);
  (void)embed;
  s.name = a.name + "-0";
  return s;
}

Algebra product(const Algebra& a, const Algebra& b) {
  if (a.bounded() != b.bounded()) throw ModeMismatch("product needs matching carrier modes");
  Algebra p;
  p.name = a.name + "x" + b.name;
  p.size = a.size * b.size;
  const int n = p.size;
  if (n > kMaxCarrier) throw BoundExceeded("product carrier exceeds " + std::to_string(kMaxCarrier));
  p.leq.assign(static_cast<size_t>(n) * n, 0);
  p.mul.assign(static_cast<size_t>(n) * n, 0);
  auto idx = [&](Elem x, Elem y) { return x * b.size + y; };
  for (Elem x1 = 0; x1 < a.size; ++x1)
    for (Elem y1 = 0; y1 < b.size; ++y1)
      for (Elem x2 = 0; x2 < a.size; ++x2)
        for (Elem y2 = 0; y2 < b.size; ++y2) {
          Elem i = idx(x1, y1), j = idx(x2, y2);
          p.leq[static_cast<size_t>(i) * n + j] = (a.le(x1, x2) && b.le(y1, y2)) ? 1 : 0;
          p.mul[static_cast<size_t>(i) * n + j] = idx(a.prod(x1, x2), b.prod(y1, y2));
        }
  p.one = idx(a.one, b.one);
  if (a.bounded()) p.zero = idx(*a.zero, *b.zero);
  return p;
}

Algebra ordinal_sum_2_h(const Algebra& hoop) { return add_bottom(hoop); }

bool is_homomorphism(const Algebra& a, const Algebra& b, const std::vector<Elem>& f,
                     std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (a.bounded() != b.bounded()) return fail("mode mismatch");
  if (f.size() != static_cast<size_t>(a.size)) return fail("map size");
  for (Elem v : f) {
    if (v < 0 || v >= b.size) return fail("image out of range");
  }
  if (f[a.one] != b.one) return fail("unit not preserved");
  if (a.bounded() && f[*a.zero] != *b.zero) return fail("bottom not preserved");
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem y = 0; y < a.size; ++y) {
      if (f[a.meet(x, y)] != b.meet(f[x], f[y])) return fail("meet not preserved");
      if (f[a.join(x, y)] != b.join(f[x], f[y])) return fail("join not preserved");
      if (f[a.prod(x, y)] != b.prod(f[x], f[y])) return fail("product not preserved");
      if (f[a.res(x, y)] != b.res(f[x], f[y])) return fail("residuum not preserved");
    }
  }
  return true;
}

}  // namespace rldual

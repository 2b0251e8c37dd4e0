#include "rldual/space.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace rldual {

namespace {

std::string filter_label(const Algebra& a, Mask f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Elem x = 0; x < a.size; ++x) {
    if (!mask_has(f, x)) continue;
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

ResiduatedSpace spectrum_space(const Spectrum& s) {
  const int n = s.count();
  ResiduatedSpace x;
  x.points = n;
  x.leq.assign(static_cast<size_t>(n) * n, 0);
  x.prod.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      x.leq[static_cast<size_t>(i) * n + j] = s.included(i, j) ? 1 : 0;
      BulletOutcome o = s.bullet(i, j);
      if (!o.is_whole()) x.prod[static_cast<size_t>(i) * n + j] = o.id();
    }
  }
  x.unit_set = 0;
  for (int i = 0; i < n; ++i) {
    if (mask_has(s.filter(i), s.algebra().one)) x.unit_set |= mask_bit(i);
  }
  x.top = s.whole_point();
  x.labels.resize(n);
  for (int i = 0; i < n; ++i) x.labels[i] = filter_label(s.algebra(), s.filter(i));
  return x;
}

ResiduatedSpace spectrum_space(const Algebra& a) { return spectrum_space(Spectrum(a)); }

std::vector<Mask> upsets_of(const ResiduatedSpace& x) {
  if (x.points > kMaxSpacePoints)
    throw BoundExceeded("space has more than " + std::to_string(kMaxSpacePoints) + " points");
  std::vector<Mask> up(x.points, 0);
  for (int p = 0; p < x.points; ++p) {
    for (int q = 0; q < x.points; ++q) {
      if (x.le(p, q)) up[p] |= mask_bit(q);
    }
  }
  std::vector<Mask> out;
  const Mask all = full_mask(x.points);
  for (Mask m = 0; m <= all; ++m) {
    bool ok = true;
    for (int p = 0; p < x.points && ok; ++p) {
      if (mask_has(m, p) && !mask_subset(up[p], m)) ok = false;
    }
    if (ok) out.push_back(m);
    if (m == all) break;
  }
  std::sort(out.begin(), out.end(), [](Mask u, Mask v) {
    int cu = mask_count(u), cv = mask_count(v);
    return cu != cv ? cu < cv : u < v;
  });
  return out;
}

namespace {

Mask rel_image(const ResiduatedSpace& x, Mask u, Mask v) {
  // R[U,V,-]
  Mask out = 0;
  for (int p = 0; p < x.points; ++p) {
    if (!mask_has(u, p)) continue;
    for (int q = 0; q < x.points; ++q) {
      if (!mask_has(v, q)) continue;
      int pq = x.apply(p, q);
      if (pq < 0) continue;
      for (int z = 0; z < x.points; ++z) {
        if (x.le(pq, z)) out |= mask_bit(z);
      }
    }
  }
  return out;
}

bool is_upset(const ResiduatedSpace& x, Mask m) {
  for (int p = 0; p < x.points; ++p) {
    if (!mask_has(m, p)) continue;
    for (int q = 0; q < x.points; ++q) {
      if (x.le(p, q) && !mask_has(m, q)) return false;
    }
  }
  return true;
}

}  // namespace

Report check_residuated_space(const ResiduatedSpace& x, SpaceMode mode) {
  Report r;
  const int n = x.points;  // may be 0: the dual of the trivial algebra

  for (int p = 0; p < n; ++p) {
    if (!x.le(p, p)) r.add("order.reflexive", {p});
    for (int q = 0; q < n; ++q) {
      if (p != q && x.le(p, q) && x.le(q, p)) r.add("order.antisymmetric", {p, q});
      for (int s = 0; s < n; ++s) {
        if (x.le(p, q) && x.le(q, s) && !x.le(p, s)) r.add("order.transitive", {p, q, s});
      }
    }
  }
  if (!r.passed()) return r;

  // (1) associativity through intermediaries
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int w = 0; w < n; ++w) {
          bool lhs = false, rhs = false;
          for (int u = 0; u < n; ++u)
            if (x.rel(a, b, u) && x.rel(u, c, w)) lhs = true;
          for (int v = 0; v < n; ++v)
            if (x.rel(b, c, v) && x.rel(a, v, w)) rhs = true;
          if (lhs != rhs) r.add("rs.1.associative", {a, b, c, w});
        }

  // (2) antitone-antitone-isotone monotonicity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (x.apply(a, b) < 0) continue;
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          if (!x.le(a2, a) || !x.le(b2, b)) continue;
          int p2 = x.apply(a2, b2);
          if (p2 < 0 || !x.le(p2, x.apply(a, b))) r.add("rs.2.monotone", {a, b, a2, b2});
        }
    }

  // (3) separation via the principal up-set witnesses
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int z = 0; z < n; ++z) {
        if (x.rel(a, b, z)) continue;
        Mask ua = 0, ub = 0;
        for (int q = 0; q < n; ++q) {
          if (x.le(a, q)) ua |= mask_bit(q);
          if (x.le(b, q)) ub |= mask_bit(q);
        }
        if (mask_has(rel_image(x, ua, ub), z)) r.add("rs.3.separation", {a, b, z});
      }

  // (4) the derived set operations stay inside the up-sets
  std::vector<Mask> ups = upsets_of(x);
  for (Mask u : ups) {
    for (Mask v : ups) {
      if (!is_upset(x, rel_image(x, u, v))) r.add("rs.4.product_upset", {});
      Mask left = 0, right = 0;
      for (int z = 0; z < n; ++z) {
        if (mask_subset(rel_image(x, mask_bit(z), v), u)) left |= mask_bit(z);
        if (mask_subset(rel_image(x, u, mask_bit(z)), v)) right |= mask_bit(z);
      }
      if (!is_upset(x, left)) r.add("rs.4.residual_upset_left", {});
      if (!is_upset(x, right)) r.add("rs.4.residual_upset_right", {});
    }
  }

  // (5) unit law
  if (!is_upset(x, x.unit_set)) r.add("rs.5.unit_upset", {});
  for (Mask u : ups) {
    if (rel_image(x, u, x.unit_set) != u || rel_image(x, x.unit_set, u) != u)
      r.add("rs.5.unit_law", {}, "R[U,E,-] or R[E,U,-] differs from U");
  }

  // MTL^tau: commutativity, E = S, linearity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int z = 0; z < n; ++z) {
        if (x.rel(a, b, z) != x.rel(b, a, z)) r.add("mtl.commutative", {a, b, z});
      }
  if (x.unit_set != full_mask(n)) r.add("mtl.unit_everywhere", {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int z = 0; z < n; ++z)
        for (int v = 0; v < n; ++v)
          for (int w = 0; w < n; ++w) {
            if (x.rel(a, b, z) && x.rel(a, v, w) && !x.le(b, w) && !x.le(v, z))
              r.add("mtl.linearity", {a, b, z, v, w});
          }

  if (mode == SpaceMode::Gmtl) {
    if (!x.top) {
      r.add("gmtl.top_designated", {});
    } else {
      for (int p = 0; p < n; ++p) {
        if (!x.le(p, *x.top)) r.add("gmtl.top_greatest", {p});
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (x.apply(a, b) < 0) r.add("gmtl.total", {a, b});
      }
  }
  return r;
}

Algebra upset_algebra(const ResiduatedSpace& x, SpaceMode mode) {
  Report chk = check_residuated_space(x, mode);
  if (!chk.passed()) throw SpaceInvalid("space fails the residuated-space axioms: " + chk.to_string());

  std::vector<Mask> ups = upsets_of(x);
  if (mode == SpaceMode::Gmtl) {
    ups.erase(std::remove(ups.begin(), ups.end(), Mask{0}), ups.end());
  }
  const int m = static_cast<int>(ups.size());
  if (m > kMaxCarrier) throw BoundExceeded("up-set algebra carrier exceeds " +
                                           std::to_string(kMaxCarrier));
  auto index_of = [&](Mask u) -> int {
    auto it = std::find(ups.begin(), ups.end(), u);
    if (it == ups.end()) throw SpaceInvalid("derived set is not an admissible up-set");
    return static_cast<int>(it - ups.begin());
  };

  Algebra a;
  a.name = "upsets";
  a.size = m;
  a.leq.assign(static_cast<size_t>(m) * m, 0);
  a.mul.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      a.leq[static_cast<size_t>(i) * m + j] = mask_subset(ups[i], ups[j]) ? 1 : 0;
      a.mul[static_cast<size_t>(i) * m + j] = index_of(rel_image(x, ups[i], ups[j]));
    }
  }
  a.one = index_of(x.unit_set);
  if (mode == SpaceMode::Mtl) a.zero = index_of(0);

  Report rep = validate(a);
  if (!rep.passed()) throw SpaceInvalid("up-set algebra invalid: " + rep.to_string());

  // the relational residual formula must agree with the derived residuum
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Mask res = 0;
      for (int p = 0; p < x.points; ++p) {
        bool in = true;
        for (int q = 0; q < x.points && in; ++q) {
          if (!mask_has(ups[i], q)) continue;
          for (int z = 0; z < x.points && in; ++z) {
            if (x.rel(p, q, z) && !mask_has(ups[j], z)) in = false;
          }
        }
        if (in) res |= mask_bit(p);
      }
      if (mode == SpaceMode::Gmtl && res == 0)
        throw SpaceInvalid("empty residual in GMTL mode");
      if (index_of(res) != a.res(i, j))
        throw TheoremViolation("relational residual differs from derived residuum");
    }
  }
  return a;
}

std::vector<Elem> unit_map(const Algebra& a) {
  Spectrum s(a);
  ResiduatedSpace x = spectrum_space(s);
  SpaceMode mode = a.bounded() ? SpaceMode::Mtl : SpaceMode::Gmtl;
  Algebra u = upset_algebra(x, mode);
  std::vector<Mask> ups = upsets_of(x);
  if (mode == SpaceMode::Gmtl)
    ups.erase(std::remove(ups.begin(), ups.end(), Mask{0}), ups.end());

  std::vector<Elem> phi(a.size);
  for (Elem e = 0; e < a.size; ++e) {
    Mask img = 0;
    for (int i = 0; i < s.count(); ++i) {
      if (mask_has(s.filter(i), e)) img |= mask_bit(i);
    }
    auto it = std::find(ups.begin(), ups.end(), img);
    if (it == ups.end())
      throw TheoremViolation("phi image is not an admissible up-set on '" + a.name + "'");
    phi[e] = static_cast<Elem>(it - ups.begin());
  }
  std::string why;
  if (u.size != a.size || !is_homomorphism(a, u, phi, &why))
    throw TheoremViolation("phi is not an isomorphism on '" + a.name + "': " + why);
  std::vector<bool> hit(u.size, false);
  for (Elem e : phi) hit[e] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    throw TheoremViolation("phi is not onto on '" + a.name + "'");
  return phi;
}

int star_point(const ResiduatedSpace& x, int p) {
  int best = -1;
  for (int y = 0; y < x.points; ++y) {
    if (x.apply(p, y) < 0) continue;
    if (best < 0 || x.le(best, y)) best = y;
  }
  if (best < 0) throw TheoremViolation("point has no defined product at all");
  for (int y = 0; y < x.points; ++y) {
    if (x.apply(p, y) >= 0 && !x.le(y, best))
      throw TheoremViolation("definedness set has no greatest element");
  }
  return best;
}

std::optional<int> arrow_point(const ResiduatedSpace& x, int y, int z) {
  int best = -1;
  for (int p = 0; p < x.points; ++p) {
    int py = x.apply(p, y);
    if (py < 0 || !x.le(py, z)) continue;
    if (best < 0 || x.le(best, p)) best = p;
  }
  if (best < 0) return std::nullopt;
  for (int p = 0; p < x.points; ++p) {
    int py = x.apply(p, y);
    if (py >= 0 && x.le(py, z) && !x.le(p, best))
      throw TheoremViolation("arrow witnesses have no greatest element");
  }
  return best;
}

std::vector<int> dualize_hom(const Algebra& a, const Algebra& b, const std::vector<Elem>& f) {
  std::string why;
  if (!is_homomorphism(a, b, f, &why)) throw NotHomomorphism(why);

  Spectrum sa(a), sb(b);
  ResiduatedSpace xa = spectrum_space(sa), xb = spectrum_space(sb);
  std::vector<int> alpha(sb.count());
  for (int j = 0; j < sb.count(); ++j) {
    Mask pre = 0;
    for (Elem x = 0; x < a.size; ++x) {
      if (mask_has(sb.filter(j), f[x])) pre |= mask_bit(x);
    }
    alpha[j] = sa.id_of(pre);  // NotPrime would mean duality failed
  }

  // bounded-morphism clauses for alpha : S(b) -> S(a)
  for (int p = 0; p < xb.points; ++p)
    for (int q = 0; q < xb.points; ++q) {
      if (xb.le(p, q) && !xa.le(alpha[p], alpha[q]))
        throw TheoremViolation("dual map not isotone");
      for (int z = 0; z < xb.points; ++z) {
        if (xb.rel(p, q, z) && !xa.rel(alpha[p], alpha[q], alpha[z]))
          throw TheoremViolation("dual map breaks clause (2)");
      }
    }
  for (int u = 0; u < xa.points; ++u)
    for (int v = 0; v < xa.points; ++v)
      for (int z = 0; z < xb.points; ++z) {
        if (!xa.rel(u, v, alpha[z])) continue;
        bool witnessed = false;
        for (int p = 0; p < xb.points && !witnessed; ++p)
          for (int q = 0; q < xb.points && !witnessed; ++q) {
            if (xa.le(u, alpha[p]) && xa.le(v, alpha[q]) && xb.rel(p, q, z)) witnessed = true;
          }
        if (!witnessed) throw TheoremViolation("dual map breaks clause (3)");
      }
  {
    std::vector<Mask> upsA = upsets_of(xa);
    auto preimage = [&](Mask u) {
      Mask m = 0;
      for (int p = 0; p < xb.points; ++p) {
        if (mask_has(u, alpha[p])) m |= mask_bit(p);
      }
      return m;
    };
    for (Mask u : upsA)
      for (Mask v : upsA) {
        for (int p = 0; p < xb.points; ++p) {
          Mask lhs = rel_image(xb, mask_bit(p), preimage(u));
          if (mask_subset(lhs, preimage(v))) {
            Mask rhs = rel_image(xa, mask_bit(alpha[p]), u);
            if (!mask_subset(rhs, v)) throw TheoremViolation("dual map breaks clause (4)");
          }
        }
      }
  }
  for (int p = 0; p < xb.points; ++p) {
    if (mask_has(xa.unit_set, alpha[p]) && !mask_has(xb.unit_set, p))
      throw TheoremViolation("dual map breaks clause (5)");
  }
  if (!a.bounded() && xb.top && xa.top && alpha[*xb.top] != *xa.top)
    throw TheoremViolation("dual map does not preserve the top");
  return alpha;
}

SpaceShape space_shape(const ResiduatedSpace& x) {
  SpaceShape s;
  s.n = x.points;
  s.leq = x.leq;
  s.op = x.prod;
  s.tag.assign(x.points, 0);
  s.has_tags = false;
  return s;
}

std::string space_to_dot(const ResiduatedSpace& x) {
  std::ostringstream os;
  os << "digraph space {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int p = 0; p < x.points; ++p) {
    std::string label = p < static_cast<int>(x.labels.size()) && !x.labels[p].empty()
                            ? x.labels[p]
                            : std::to_string(p);
    os << "  p" << p << " [label=\"" << label << "\"";
    if (x.top && *x.top == p) os << ", peripheries=2";
    os << "];\n";
  }
  // cover edges only
  for (int p = 0; p < x.points; ++p)
    for (int q = 0; q < x.points; ++q) {
      if (p == q || !x.le(p, q)) continue;
      bool cover = true;
      for (int z = 0; z < x.points && cover; ++z) {
        if (z != p && z != q && x.le(p, z) && x.le(z, q)) cover = false;
      }
      if (cover) os << "  p" << p << " -> p" << q << ";\n";
    }
  if (!x.top) {
    // star pairs as dashed annotations in bounded mode
    for (int p = 0; p < x.points; ++p) {
      int st = -1;
      try {
        st = star_point(x, p);
      } catch (const TheoremViolation&) {
        continue;
      }
      if (p <= st) os << "  p" << p << " -> p" << st
                      << " [style=dashed, dir=none, constraint=false, label=\"*\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string space_to_json(const ResiduatedSpace& x) {
  nlohmann::json j;
  j["points"] = x.points;
  j["labels"] = x.labels;
  auto& leq = j["leq"] = nlohmann::json::array();
  auto& prod = j["prod"] = nlohmann::json::array();
  for (int p = 0; p < x.points; ++p) {
    nlohmann::json lrow = nlohmann::json::array();
    nlohmann::json prow = nlohmann::json::array();
    for (int q = 0; q < x.points; ++q) {
      lrow.push_back(x.le(p, q) ? 1 : 0);
      int v = x.apply(p, q);
      if (v < 0)
        prow.push_back(nullptr);
      else
        prow.push_back(v);
    }
    leq.push_back(lrow);
    prod.push_back(prow);
  }
  auto& e = j["unit_set"] = nlohmann::json::array();
  for (int p = 0; p < x.points; ++p) {
    if (mask_has(x.unit_set, p)) e.push_back(p);
  }
  if (x.top)
    j["top"] = *x.top;
  else
    j["top"] = nullptr;
  return j.dump(2);
}

}  // namespace rldual

#include "rldual/dual_quadruple.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace rldual {

namespace {

// powerset Boolean algebra of a discrete point set, subsets in canonical
// (cardinality, value) order
std::pair<Algebra, std::vector<Mask>> powerset_algebra(int points) {
  std::vector<Mask> subsets;
  for (Mask m = 0; m <= full_mask(points); ++m) {
    subsets.push_back(m);
    if (m == full_mask(points)) break;
  }
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    int ca = mask_count(a), cb = mask_count(b);
    return ca != cb ? ca < cb : a < b;
  });
  const int n = static_cast<int>(subsets.size());
  Algebra b;
  b.name = "powerset";
  b.size = n;
  b.leq.assign(static_cast<size_t>(n) * n, 0);
  b.mul.assign(static_cast<size_t>(n) * n, 0);
  auto index_of = [&](Mask m) {
    return static_cast<int>(std::find(subsets.begin(), subsets.end(), m) - subsets.begin());
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.leq[static_cast<size_t>(i) * n + j] = mask_subset(subsets[i], subsets[j]) ? 1 : 0;
      b.mul[static_cast<size_t>(i) * n + j] = index_of(subsets[i] & subsets[j]);
    }
  b.one = index_of(full_mask(points));
  b.zero = index_of(0);
  return {std::move(b), std::move(subsets)};
}

Mask preimage_upset(const std::vector<int>& map, Mask v, int points) {
  Mask out = 0;
  for (int x = 0; x < points; ++x) {
    if (mask_has(v, map[x])) out |= mask_bit(x);
  }
  return out;
}

}  // namespace

Report validate_dual_quadruple(const DualQuadruple& dq) {
  Report r;
  const ResiduatedSpace& x = dq.space;
  if (dq.stone_points < 1 || dq.stone_points > kMaxStonePoints)
    throw BoundExceeded("Stone space must have 1.." + std::to_string(kMaxStonePoints) +
                        " points");
  const size_t n_subsets = size_t{1} << dq.stone_points;
  if (dq.upsilon.size() != n_subsets) throw DimensionMismatch("upsilon family size");
  for (const auto& m : dq.upsilon) {
    if (m.size() != static_cast<size_t>(x.points)) throw DimensionMismatch("upsilon map size");
    for (int v : m) {
      if (v < 0 || v >= x.points) throw DimensionMismatch("upsilon image out of range");
    }
  }
  if (dq.delta_map.size() != static_cast<size_t>(x.points))
    throw DimensionMismatch("delta map size");

  Report space_rep = check_residuated_space(x, SpaceMode::Gmtl);
  for (auto& v : space_rep.violations) r.add("space." + v.clause, v.witness, v.detail);
  if (!r.passed()) return r;

  std::vector<Mask> ups = upsets_of(x);

  // every upsilon_U is a GMTL^tau-morphism X -> X
  for (size_t us = 0; us < n_subsets; ++us) {
    const std::vector<int>& f = dq.upsilon[us];
    Elem uw = static_cast<Elem>(us);
    for (int p = 0; p < x.points; ++p)
      for (int q = 0; q < x.points; ++q) {
        if (x.le(p, q) && !x.le(f[p], f[q])) r.add("upsilon.isotone", {uw, p, q});
        for (int z = 0; z < x.points; ++z) {
          if (x.rel(p, q, z) && !x.rel(f[p], f[q], f[z])) r.add("upsilon.clause2", {uw, p, q, z});
        }
      }
    for (int u = 0; u < x.points; ++u)
      for (int v = 0; v < x.points; ++v)
        for (int z = 0; z < x.points; ++z) {
          if (!x.rel(u, v, f[z])) continue;
          bool witnessed = false;
          for (int p = 0; p < x.points && !witnessed; ++p)
            for (int q = 0; q < x.points && !witnessed; ++q) {
              if (x.le(u, f[p]) && x.le(v, f[q]) && x.rel(p, q, z)) witnessed = true;
            }
          if (!witnessed) r.add("upsilon.clause3", {uw, u, v, z});
        }
    for (Mask uu : ups)
      for (Mask vv : ups) {
        for (int p = 0; p < x.points; ++p) {
          Mask pre_u = preimage_upset(f, uu, x.points);
          Mask pre_v = preimage_upset(f, vv, x.points);
          // R[p, f^{-1}[U], -] subset of f^{-1}[V] implies R[f(p), U, -] subset of V
          bool lhs = true;
          for (int q = 0; q < x.points && lhs; ++q) {
            if (!mask_has(pre_u, q)) continue;
            int pq = x.apply(p, q);
            if (pq >= 0) {
              for (int z = 0; z < x.points && lhs; ++z) {
                if (x.le(pq, z) && !mask_has(pre_v, z)) lhs = false;
              }
            }
          }
          if (!lhs) continue;
          for (int q = 0; q < x.points; ++q) {
            if (!mask_has(uu, q)) continue;
            int pq = x.apply(f[p], q);
            if (pq < 0) continue;
            for (int z = 0; z < x.points; ++z) {
              if (x.le(pq, z) && !mask_has(vv, z)) r.add("upsilon.clause4", {uw, p});
            }
          }
        }
      }
    if (x.top && f[*x.top] != *x.top) r.add("upsilon.top", {uw});
  }

  // Delta is a closure operator compatible with R
  for (int p = 0; p < x.points; ++p) {
    if (!x.le(p, dq.delta(p))) r.add("delta.expanding", {p});
    if (dq.delta(dq.delta(p)) != dq.delta(p)) r.add("delta.idempotent", {p});
    for (int q = 0; q < x.points; ++q) {
      if (x.le(p, q) && !x.le(dq.delta(p), dq.delta(q))) r.add("delta.isotone", {p, q});
      for (int z = 0; z < x.points; ++z) {
        if (x.rel(p, q, z) && !x.rel(dq.delta(p), dq.delta(q), dq.delta(z)))
          r.add("delta.relation_preserving", {p, q, z});
      }
    }
  }

  // the induced map on up-set algebras is an external join; Delta^{-1}
  // is wdl-admissible there.  Preimages are up-sets only for isotone
  // top-preserving maps, so skip when those clauses already failed.
  bool maps_ok = true;
  for (const auto& v : r.violations) {
    if (v.clause == "upsilon.isotone" || v.clause == "upsilon.top" ||
        v.clause == "delta.isotone" || v.clause == "delta.expanding")
      maps_ok = false;
  }
  if (maps_ok) {
    auto [stone, subsets] = powerset_algebra(dq.stone_points);
    std::vector<Mask> nonempty = ups;
    nonempty.erase(std::remove(nonempty.begin(), nonempty.end(), Mask{0}), nonempty.end());
    auto upset_index = [&](Mask m) {
      auto it = std::find(nonempty.begin(), nonempty.end(), m);
      if (it == nonempty.end()) throw TheoremViolation("preimage of an up-set is not a nonempty up-set");
      return static_cast<int>(it - nonempty.begin());
    };
    AlgebraicQuadruple q;
    q.skeleton = stone;
    q.radical = upset_algebra(x, SpaceMode::Gmtl);
    q.ext_join.assign(static_cast<size_t>(stone.size) * q.radical.size, 0);
    for (int bi = 0; bi < stone.size; ++bi) {
      const std::vector<int>& f = dq.upsilon[subsets[bi]];
      for (int ai = 0; ai < q.radical.size; ++ai) {
        q.ext_join[static_cast<size_t>(bi) * q.radical.size + ai] =
            upset_index(preimage_upset(f, nonempty[ai], x.points));
      }
    }
    q.delta.map.resize(q.radical.size);
    for (int ai = 0; ai < q.radical.size; ++ai) {
      q.delta.map[ai] = upset_index(preimage_upset(dq.delta_map, nonempty[ai], x.points));
    }
    Report join_rep = validate_quadruple(q);
    for (auto& v : join_rep.violations) r.add("join." + v.clause, v.witness, v.detail);
  }
  return r;
}

bool dual_fixes(const DualQuadruple& dq, int u, int x) {
  const size_t n_subsets = size_t{1} << dq.stone_points;
  for (size_t us = 0; us < n_subsets; ++us) {
    if (mask_has(static_cast<Mask>(us), u)) continue;
    if (dq.upsilon[us][x] != x) return false;
  }
  return true;
}

int RotationSpace::index_of(const RotationPoint& pt) const {
  for (int i = 0; i < count(); ++i) {
    if (points[i] == pt) return i;
  }
  return -1;
}

ResiduatedSpace RotationSpace::as_space() const {
  ResiduatedSpace x;
  x.points = count();
  x.leq = leq;
  x.prod = comp;
  x.unit_set = full_mask(count());
  return x;
}

Mask RotationSpace::w_set(const DualQuadruple& dq, Mask u_subset, Mask v_upset) const {
  const ResiduatedSpace& x = dq.space;
  for (int p = 0; p < x.points; ++p)
    for (int q = 0; q < x.points; ++q) {
      if (mask_has(v_upset, p) && x.le(p, q) && !mask_has(v_upset, q))
        throw NotUpset("V is not an up-set of X");
    }
  Mask delta_v = 0;
  for (int p = 0; p < x.points; ++p) {
    if (mask_has(v_upset, p)) delta_v |= mask_bit(dq.delta(p));
  }
  Mask out = 0;
  for (int i = 0; i < count(); ++i) {
    const RotationPoint& pt = points[i];
    bool in;
    if (!pt.upper)
      in = mask_has(u_subset, pt.u) && mask_has(v_upset, pt.x);
    else
      in = mask_has(u_subset, pt.u) || !mask_has(delta_v, pt.x);
    if (in) out |= mask_bit(i);
  }
  return out;
}

RotationSpace rotate(const DualQuadruple& dq) {
  Report rep = validate_dual_quadruple(dq);
  if (!rep.passed()) throw DualQuadrupleInvalid("dual quadruple invalid: " + rep.to_string());

  const ResiduatedSpace& x = dq.space;
  RotationSpace rot;
  for (int u = 0; u < dq.stone_points; ++u)
    for (int p = 0; p < x.points; ++p) {
      if (dual_fixes(dq, u, p)) rot.points.push_back({false, u, p});
    }
  for (int u = 0; u < dq.stone_points; ++u) {
    std::vector<int> images;
    for (int p = 0; p < x.points; ++p) {
      if (!dual_fixes(dq, u, p)) continue;
      int dp = dq.delta(p);
      // the duplicate of the top is dropped, matching the exclusion of
      // the whole-radical preimage on the filter-pair side
      if (dp == *x.top) continue;
      if (std::find(images.begin(), images.end(), dp) == images.end()) images.push_back(dp);
    }
    std::sort(images.begin(), images.end());
    for (int dp : images) rot.points.push_back({true, u, dp});
  }

  const int n = rot.count();
  rot.leq.assign(static_cast<size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const RotationPoint& a = rot.points[p];
      const RotationPoint& b = rot.points[q];
      bool le = false;
      if (!a.upper && !b.upper)
        le = a.u == b.u && x.le(a.x, b.x);
      else if (a.upper && b.upper)
        le = a.u == b.u && x.le(b.x, a.x);
      else if (!a.upper && b.upper)
        le = a.u == b.u;
      rot.leq[static_cast<size_t>(p) * n + q] = le ? 1 : 0;
    }

  rot.comp.assign(static_cast<size_t>(n) * n, -1);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const RotationPoint& a = rot.points[p];
      const RotationPoint& b = rot.points[q];
      if (a.u != b.u) continue;
      if (!a.upper && !b.upper) {
        int z = x.apply(a.x, b.x);
        int idx = rot.index_of({false, a.u, z});
        if (idx < 0)
          throw TheoremViolation("product of fixed points is not fixed in the rotation");
        rot.comp[static_cast<size_t>(p) * n + q] = idx;
      } else if (a.upper != b.upper) {
        const RotationPoint& low = a.upper ? b : a;
        const RotationPoint& up = a.upper ? a : b;
        int dy = dq.delta(up.x);
        if (!x.le(low.x, dy)) continue;
        auto arr = arrow_point(x, low.x, dy);
        if (!arr) throw TheoremViolation("rotation residual witness missing");
        int idx = rot.index_of({true, a.u, *arr});
        if (idx < 0) throw TheoremViolation("rotation residual leaves the carrier");
        rot.comp[static_cast<size_t>(p) * n + q] = idx;
      }
    }

  Report space_rep = check_residuated_space(rot.as_space(), SpaceMode::Mtl);
  if (!space_rep.passed())
    throw TheoremViolation("rotated space fails the residuated-space axioms: " +
                           space_rep.to_string());
  return rot;
}

DualQuadruple extract_dual_quadruple(const FilterPairContext& ctx) {
  DualQuadruple dq;
  const Spectrum& su = ctx.skel_spec();
  dq.stone_points = su.count();
  if (dq.stone_points > kMaxStonePoints)
    throw BoundExceeded("skeleton spectrum too large for the dual quadruple layer");
  dq.space = spectrum_space(ctx.rad_spec());

  // phi : skeleton elements <-> subsets of ultrafilters
  const Algebra& skel = ctx.parts().skeleton;
  std::map<Mask, Elem> phi_inverse;
  for (Elem u = 0; u < skel.size; ++u) {
    Mask img = 0;
    for (int i = 0; i < su.count(); ++i) {
      if (mask_has(su.filter(i), u)) img |= mask_bit(i);
    }
    phi_inverse[img] = u;
  }
  const size_t n_subsets = size_t{1} << dq.stone_points;
  if (phi_inverse.size() != n_subsets)
    throw TheoremViolation("Stone map of the skeleton is not onto the powerset");

  dq.upsilon.assign(n_subsets, {});
  for (size_t us = 0; us < n_subsets; ++us) {
    Elem u = phi_inverse.at(static_cast<Mask>(us));
    std::vector<int>& f = dq.upsilon[us];
    f.resize(ctx.rad_spec().count());
    for (int p = 0; p < ctx.rad_spec().count(); ++p) f[p] = ctx.mu(u, p);
  }

  dq.delta_map.resize(ctx.rad_spec().count());
  const Algebra& rad = ctx.parts().radical;
  for (int p = 0; p < ctx.rad_spec().count(); ++p) {
    Mask xf = ctx.rad_spec().filter(p);
    Mask pre = 0;
    for (Elem r = 0; r < rad.size; ++r) {
      if (mask_has(xf, ctx.parts().delta(r))) pre |= mask_bit(r);
    }
    dq.delta_map[p] = ctx.rad_spec().id_of(pre);
  }

  Report rep = validate_dual_quadruple(dq);
  if (!rep.passed())
    throw TheoremViolation("extracted dual quadruple of '" + ctx.ambient().name +
                           "' invalid: " + rep.to_string());
  return dq;
}

DualQuadruple extract_dual_quadruple(const Algebra& a) {
  return extract_dual_quadruple(FilterPairContext(a));
}

Report check_mu_splitting(const FilterPairContext& ctx) {
  Report r;
  const Algebra& skel = ctx.parts().skeleton;
  const Spectrum& sx = ctx.rad_spec();
  std::optional<PrimeFilterId> whole = sx.whole_point();
  for (Elem u = 0; u < skel.size; ++u) {
    for (Elem v = 0; v < skel.size; ++v) {
      for (int p = 0; p < sx.count(); ++p) {
        int mu_u = ctx.mu(u, p), mu_v = ctx.mu(v, p);
        int mu_join = ctx.mu(skel.join(u, v), p);
        int mu_meet = ctx.mu(skel.meet(u, v), p);
        if (mu_join != mu_u && mu_join != mu_v) r.add("split.join", {u, v, p});
        if (mu_meet != mu_u && mu_meet != mu_v) r.add("split.meet", {u, v, p});
        int mu_neg = ctx.mu(skel.neg(u), p);
        if (mu_u != p && mu_neg != p) r.add("split.dichotomy", {u, p});
        if (mu_u != p && (!whole || mu_u != *whole)) r.add("split.fix_or_whole", {u, p});
        if (ctx.mu(u, mu_u) != mu_u) r.add("split.idempotent", {u, p});
      }
    }
  }
  return r;
}

Report check_alpha_transport(const FilterPairContext& ctx, const BowtieSpace& bt,
                             const std::vector<int>& alpha_map) {
  Report r;
  const Spectrum& sa = ctx.ambient_spec();
  for (int i = 0; i < sa.count(); ++i) {
    for (int j = 0; j < sa.count(); ++j) {
      BulletOutcome o = sa.bullet(i, j);
      int c = bt.compose(alpha_map[i], alpha_map[j]);
      if (o.is_whole()) {
        if (c >= 0) r.add("transport.defined_but_whole", {i, j});
      } else {
        if (c < 0)
          r.add("transport.whole_but_defined", {i, j});
        else if (c != alpha_map[o.id()])
          r.add("transport.value", {i, j});
      }
    }
  }
  return r;
}

CommuteSquare commute_square(const Algebra& a) {
  CommuteSquare sq;
  std::ostringstream detail;

  FilterPairContext ctx(a);
  ResiduatedSpace spec = spectrum_space(ctx.ambient_spec());

  DualQuadruple dq = extract_dual_quadruple(ctx);
  RotationSpace rot = rotate(dq);
  SpaceShape rot_shape = space_shape(rot.as_space());
  SpaceShape spec_shape = space_shape(spec);
  sq.rotation_matches_spectrum = find_space_isomorphism(rot_shape, spec_shape).has_value();
  if (!sq.rotation_matches_spectrum) detail << "rotation !~ spectrum; ";

  BowtieSpace bt = build_bowtie(ctx);
  std::vector<int> al = alpha(ctx, bt);
  Report tr = check_alpha_transport(ctx, bt, al);
  sq.bowtie_matches_spectrum = tr.passed();
  if (!tr.passed()) detail << "alpha transport: " << tr.to_string() << "; ";

  Algebra from_rotation = upset_algebra(rot.as_space(), SpaceMode::Mtl);
  sq.upsets_match_algebra = find_isomorphism(from_rotation, a).has_value();
  if (!sq.upsets_match_algebra) detail << "upsets(rotation) !~ algebra; ";

  QuadrupleComposition comp = compose(ctx.quadruple());
  sq.compose_matches_algebra = find_isomorphism(comp.algebra, a).has_value();
  if (!sq.compose_matches_algebra) detail << "compose !~ algebra; ";

  sq.detail = detail.str();
  return sq;
}

std::string dual_quadruple_to_json(const DualQuadruple& dq) {
  nlohmann::json j;
  j["stone_points"] = dq.stone_points;
  nlohmann::json sp;
  sp["points"] = dq.space.points;
  auto& leq = sp["leq"] = nlohmann::json::array();
  auto& prod = sp["prod"] = nlohmann::json::array();
  for (int p = 0; p < dq.space.points; ++p) {
    nlohmann::json lrow = nlohmann::json::array();
    nlohmann::json prow = nlohmann::json::array();
    for (int q = 0; q < dq.space.points; ++q) {
      lrow.push_back(dq.space.le(p, q) ? 1 : 0);
      int v = dq.space.apply(p, q);
      if (v < 0)
        prow.push_back(nullptr);
      else
        prow.push_back(v);
    }
    leq.push_back(lrow);
    prod.push_back(prow);
  }
  sp["top"] = dq.space.top ? nlohmann::json(*dq.space.top) : nlohmann::json(nullptr);
  auto& unit = sp["unit_set"] = nlohmann::json::array();
  for (int p = 0; p < dq.space.points; ++p) {
    if (mask_has(dq.space.unit_set, p)) unit.push_back(p);
  }
  j["space"] = sp;
  j["upsilon"] = dq.upsilon;
  j["delta"] = dq.delta_map;
  return j.dump(2);
}

DualQuadruple dual_quadruple_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad dual-quadruple json: ") + e.what());
  }
  try {
    DualQuadruple dq;
    dq.stone_points = j.at("stone_points").get<int>();
    const auto& sp = j.at("space");
    ResiduatedSpace& x = dq.space;
    x.points = sp.at("points").get<int>();
    x.leq.assign(static_cast<size_t>(x.points) * x.points, 0);
    x.prod.assign(static_cast<size_t>(x.points) * x.points, -1);
    for (int p = 0; p < x.points; ++p)
      for (int q = 0; q < x.points; ++q) {
        x.leq[static_cast<size_t>(p) * x.points + q] =
            sp.at("leq").at(p).at(q).get<int>() ? 1 : 0;
        const auto& cell = sp.at("prod").at(p).at(q);
        if (!cell.is_null()) x.prod[static_cast<size_t>(p) * x.points + q] = cell.get<int>();
      }
    if (!sp.at("top").is_null()) x.top = sp.at("top").get<int>();
    x.unit_set = 0;
    for (const auto& p : sp.at("unit_set")) x.unit_set |= mask_bit(p.get<int>());
    dq.upsilon = j.at("upsilon").get<std::vector<std::vector<int>>>();
    dq.delta_map = j.at("delta").get<std::vector<int>>();
    return dq;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad dual-quadruple json: ") + e.what());
  }
}

DualQuadruple load_dual_quadruple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return dual_quadruple_from_json(buf.str());
}

std::string rotation_to_dot(const RotationSpace& rot) {
  std::ostringstream os;
  os << "digraph rotation {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int p = 0; p < rot.count(); ++p) {
    const RotationPoint& pt = rot.points[p];
    os << "  p" << p << " [label=\"" << (pt.upper ? "+" : "") << "(" << pt.u << "," << pt.x
       << ")\"];\n";
  }
  for (int p = 0; p < rot.count(); ++p)
    for (int q = 0; q < rot.count(); ++q) {
      if (p == q || !rot.le(p, q)) continue;
      bool cover = true;
      for (int z = 0; z < rot.count() && cover; ++z) {
        if (z != p && z != q && rot.le(p, z) && rot.le(z, q)) cover = false;
      }
      if (cover) os << "  p" << p << " -> p" << q << ";\n";
    }
  os << "  {rank=min;";
  for (int p = 0; p < rot.count(); ++p) {
    if (!rot.points[p].upper) os << " p" << p << ";";
  }
  os << "}\n  {rank=max;";
  for (int p = 0; p < rot.count(); ++p) {
    if (rot.points[p].upper) os << " p" << p << ";";
  }
  os << "}\n}\n";
  return os.str();
}

}  // namespace rldual

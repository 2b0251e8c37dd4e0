#include "rldual/filter_pairs.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace rldual {

FilterPairContext::FilterPairContext(const Algebra& a) : parts_(a) {
  quad_ = extract_quadruple(parts_);
  ambient_spec_ = std::make_unique<Spectrum>(parts_.ambient);
  skel_spec_ = std::make_unique<Spectrum>(parts_.skeleton);
  rad_spec_ = std::make_unique<Spectrum>(parts_.radical);

  // nuclear image of the radical under delta: same order, product
  // x *_d y = delta(x * y)
  const Algebra& rad = parts_.radical;
  Mask image_mask = 0;
  for (Elem x = 0; x < rad.size; ++x) image_mask |= mask_bit(parts_.delta(x));
  image_back_.assign(rad.size, -1);
  for (Elem x = 0; x < rad.size; ++x) {
    if (mask_has(image_mask, x)) {
      image_back_[x] = static_cast<Elem>(image_embed_.size());
      image_embed_.push_back(x);
    }
  }
  const int m = static_cast<int>(image_embed_.size());
  image_.name = a.name + "|img";
  image_.size = m;
  image_.leq.assign(static_cast<size_t>(m) * m, 0);
  image_.mul.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      image_.leq[static_cast<size_t>(i) * m + j] =
          rad.le(image_embed_[i], image_embed_[j]) ? 1 : 0;
      Elem p = parts_.delta(rad.prod(image_embed_[i], image_embed_[j]));
      image_.mul[static_cast<size_t>(i) * m + j] = image_back_[p];
    }
  }
  image_.one = image_back_[rad.one];
  Report rep = validate(image_);
  if (!rep.passed())
    throw TheoremViolation("nuclear image of '" + a.name + "' invalid: " + rep.to_string());
  if (!classify(image_).semilinear.holds)
    throw TheoremViolation("nuclear image of '" + a.name + "' is not semilinear");
  image_spec_ = std::make_unique<Spectrum>(image_);
}

PrimeFilterId FilterPairContext::mu(Elem u_skel, PrimeFilterId x_rad) const {
  Mask xf = rad_spec_->filter(x_rad);
  Mask pre = 0;
  for (Elem r = 0; r < parts_.radical.size; ++r) {
    if (mask_has(xf, quad_.nu(u_skel, r))) pre |= mask_bit(r);
  }
  return rad_spec_->id_of(pre);
}

bool FilterPairContext::fixes(PrimeFilterId u_ult, PrimeFilterId x_rad) const {
  // (a) witness search in S(A)
  Mask uf = skel_spec_->filter(u_ult);
  Mask xf = rad_spec_->filter(x_rad);
  bool by_witness = false;
  for (int i = 0; i < ambient_spec_->count() && !by_witness; ++i) {
    Mask af = ambient_spec_->filter(i);
    bool contains_u = true;
    for (Elem u = 0; u < parts_.skeleton.size; ++u) {
      if (mask_has(uf, u) && !mask_has(af, parts_.skel_embed[u])) contains_u = false;
    }
    if (!contains_u) continue;
    Mask trace = 0;
    for (Elem r = 0; r < parts_.radical.size; ++r) {
      if (mask_has(af, parts_.rad_embed[r])) trace |= mask_bit(r);
    }
    if (trace == xf) by_witness = true;
  }

  // (b) external primality
  bool by_primality = true;
  for (Elem u = 0; u < parts_.skeleton.size && by_primality; ++u) {
    for (Elem r = 0; r < parts_.radical.size && by_primality; ++r) {
      if (mask_has(xf, quad_.nu(u, r)) && !mask_has(uf, u) && !mask_has(xf, r))
        by_primality = false;
    }
  }

  if (by_witness != by_primality)
    throw DisagreementBug("fixing witness search disagrees with external primality on '" +
                          ambient().name + "'");
  return by_primality;
}

Mask FilterPairContext::f_filter(PrimeFilterId x_rad) const {
  Mask inter = parts_.skeleton.carrier_mask();
  bool any = false;
  for (int u = 0; u < skel_spec_->count(); ++u) {
    if (fixes(u, x_rad)) {
      inter &= skel_spec_->filter(u);
      any = true;
    }
  }
  if (!any)
    throw TheoremViolation("no ultrafilter fixes a radical filter on '" + ambient().name +
                           "'");
  return inter;
}

PrimeFilterId FilterPairContext::delta_image(PrimeFilterId x_rad) const {
  Mask xf = rad_spec_->filter(x_rad);
  Mask img = 0;
  for (Elem r = 0; r < parts_.radical.size; ++r) {
    if (mask_has(xf, r)) img |= mask_bit(image_back_[parts_.delta(r)]);
  }
  auto id = image_spec_->try_id_of(img);
  if (!id)
    throw TheoremViolation("delta image of a prime filter is not prime on '" +
                           ambient().name + "'");
  return *id;
}

PrimeFilterId FilterPairContext::delta_preimage(PrimeFilterId y_img) const {
  Mask yf = image_spec_->filter(y_img);
  Mask pre = 0;
  for (Elem r = 0; r < parts_.radical.size; ++r) {
    if (mask_has(yf, image_back_[parts_.delta(r)])) pre |= mask_bit(r);
  }
  return rad_spec_->id_of(pre);
}

PrimeFilterId FilterPairContext::skeleton_trace(PrimeFilterId a_amb) const {
  Mask af = ambient_spec_->filter(a_amb);
  Mask tr = 0;
  for (Elem u = 0; u < parts_.skeleton.size; ++u) {
    if (mask_has(af, parts_.skel_embed[u])) tr |= mask_bit(u);
  }
  return skel_spec_->id_of(tr);
}

PrimeFilterId FilterPairContext::radical_trace(PrimeFilterId a_amb) const {
  Mask af = ambient_spec_->filter(a_amb);
  Mask tr = 0;
  for (Elem r = 0; r < parts_.radical.size; ++r) {
    if (mask_has(af, parts_.rad_embed[r])) tr |= mask_bit(r);
  }
  return rad_spec_->id_of(tr);
}

Mask FilterPairContext::skeleton_filter_ambient(PrimeFilterId u) const {
  Mask out = 0;
  for (Elem i = 0; i < parts_.skeleton.size; ++i) {
    if (mask_has(skel_spec_->filter(u), i)) out |= mask_bit(parts_.skel_embed[i]);
  }
  return out;
}

Mask FilterPairContext::radical_filter_ambient(PrimeFilterId x) const {
  Mask out = 0;
  for (Elem i = 0; i < parts_.radical.size; ++i) {
    if (mask_has(rad_spec_->filter(x), i)) out |= mask_bit(parts_.rad_embed[i]);
  }
  return out;
}

int BowtieSpace::index_of(const BowtiePoint& pt) const {
  for (int i = 0; i < count(); ++i) {
    if (points[i] == pt) return i;
  }
  return -1;
}

ResiduatedSpace BowtieSpace::as_space() const {
  ResiduatedSpace x;
  x.points = count();
  x.leq = leq;
  x.prod = comp;
  x.unit_set = full_mask(count());
  return x;
}

BowtieSpace build_bowtie(const FilterPairContext& ctx) {
  BowtieSpace bt;
  const Spectrum& su = ctx.skel_spec();
  const Spectrum& sx = ctx.rad_spec();
  const Spectrum& sy = ctx.image_spec();

  for (int u = 0; u < su.count(); ++u) {
    for (int x = 0; x < sx.count(); ++x) {
      if (ctx.fixes(u, x)) bt.points.push_back({false, u, x});
    }
  }
  std::optional<PrimeFilterId> whole_rad = sx.whole_point();
  for (int u = 0; u < su.count(); ++u) {
    for (int y = 0; y < sy.count(); ++y) {
      PrimeFilterId pre = ctx.delta_preimage(y);
      if (whole_rad && pre == *whole_rad) continue;  // delta^{-1}[y] = R(A) excluded
      if (ctx.fixes(u, pre)) bt.points.push_back({true, u, y});
    }
  }

  const int n = bt.count();
  bt.leq.assign(static_cast<size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const BowtiePoint& a = bt.points[p];
      const BowtiePoint& b = bt.points[q];
      bool le = false;
      if (!a.upper && !b.upper)
        le = a.u == b.u && sx.included(a.x, b.x);
      else if (a.upper && b.upper)
        le = a.u == b.u && sy.included(b.x, a.x);
      else if (!a.upper && b.upper)
        le = a.u == b.u;
      bt.leq[static_cast<size_t>(p) * n + q] = le ? 1 : 0;
    }
  }

  bt.comp.assign(static_cast<size_t>(n) * n, -1);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const BowtiePoint& a = bt.points[p];
      const BowtiePoint& b = bt.points[q];
      if (a.u != b.u) continue;
      if (!a.upper && !b.upper) {
        BulletOutcome o = sx.bullet(a.x, b.x);
        int r = bt.index_of({false, a.u, o.id()});
        if (r < 0)
          throw TheoremViolation("product of fixing pairs is not fixing on '" +
                                 ctx.ambient().name + "'");
        bt.comp[static_cast<size_t>(p) * n + q] = r;
      } else if (a.upper != b.upper) {
        const BowtiePoint& low = a.upper ? b : a;
        const BowtiePoint& up = a.upper ? a : b;
        PrimeFilterId pre = ctx.delta_preimage(up.x);
        if (!sx.included(low.x, pre)) continue;
        auto arrow = sx.arrow(low.x, pre);
        if (!arrow)
          throw TheoremViolation("residual witness missing below the star on '" +
                                 ctx.ambient().name + "'");
        int r = bt.index_of({true, a.u, ctx.delta_image(*arrow)});
        if (r < 0)
          throw TheoremViolation("residual of fixing pairs leaves the bowtie on '" +
                                 ctx.ambient().name + "'");
        bt.comp[static_cast<size_t>(p) * n + q] = r;
      }
      // upper-upper stays undefined
    }
  }
  return bt;
}

std::vector<int> alpha(const FilterPairContext& ctx, const BowtieSpace& bt) {
  const Spectrum& sa = ctx.ambient_spec();
  std::vector<int> map(sa.count(), -1);
  for (int i = 0; i < sa.count(); ++i) {
    PrimeFilterId st = sa.star(i);
    BowtiePoint pt;
    if (sa.included(i, st)) {
      pt = {false, ctx.skeleton_trace(i), ctx.radical_trace(i)};
    } else {
      pt = {true, ctx.skeleton_trace(st), ctx.delta_image(ctx.radical_trace(st))};
    }
    int idx = bt.index_of(pt);
    if (idx < 0)
      throw TheoremViolation("alpha image missing from the bowtie on '" + ctx.ambient().name +
                             "'");
    map[i] = idx;
  }

  // bijection
  if (sa.count() != bt.count())
    throw TheoremViolation("bowtie point count differs from the spectrum on '" +
                           ctx.ambient().name + "'");
  std::vector<bool> hit(bt.count(), false);
  for (int v : map) {
    if (hit[v]) throw TheoremViolation("alpha not injective on '" + ctx.ambient().name + "'");
    hit[v] = true;
  }
  // order isomorphism both ways
  for (int i = 0; i < sa.count(); ++i) {
    for (int j = 0; j < sa.count(); ++j) {
      if (sa.included(i, j) != bt.le(map[i], map[j]))
        throw TheoremViolation("alpha is not an order isomorphism on '" + ctx.ambient().name +
                               "'");
    }
  }
  return map;
}

Mask w_set(const FilterPairContext& ctx, const BowtieSpace& bt, Mask u_set, Mask v_set) {
  const Spectrum& su = ctx.skel_spec();
  const Spectrum& sx = ctx.rad_spec();
  for (int i = 0; i < su.count(); ++i) {
    for (int j = 0; j < su.count(); ++j) {
      if (mask_has(u_set, i) && su.included(i, j) && !mask_has(u_set, j))
        throw NotUpset("U is not an up-set of the skeleton spectrum");
    }
  }
  for (int i = 0; i < sx.count(); ++i) {
    for (int j = 0; j < sx.count(); ++j) {
      if (mask_has(v_set, i) && sx.included(i, j) && !mask_has(v_set, j))
        throw NotUpset("V is not an up-set of the radical spectrum");
    }
  }

  Mask delta_v = 0;  // over image-spectrum ids
  for (int x = 0; x < sx.count(); ++x) {
    if (mask_has(v_set, x)) delta_v |= mask_bit(ctx.delta_image(x));
  }

  Mask out = 0;
  for (int p = 0; p < bt.count(); ++p) {
    const BowtiePoint& pt = bt.points[p];
    bool in;
    if (!pt.upper)
      in = mask_has(u_set, pt.u) && mask_has(v_set, pt.x);
    else
      in = mask_has(u_set, pt.u) || !mask_has(delta_v, pt.x);
    if (in) out |= mask_bit(p);
  }
  return out;
}

std::optional<BowtiePoint> compose_points(const BowtieSpace& bt, int p, int q) {
  int r = bt.compose(p, q);
  if (r < 0) return std::nullopt;
  return bt.points[r];
}

Report check_extrinsic_trichotomy(const FilterPairContext& ctx) {
  Report rep;
  const Algebra& a = ctx.ambient();
  const Spectrum& sa = ctx.ambient_spec();
  Mask rad_amb = 0;
  for (Elem e : ctx.parts().rad_embed) rad_amb |= mask_bit(e);

  for (int i = 0; i < sa.count(); ++i) {
    for (int j = 0; j < sa.count(); ++j) {
      BulletOutcome prod = sa.bullet(i, j);
      if (ctx.skeleton_trace(i) != ctx.skeleton_trace(j)) {
        if (!prod.is_whole()) rep.add("trichotomy.distinct_sites", {i, j});
        continue;
      }
      Mask uf = ctx.skeleton_filter_ambient(ctx.skeleton_trace(i));
      int r_u = sa.id_of(generated_filter(a, uf | rad_amb));
      int star_i = sa.star(i), star_j = sa.star(j);

      bool below = sa.included(i, r_u) && sa.included(j, r_u);
      bool sandwich_ij =
          sa.included(i, star_j) && sa.included(star_j, r_u) && sa.included(r_u, j);
      bool sandwich_ji =
          sa.included(j, star_i) && sa.included(star_i, r_u) && sa.included(r_u, i);

      if (!below && !sandwich_ij && !sandwich_ji) {
        if (!prod.is_whole()) rep.add("trichotomy.whole_case", {i, j});
        continue;
      }
      if (below) {
        BulletOutcome xr = ctx.rad_spec().bullet(ctx.radical_trace(i), ctx.radical_trace(j));
        Mask expect = generated_filter(a, uf | ctx.radical_filter_ambient(xr.id()));
        if (prod.is_whole() || sa.filter(prod.id()) != expect)
          rep.add("trichotomy.radical_case", {i, j});
      }
      auto check_sandwich = [&](int low, int high) {
        auto z = ctx.rad_spec().arrow(ctx.radical_trace(low),
                                      ctx.radical_trace(sa.star(high)));
        if (!z) {
          rep.add("trichotomy.residual_witness", {low, high});
          return;
        }
        Mask gen = generated_filter(a, uf | ctx.radical_filter_ambient(*z));
        Mask expect = sa.filter(sa.star(sa.id_of(gen)));
        if (prod.is_whole() || sa.filter(prod.id()) != expect)
          rep.add("trichotomy.sandwich_case", {low, high});
      };
      if (sandwich_ij) check_sandwich(i, j);
      if (sandwich_ji) check_sandwich(j, i);
    }
  }
  return rep;
}

namespace {

std::string point_label(const FilterPairContext& ctx, const BowtiePoint& pt) {
  auto set_label = [](const Algebra& alg, Mask f, const std::vector<Elem>& embed) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (Elem i = 0; i < alg.size; ++i) {
      if (!mask_has(f, i)) continue;
      if (!first) os << ",";
      os << embed[i];
      first = false;
    }
    os << "}";
    return os.str();
  };
  std::ostringstream os;
  if (pt.upper) os << "+";
  os << "(" << set_label(ctx.parts().skeleton, ctx.skel_spec().filter(pt.u),
                         ctx.parts().skel_embed);
  os << ",";
  if (pt.upper) {
    std::vector<Elem> to_amb(ctx.image_algebra().size);
    for (Elem i = 0; i < ctx.image_algebra().size; ++i)
      to_amb[i] = ctx.parts().rad_embed[ctx.image_embed()[i]];
    os << set_label(ctx.image_algebra(), ctx.image_spec().filter(pt.x), to_amb);
  } else {
    os << set_label(ctx.parts().radical, ctx.rad_spec().filter(pt.x), ctx.parts().rad_embed);
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string bowtie_to_dot(const FilterPairContext& ctx, const BowtieSpace& bt) {
  std::vector<int> al = alpha(ctx, bt);
  std::vector<int> inv(bt.count(), -1);
  for (int i = 0; i < static_cast<int>(al.size()); ++i) inv[al[i]] = i;

  std::ostringstream os;
  os << "digraph bowtie {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int p = 0; p < bt.count(); ++p) {
    std::ostringstream label;
    label << point_label(ctx, bt.points[p]);
    if (inv[p] >= 0) {
      Mask f = ctx.ambient_spec().filter(inv[p]);
      label << "\\n= alpha{";
      bool first = true;
      for (Elem x = 0; x < ctx.ambient().size; ++x) {
        if (!mask_has(f, x)) continue;
        if (!first) label << ",";
        label << x;
        first = false;
      }
      label << "}";
    }
    os << "  p" << p << " [label=\"" << label.str() << "\"];\n";
  }
  for (int p = 0; p < bt.count(); ++p)
    for (int q = 0; q < bt.count(); ++q) {
      if (p == q || !bt.le(p, q)) continue;
      bool cover = true;
      for (int z = 0; z < bt.count() && cover; ++z) {
        if (z != p && z != q && bt.le(p, z) && bt.le(z, q)) cover = false;
      }
      if (cover) os << "  p" << p << " -> p" << q << ";\n";
    }
  os << "  {rank=min;";
  for (int p = 0; p < bt.count(); ++p) {
    if (!bt.points[p].upper) os << " p" << p << ";";
  }
  os << "}\n  {rank=max;";
  for (int p = 0; p < bt.count(); ++p) {
    if (bt.points[p].upper) os << " p" << p << ";";
  }
  os << "}\n}\n";
  return os.str();
}

std::string bowtie_to_json(const FilterPairContext& ctx, const BowtieSpace& bt) {
  nlohmann::json j;
  j["algebra"] = ctx.ambient().name;
  auto& pts = j["points"] = nlohmann::json::array();
  for (int p = 0; p < bt.count(); ++p) {
    nlohmann::json pt;
    pt["tag"] = bt.points[p].upper ? "upper" : "lower";
    pt["ultrafilter"] = bt.points[p].u;
    pt["filter"] = bt.points[p].x;
    pt["label"] = point_label(ctx, bt.points[p]);
    pts.push_back(pt);
  }
  auto& leq = j["leq"] = nlohmann::json::array();
  auto& comp = j["compose"] = nlohmann::json::array();
  for (int p = 0; p < bt.count(); ++p) {
    nlohmann::json lrow = nlohmann::json::array();
    nlohmann::json crow = nlohmann::json::array();
    for (int q = 0; q < bt.count(); ++q) {
      lrow.push_back(bt.le(p, q) ? 1 : 0);
      int r = bt.compose(p, q);
      if (r < 0)
        crow.push_back(nullptr);
      else
        crow.push_back(r);
    }
    leq.push_back(lrow);
    comp.push_back(crow);
  }
  return j.dump(2);
}

}  // namespace rldual

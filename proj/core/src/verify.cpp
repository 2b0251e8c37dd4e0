#include "rldual/verify.hpp"

#include <algorithm>
#include <sstream>

#include "rldual/chains.hpp"
#include "rldual/dual_quadruple.hpp"
#include "rldual/filter_pairs.hpp"
#include "rldual/fixtures.hpp"
#include "rldual/isomorphism.hpp"
#include "rldual/quadruple.hpp"
#include "rldual/space.hpp"

namespace rldual {

namespace {

struct SuiteBuilder {
  SuiteResult result;

  // runs `body`, converting a thrown Error into a failed line
  template <typename F>
  void check(const std::string& name, F&& body) {
    CheckLine line{name, false, ""};
    try {
      std::string detail;
      line.passed = body(detail);
      line.detail = detail;
    } catch (const Error& e) {
      line.passed = false;
      line.detail = e.what();
    }
    result.lines.push_back(std::move(line));
  }
};

// phi_A(a) over the interned spectrum, as a point mask
Mask phi_mask(const Spectrum& s, Elem a) {
  Mask m = 0;
  for (int i = 0; i < s.count(); ++i) {
    if (mask_has(s.filter(i), a)) m |= mask_bit(i);
  }
  return m;
}

Mask ambient_mask(const std::vector<Elem>& embed, Mask local) {
  Mask m = 0;
  for (size_t i = 0; i < embed.size(); ++i) {
    if (mask_has(local, static_cast<int>(i))) m |= mask_bit(embed[i]);
  }
  return m;
}

// bullet with the Whole sentinel treated as an absorbing top
struct ExtendedBullet {
  const Spectrum& s;
  static constexpr int kWhole = -1;

  int mul(int a, int b) const {
    if (a == kWhole || b == kWhole) return kWhole;
    BulletOutcome o = s.bullet(a, b);
    return o.is_whole() ? kWhole : o.id();
  }
  bool le(int a, int b) const {
    if (b == kWhole) return true;
    if (a == kWhole) return false;
    return s.included(a, b);
  }
};

void core_suite(SuiteBuilder& b, const std::vector<Algebra>& bounded,
                const std::vector<Algebra>& sbp) {
  for (const Algebra& a : bounded) {
    b.check("core.validate[" + a.name + "]",
            [&](std::string& d) {
              Report r = validate(a);
              d = r.passed() ? "" : r.to_string();
              return r.passed();
            });
    b.check("core.identities[" + a.name + "]", [&](std::string& d) {
      for (const IdentityCheck& c : check_cidrl_identities(a)) {
        if (!c.holds) {
          d = "identity " + std::to_string(c.id) + " fails";
          return false;
        }
      }
      return true;
    });
    b.check("core.zerodiv[" + a.name + "]", [&](std::string& d) {
      ClassificationReport c = classify(a);  // throws on a failed cross-check
      if (a.size >= 2 &&
          c.has_zero_divisors->holds == (c.smtl->holds && c.directly_indecomposable->holds)) {
        d = "equivalence violated";
        return false;
      }
      return true;
    });
  }
  for (const Algebra& a : sbp) {
    b.check("core.radical[" + a.name + "]", [&](std::string& d) {
      Mask rad = radical(a);
      Mask cor = coradical(a);  // internal coradical/ordering assertions
      auto [skel, embed] = boolean_skeleton(a);
      Mask skel_mask = 0;
      for (Elem e : embed) skel_mask |= mask_bit(e);
      if ((rad & skel_mask) != mask_bit(a.one)) {
        d = "radical and skeleton overlap beyond the unit";
        return false;
      }
      (void)cor;
      return true;
    });
    b.check("core.nucleus[" + a.name + "]", [&](std::string&) {
      double_negation_nucleus(a);  // asserts wdl-admissibility
      return true;
    });
    b.check("core.bottom_roundtrip[" + a.name + "]", [&](std::string& d) {
      ClassificationReport c = classify(a);
      if (c.has_zero_divisors->holds) {
        d = "skipped (zero divisors)";
        return true;
      }
      Algebra stripped = strip_bottom(a);
      Algebra back = add_bottom(stripped);
      if (!find_isomorphism(back, a)) {
        d = "add(strip(A)) not isomorphic to A";
        return false;
      }
      Algebra hoop = radical_algebra(a).first;
      Algebra there = add_bottom(hoop);
      Algebra again = strip_bottom(there);
      if (!find_isomorphism(again, hoop)) {
        d = "strip(add(H)) not isomorphic to H";
        return false;
      }
      return true;
    });
  }
}

void chains_suite(SuiteBuilder& b, int max_chain) {
  long prev = 0;
  for (int n = 1; n <= max_chain; ++n) {
    b.check("chains.n" + std::to_string(n), [&](std::string& d) {
      std::vector<Algebra> chains = enumerate_mtl_chains(n, std::max(n, kDefaultChainBound));
      for (const Algebra& c : chains) {
        if (!validate(c).passed()) {
          d = c.name + " fails validation";
          return false;
        }
        ClassificationReport cr = classify(c);
        if (!cr.is_mtl()) {
          d = c.name + " is not an MTL-algebra";
          return false;
        }
      }
      long count = static_cast<long>(chains.size());
      if (count < prev) {
        d = "count not monotone";
        return false;
      }
      prev = count;
      d = std::to_string(count) + " chains";
      return true;
    });
  }
}

void filters_suite(SuiteBuilder& b, const std::vector<Algebra>& bounded,
                   const std::vector<Algebra>& sbp) {
  for (const Algebra& a : bounded) {
    if (!validate(a).passed()) continue;
    b.check("filters.bullet_laws[" + a.name + "]", [&](std::string& d) {
      Spectrum s(a);  // construction asserts prime-or-whole, arrow, star
      ExtendedBullet eb{s};
      const int n = s.count();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (eb.mul(i, j) != eb.mul(j, i)) {
            d = "commutativity";
            return false;
          }
          for (int k = 0; k < n; ++k) {
            if (eb.mul(eb.mul(i, j), k) != eb.mul(i, eb.mul(j, k))) {
              d = "associativity";
              return false;
            }
            if (s.included(i, j) && !eb.le(eb.mul(i, k), eb.mul(j, k))) {
              d = "monotonicity";
              return false;
            }
          }
        }
      return true;
    });
    b.check("filters.whole_iff_zero[" + a.name + "]", [&](std::string& d) {
      Spectrum s(a);
      for (int i = 0; i < s.count(); ++i)
        for (int j = 0; j < s.count(); ++j) {
          Mask up = filter_bullet_mask(a, s.filter(i), s.filter(j));
          bool hits_zero = mask_has(up, *a.zero);
          if (hits_zero != s.bullet(i, j).is_whole()) {
            d = "whole outcome differs from hitting the bottom";
            return false;
          }
        }
      return true;
    });
    b.check("filters.prime_extension[" + a.name + "]", [&](std::string& d) {
      Spectrum s(a);
      // every filter is a principal up-set here
      std::vector<Mask> all_filters;
      for (Elem g = 0; g < a.size; ++g) all_filters.push_back(upward_closure(a, mask_bit(g)));
      for (Mask f : all_filters)
        for (Mask g : all_filters)
          for (int c = 0; c < s.count(); ++c) {
            Mask fc = s.filter(c);
            Mask up = upward_closure(a, [&] {
              Mask prods = 0;
              for (Elem x = 0; x < a.size; ++x)
                for (Elem y = 0; y < a.size; ++y) {
                  if (mask_has(f, x) && mask_has(g, y)) prods |= mask_bit(a.prod(x, y));
                }
              return prods;
            }());
            if (!mask_subset(up, fc)) continue;
            bool found_f = false, found_g = false;
            for (int p = 0; p < s.count(); ++p) {
              Mask pf = s.filter(p);
              if (mask_subset(f, pf)) {
                Mask prods = 0;
                for (Elem x = 0; x < a.size; ++x)
                  for (Elem y = 0; y < a.size; ++y) {
                    if (mask_has(pf, x) && mask_has(g, y)) prods |= mask_bit(a.prod(x, y));
                  }
                if (mask_subset(upward_closure(a, prods), fc)) found_f = true;
              }
              if (mask_subset(g, pf)) {
                Mask prods = 0;
                for (Elem x = 0; x < a.size; ++x)
                  for (Elem y = 0; y < a.size; ++y) {
                    if (mask_has(f, x) && mask_has(pf, y)) prods |= mask_bit(a.prod(x, y));
                  }
                if (mask_subset(upward_closure(a, prods), fc)) found_g = true;
              }
            }
            if (!found_f || !found_g) {
              d = "no prime extension";
              return false;
            }
          }
      return true;
    });
  }

  for (const Algebra& a : sbp) {
    b.check("filters.star_lemmas[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      const Spectrum& s = ctx.ambient_spec();
      Mask rad_amb = ambient_mask(ctx.parts().rad_embed, ctx.parts().radical.carrier_mask());
      for (int i = 0; i < s.count(); ++i) {
        int st = s.star(i);
        for (int j = 0; j < s.count(); ++j) {
          if (s.included(i, j) && !s.included(s.star(j), st)) {
            d = "star not order-reversing";
            return false;
          }
          if (ctx.skeleton_trace(i) != ctx.skeleton_trace(j) && !s.bullet(i, j).is_whole()) {
            d = "distinct ultrafilters with a proper product";
            return false;
          }
        }
        if (!s.included(i, st) && !s.included(st, i)) {
          d = "filter and star incomparable";
          return false;
        }
        if (ctx.skeleton_trace(i) != ctx.skeleton_trace(st)) {
          d = "star changes the ultrafilter";
          return false;
        }
        Mask fi = s.filter(i);
        Mask fst = s.filter(st);
        if (!mask_subset(rad_amb, fi) && !mask_subset(rad_amb, fst)) {
          d = "neither filter nor star contains the radical";
          return false;
        }
        // sandwich through R_u
        Mask uf = ambient_mask(ctx.parts().skel_embed, ctx.skel_spec().filter(ctx.skeleton_trace(i)));
        Mask r_u = generated_filter(a, uf | rad_amb);
        if (!(mask_subset(fi, r_u) && mask_subset(r_u, fst)) &&
            !(mask_subset(fst, r_u) && mask_subset(r_u, fi))) {
          d = "R_u sandwich fails";
          return false;
        }
        if (mask_subset(rad_amb, fi) && s.filter(s.star(st)) != fi) {
          d = "double star moves a radical-containing filter";
          return false;
        }
      }
      // R_u is star-fixed, for every ultrafilter
      for (int u = 0; u < ctx.skel_spec().count(); ++u) {
        Mask uf = ambient_mask(ctx.parts().skel_embed, ctx.skel_spec().filter(u));
        Mask r_u = generated_filter(a, uf | rad_amb);
        int id = s.id_of(r_u);
        if (s.star(id) != id) {
          d = "R_u is not star-fixed";
          return false;
        }
      }
      return true;
    });
    b.check("filters.generated_prime[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      const Spectrum& s = ctx.ambient_spec();
      for (int u = 0; u < ctx.skel_spec().count(); ++u) {
        for (int x = 0; x < ctx.rad_spec().count(); ++x) {
          if (!ctx.fixes(u, x)) continue;
          Mask uf = ambient_mask(ctx.parts().skel_embed, ctx.skel_spec().filter(u));
          Mask xf = ambient_mask(ctx.parts().rad_embed, ctx.rad_spec().filter(x));
          Mask p = generated_filter(a, uf | xf);
          if (!is_prime_filter(a, p)) {
            d = "generated filter not prime";
            return false;
          }
          int pid = s.id_of(p);
          if (ctx.skeleton_trace(pid) != u || ctx.radical_trace(pid) != x) {
            d = "generated filter has wrong traces";
            return false;
          }
        }
      }
      return true;
    });
    b.check("filters.rustar[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      const Spectrum& s = ctx.ambient_spec();
      Mask rad_amb = ambient_mask(ctx.parts().rad_embed, ctx.parts().radical.carrier_mask());
      Mask cor = coradical(a);
      Mask delta_rad = 0;  // {~~x : x in R}
      for (Elem x = 0; x < a.size; ++x) {
        if (mask_has(rad_amb, x)) delta_rad |= mask_bit(a.neg(a.neg(x)));
      }
      for (int u = 0; u < ctx.skel_spec().count(); ++u) {
        Mask uf = ambient_mask(ctx.parts().skel_embed, ctx.skel_spec().filter(u));
        for (int x = 0; x < ctx.rad_spec().count(); ++x) {
          if (!ctx.fixes(u, x)) continue;
          Mask xf = ambient_mask(ctx.parts().rad_embed, ctx.rad_spec().filter(x));
          Mask gen = generated_filter(a, uf | xf);
          Mask star = s.filter(s.star(s.id_of(gen)));
          Mask delta_x = 0;
          for (Elem e = 0; e < a.size; ++e) {
            if (mask_has(xf, e)) delta_x |= mask_bit(a.neg(a.neg(e)));
          }
          if (!mask_subset(gen, star)) {
            d = "generated filter not below its star";
            return false;
          }
          if (delta_x == delta_rad) {
            Mask r_u = generated_filter(a, uf | rad_amb);
            if (star != r_u) {
              d = "degenerate delta image but star differs from R_u";
              return false;
            }
            continue;
          }
          // eq. description of the star through coradical complements
          Mask described = 0;
          for (Elem ue = 0; ue < a.size; ++ue) {
            if (!mask_has(uf, ue)) continue;
            for (Elem xe = 0; xe < a.size; ++xe) {
              if (!mask_has(rad_amb, xe)) continue;
              if (mask_has(delta_x, a.neg(a.neg(xe)))) continue;
              described |= mask_bit(a.meet(ue, a.neg(xe)));
            }
          }
          described = upward_closure(a, described);
          if (described != star) {
            d = "star description via coradical complements fails";
            return false;
          }
          Mask star_corad = star & cor;
          Mask expect = 0;
          for (Elem xe = 0; xe < a.size; ++xe) {
            if (mask_has(rad_amb, xe) && !mask_has(delta_x, a.neg(a.neg(xe))))
              expect |= mask_bit(a.neg(xe));
          }
          if (star_corad != expect) {
            d = "coradical slice of the star is wrong";
            return false;
          }
        }
      }
      return true;
    });
    b.check("filters.doubleneg[" + a.name + "]", [&](std::string& d) {
      Spectrum s(a);
      Mask rad_amb = radical(a);
      for (int i = 0; i < s.count(); ++i) {
        if (!mask_subset(rad_amb, s.filter(i))) continue;
        if (s.star(s.star(i)) != i) {
          d = "double star moves a radical-containing prime";
          return false;
        }
      }
      return true;
    });
  }
}

void duality_suite(SuiteBuilder& b, const std::vector<Algebra>& bounded,
                   const std::vector<Algebra>& sbp) {
  for (const Algebra& a : bounded) {
    if (!validate(a).passed()) continue;
    b.check("duality.space_axioms[" + a.name + "]", [&](std::string& d) {
      Report r = check_residuated_space(spectrum_space(a), SpaceMode::Mtl);
      d = r.passed() ? "" : r.to_string();
      return r.passed();
    });
    b.check("duality.roundtrip[" + a.name + "]", [&](std::string&) {
      unit_map(a);  // asserts the isomorphism
      return true;
    });
    b.check("duality.point_ops[" + a.name + "]", [&](std::string& d) {
      Spectrum s(a);
      ResiduatedSpace x = spectrum_space(s);
      for (int i = 0; i < x.points; ++i) {
        if (star_point(x, i) != s.star(i)) {
          d = "point star disagrees with the filter star";
          return false;
        }
        for (int j = 0; j < x.points; ++j) {
          auto ap = arrow_point(x, i, j);
          auto af = s.arrow(i, j);
          if (ap.has_value() != af.has_value() || (ap && *ap != *af)) {
            d = "point arrow disagrees with the filter arrow";
            return false;
          }
        }
      }
      return true;
    });
    b.check("duality.hom[" + a.name + "]", [&](std::string& d) {
      // identity dualizes to the identity
      std::vector<Elem> ident(a.size);
      for (Elem e = 0; e < a.size; ++e) ident[e] = e;
      std::vector<int> da = dualize_hom(a, a, ident);
      for (int i = 0; i < static_cast<int>(da.size()); ++i) {
        if (da[i] != i) {
          d = "identity hom has a nontrivial dual";
          return false;
        }
      }
      if (a.size >= 2) {
        // the bounds map from the two-element algebra
        Algebra two = godel_chain(2);
        std::vector<Elem> f = {*a.zero, a.one};
        dualize_hom(two, a, f);  // asserts the bounded-morphism clauses
      }
      return true;
    });
  }
  for (const Algebra& a : sbp) {
    b.check("duality.gmtl_roundtrip[" + a.name + "|rad]", [&](std::string& d) {
      Algebra rad = radical_algebra(a).first;
      Report r = check_residuated_space(spectrum_space(rad), SpaceMode::Gmtl);
      if (!r.passed()) {
        d = r.to_string();
        return false;
      }
      unit_map(rad);
      return true;
    });
  }
}

void quadruples_suite(SuiteBuilder& b, const std::vector<Algebra>& sbp) {
  for (const Algebra& a : sbp) {
    b.check("quadruples.roundtrip[" + a.name + "]", [&](std::string& d) {
      SbpParts parts(a);
      AlgebraicQuadruple q = extract_quadruple(parts);
      QuadrupleComposition c = compose(q);  // includes well-definedness
      if (c.algebra.size != a.size) {
        d = "class count differs from the carrier";
        return false;
      }
      std::vector<Elem> map(a.size);
      for (Elem e = 0; e < a.size; ++e) {
        auto [u, x] = decompose_element(parts, e);
        map[e] = c.pair_class(u, x);
      }
      std::string why;
      if (!is_homomorphism(a, c.algebra, map, &why)) {
        d = "decomposition map is not a homomorphism: " + why;
        return false;
      }
      std::vector<bool> hit(a.size, false);
      for (Elem e : map) hit[e] = true;
      if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
        d = "decomposition map is not onto";
        return false;
      }
      return true;
    });
    b.check("quadruples.skeleton_radical[" + a.name + "]", [&](std::string& d) {
      AlgebraicQuadruple q = extract_quadruple(a);
      QuadrupleComposition c = compose(q);
      Algebra skel = boolean_skeleton(c.algebra).first;
      if (!find_isomorphism(skel, q.skeleton)) {
        d = "skeleton of the composite differs";
        return false;
      }
      Algebra rad = radical_algebra(c.algebra).first;
      if (!find_isomorphism(rad, q.radical)) {
        d = "radical of the composite differs";
        return false;
      }
      return true;
    });
    b.check("quadruples.boolean_identity[" + a.name + "]", [&](std::string& d) {
      SbpParts parts(a);
      for (Elem u_loc = 0; u_loc < parts.skeleton.size; ++u_loc) {
        for (Elem x_loc = 0; x_loc < parts.radical.size; ++x_loc) {
          Elem u = parts.skel_embed[u_loc];
          Elem x = parts.rad_embed[x_loc];
          Elem lhs = a.meet(a.join(u, a.neg(x)), a.join(a.neg(u), x));
          Elem rhs = a.join(a.meet(u, x), a.meet(a.neg(u), a.neg(x)));
          if (lhs != rhs) {
            d = "two decomposition forms differ";
            return false;
          }
        }
      }
      return true;
    });
  }
}

void bowtie_suite(SuiteBuilder& b, const std::vector<Algebra>& sbp) {
  for (const Algebra& a : sbp) {
    b.check("bowtie.alpha[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      BowtieSpace bt = build_bowtie(ctx);
      std::vector<int> al = alpha(ctx, bt);  // asserts bijective order iso
      if (bt.count() != ctx.ambient_spec().count()) {
        d = "point counts differ";
        return false;
      }
      (void)al;
      return true;
    });
    b.check("bowtie.transport[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      BowtieSpace bt = build_bowtie(ctx);
      Report r = check_alpha_transport(ctx, bt, alpha(ctx, bt));
      d = r.passed() ? "" : r.to_string();
      return r.passed();
    });
    b.check("bowtie.trichotomy[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      Report r = check_extrinsic_trichotomy(ctx);
      d = r.passed() ? "" : r.to_string();
      return r.passed();
    });
    b.check("bowtie.space_axioms[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      BowtieSpace bt = build_bowtie(ctx);
      Report r = check_residuated_space(bt.as_space(), SpaceMode::Mtl);
      d = r.passed() ? "" : r.to_string();
      return r.passed();
    });
    b.check("bowtie.wsets[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      BowtieSpace bt = build_bowtie(ctx);
      std::vector<int> al = alpha(ctx, bt);
      const Spectrum& sa = ctx.ambient_spec();
      for (Elem u_loc = 0; u_loc < ctx.parts().skeleton.size; ++u_loc) {
        for (Elem x_loc = 0; x_loc < ctx.parts().radical.size; ++x_loc) {
          Mask u_set = phi_mask(ctx.skel_spec(), u_loc);
          Mask v_set = phi_mask(ctx.rad_spec(), x_loc);
          Mask w = w_set(ctx, bt, u_set, v_set);
          Mask pre = 0;
          for (int i = 0; i < sa.count(); ++i) {
            if (mask_has(w, al[i])) pre |= mask_bit(i);
          }
          Elem u = ctx.parts().skel_embed[u_loc];
          Elem x = ctx.parts().rad_embed[x_loc];
          Elem target = a.meet(a.join(u, a.neg(x)), a.join(a.neg(u), x));
          if (pre != phi_mask(sa, target)) {
            d = "w-set preimage misses the decomposition element";
            return false;
          }
        }
      }
      // basic w-sets separate points, so the generated topology is discrete
      for (int p = 0; p < bt.count(); ++p)
        for (int q = 0; q < bt.count(); ++q) {
          if (p == q) continue;
          bool separated = false;
          for (Elem u_loc = 0; u_loc < ctx.parts().skeleton.size && !separated; ++u_loc)
            for (Elem x_loc = 0; x_loc < ctx.parts().radical.size && !separated; ++x_loc) {
              Mask w = w_set(ctx, bt, phi_mask(ctx.skel_spec(), u_loc),
                             phi_mask(ctx.rad_spec(), x_loc));
              if (mask_has(w, p) != mask_has(w, q)) separated = true;
            }
          if (!separated) {
            d = "subbase does not separate two points";
            return false;
          }
        }
      return true;
    });
    b.check("bowtie.fixes_lemmas[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      const Spectrum& su = ctx.skel_spec();
      const Spectrum& sx = ctx.rad_spec();
      for (int x = 0; x < sx.count(); ++x) {
        bool any = false;
        for (int u = 0; u < su.count(); ++u) any = any || ctx.fixes(u, x);
        if (!any) {
          d = "a radical filter fixed by no ultrafilter";
          return false;
        }
        Mask fx = ctx.f_filter(x);
        for (int u = 0; u < su.count(); ++u) {
          if (ctx.fixes(u, x) != mask_subset(fx, su.filter(u))) {
            d = "f-filter characterization fails";
            return false;
          }
        }
      }
      auto whole = sx.whole_point();
      for (int u = 0; u < su.count(); ++u) {
        if (!ctx.fixes(u, *whole)) {
          d = "an ultrafilter does not fix the whole radical";
          return false;
        }
      }
      // fixed points of mu characterize the fixing relation
      for (int u = 0; u < su.count(); ++u)
        for (int x = 0; x < sx.count(); ++x) {
          bool all_fixed = true;
          for (Elem ue = 0; ue < ctx.parts().skeleton.size; ++ue) {
            if (mask_has(su.filter(u), ue)) continue;
            if (ctx.mu(ue, x) != x) all_fixed = false;
          }
          if (ctx.fixes(u, x) && !all_fixed) {
            d = "fixing pair with a moving mu";
            return false;
          }
          if (x != *whole && all_fixed && !ctx.fixes(u, x)) {
            d = "mu-fixed proper filter that is not fixed";
            return false;
          }
        }
      return true;
    });
    b.check("bowtie.beta[" + a.name + "]", [&](std::string& d) {
      // fixed points of the dual closure correspond to image primes
      FilterPairContext ctx(a);
      const Spectrum& sx = ctx.rad_spec();
      const Spectrum& sy = ctx.image_spec();
      for (int y = 0; y < sy.count(); ++y) {
        if (ctx.delta_image(ctx.delta_preimage(y)) != y) {
          d = "delta image does not invert the preimage";
          return false;
        }
      }
      int fixed = 0;
      for (int x = 0; x < sx.count(); ++x) {
        if (ctx.delta_preimage(ctx.delta_image(x)) == x) ++fixed;
      }
      if (fixed != sy.count()) {
        d = "fixed-point count differs from the image spectrum";
        return false;
      }
      return true;
    });
  }
}

void dualquad_suite(SuiteBuilder& b, const std::vector<Algebra>& sbp) {
  for (const Algebra& a : sbp) {
    b.check("dualquad.extract[" + a.name + "]", [&](std::string&) {
      extract_dual_quadruple(a);  // validates internally
      return true;
    });
    b.check("dualquad.mu_splitting[" + a.name + "]", [&](std::string& d) {
      FilterPairContext ctx(a);
      Report r = check_mu_splitting(ctx);
      d = r.passed() ? "" : r.to_string();
      return r.passed();
    });
    b.check("dualquad.square[" + a.name + "]", [&](std::string& d) {
      CommuteSquare sq = commute_square(a);
      d = sq.detail;
      return sq.all();
    });
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"core", "chains", "filters", "duality", "quadruples", "bowtie", "dualquad"};
}

SuiteResult run_suite(const std::string& name, const std::vector<Algebra>& extra,
                      int max_chain) {
  SuiteBuilder b;
  b.result.suite = name;

  std::vector<Algebra> bounded = bounded_corpus(max_chain);
  std::vector<Algebra> sbp = sbp_corpus(max_chain);
  for (const Algebra& a : extra) {
    if (a.bounded()) bounded.push_back(a);
    if (is_sbp_algebra(a)) sbp.push_back(a);
  }

  if (name == "core")
    core_suite(b, bounded, sbp);
  else if (name == "chains")
    chains_suite(b, max_chain);
  else if (name == "filters")
    filters_suite(b, bounded, sbp);
  else if (name == "duality")
    duality_suite(b, bounded, sbp);
  else if (name == "quadruples")
    quadruples_suite(b, sbp);
  else if (name == "bowtie")
    bowtie_suite(b, sbp);
  else if (name == "dualquad")
    dualquad_suite(b, sbp);
  else
    throw ParseError("unknown suite '" + name + "'");
  return b.result;
}

std::vector<SuiteResult> run_all_suites(const std::vector<Algebra>& extra, int max_chain) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, extra, max_chain));
  return out;
}

}  // namespace rldual

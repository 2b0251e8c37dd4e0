#include "rldual/quadruple.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "rldual/algebra_io.hpp"
#include "rldual/isomorphism.hpp"

namespace rldual {

SbpParts::SbpParts(const Algebra& a) : ambient(a) {
  require_sbp(a);
  auto [skel, se] = boolean_skeleton(a);
  skeleton = std::move(skel);
  skel_embed = std::move(se);
  auto [rad, re] = radical_algebra(a);
  radical = std::move(rad);
  rad_embed = std::move(re);
  delta = double_negation_nucleus(a);

  skel_back.assign(a.size, -1);
  for (size_t i = 0; i < skel_embed.size(); ++i) skel_back[skel_embed[i]] = static_cast<Elem>(i);
  rad_back.assign(a.size, -1);
  for (size_t i = 0; i < rad_embed.size(); ++i) rad_back[rad_embed[i]] = static_cast<Elem>(i);
}

AlgebraicQuadruple extract_quadruple(const SbpParts& p) {
  AlgebraicQuadruple q;
  q.skeleton = p.skeleton;
  q.radical = p.radical;
  q.delta = p.delta;
  const Algebra& a = p.ambient;
  q.ext_join.assign(static_cast<size_t>(q.skeleton.size) * q.radical.size, 0);
  for (Elem u = 0; u < q.skeleton.size; ++u) {
    for (Elem x = 0; x < q.radical.size; ++x) {
      Elem j = a.join(p.skel_embed[u], p.rad_embed[x]);
      if (p.rad_back[j] < 0)
        throw TheoremViolation("u v x left the radical on '" + a.name + "'");
      q.ext_join[static_cast<size_t>(u) * q.radical.size + x] = p.rad_back[j];
    }
  }
  Report rep = validate_quadruple(q);
  if (!rep.passed())
    throw TheoremViolation("extracted quadruple of '" + a.name + "' invalid: " +
                           rep.to_string());
  return q;
}

AlgebraicQuadruple extract_quadruple(const Algebra& a) {
  return extract_quadruple(SbpParts(a));
}

Report validate_quadruple(const AlgebraicQuadruple& q) {
  Report r;
  const Algebra& b = q.skeleton;
  const Algebra& a = q.radical;
  if (!b.bounded()) {
    r.add("skeleton.bounded", {});
    return r;
  }
  if (a.bounded()) {
    r.add("radical.gmtl_mode", {});
    return r;
  }
  if (q.ext_join.size() != static_cast<size_t>(b.size) * a.size)
    throw DimensionMismatch("ext_join table shape");
  if (q.delta.size() != a.size) throw DimensionMismatch("delta table shape");

  Report vb = validate(b);
  if (!vb.passed()) {
    r.add("skeleton.valid", {}, vb.violations.front().clause);
    return r;
  }
  for (Elem u = 0; u < b.size; ++u) {
    if (b.join(u, b.neg(u)) != b.one || b.meet(u, b.neg(u)) != *b.zero)
      r.add("skeleton.boolean", {u});
  }
  Report va = validate(a);
  if (!va.passed()) {
    r.add("radical.valid", {}, va.violations.front().clause);
    return r;
  }
  if (!classify(a).semilinear.holds) r.add("radical.semilinear", {});

  // (V1) nu_u is a GMTL endomorphism, lambda_x a lattice homomorphism
  for (Elem u = 0; u < b.size; ++u) {
    if (q.nu(u, a.one) != a.one) r.add("V1.nu_unit", {u});
    for (Elem x = 0; x < a.size; ++x) {
      for (Elem y = 0; y < a.size; ++y) {
        if (q.nu(u, a.meet(x, y)) != a.meet(q.nu(u, x), q.nu(u, y)))
          r.add("V1.nu_meet", {u, x, y});
        if (q.nu(u, a.join(x, y)) != a.join(q.nu(u, x), q.nu(u, y)))
          r.add("V1.nu_join", {u, x, y});
        if (q.nu(u, a.prod(x, y)) != a.prod(q.nu(u, x), q.nu(u, y)))
          r.add("V1.nu_prod", {u, x, y});
        if (q.nu(u, a.res(x, y)) != a.res(q.nu(u, x), q.nu(u, y)))
          r.add("V1.nu_res", {u, x, y});
      }
    }
  }
  for (Elem x = 0; x < a.size; ++x) {
    for (Elem u = 0; u < b.size; ++u) {
      for (Elem v = 0; v < b.size; ++v) {
        if (q.nu(b.meet(u, v), x) != a.meet(q.nu(u, x), q.nu(v, x)))
          r.add("V1.lambda_meet", {x, u, v});
        if (q.nu(b.join(u, v), x) != a.join(q.nu(u, x), q.nu(v, x)))
          r.add("V1.lambda_join", {x, u, v});
      }
    }
  }

  // (V2)
  for (Elem x = 0; x < a.size; ++x) {
    if (q.nu(*b.zero, x) != x) r.add("V2.nu_zero_identity", {x});
    if (q.nu(b.one, x) != a.one) r.add("V2.nu_one_constant", {x});
  }

  // (V3)
  for (Elem u = 0; u < b.size; ++u)
    for (Elem v = 0; v < b.size; ++v)
      for (Elem x = 0; x < a.size; ++x)
        for (Elem y = 0; y < a.size; ++y) {
          Elem lhs = a.join(q.nu(u, x), q.nu(v, y));
          Elem mid = q.nu(b.join(u, v), a.join(x, y));
          Elem rhs = q.nu(u, q.nu(v, a.join(x, y)));
          if (lhs != mid || mid != rhs) r.add("V3.join_exchange", {u, v, x, y});
        }

  WdlCheck w = is_wdl_admissible(a, q.delta);
  if (!w.admissible) r.add("wdl." + w.clause, w.witness);
  return r;
}

namespace {

using Pair = std::pair<Elem, Elem>;
using Key = std::tuple<Elem, Elem, Elem>;

Key class_key(const AlgebraicQuadruple& q, Elem u, Elem x) {
  Elem nu_negu_x = q.nu(q.skeleton.neg(u), x);
  Elem nu_u_dx = q.nu(u, q.delta(x));
  return {u, nu_negu_x, nu_u_dx};
}

Pair prod_pair(const AlgebraicQuadruple& q, Pair p1, Pair p2) {
  // The residual slots aim at delta-closed targets: on the mixed Boolean
  // components the product of a coradical complement with a radical
  // element is ~(y -> delta(x)), never ~(y -> x).  The two agree when
  // delta is the identity or constantly 1, and only then.
  const Algebra& b = q.skeleton;
  const Algebra& a = q.radical;
  auto [u, x] = p1;
  auto [v, y] = p2;
  Elem t1 = q.nu(b.join(u, b.neg(v)), a.res(y, q.delta(x)));
  Elem t2 = q.nu(b.join(b.neg(u), v), a.res(x, q.delta(y)));
  Elem t3 = q.nu(b.join(b.neg(u), b.neg(v)), a.prod(x, y));
  return {b.meet(u, v), a.meet(t1, a.meet(t2, t3))};
}

Pair res_pair(const AlgebraicQuadruple& q, Pair p1, Pair p2) {
  const Algebra& b = q.skeleton;
  const Algebra& a = q.radical;
  auto [u, x] = p1;
  auto [v, y] = p2;
  Elem t1 = q.nu(b.join(u, v), a.res(q.delta(y), q.delta(x)));
  Elem t2 = q.nu(b.join(b.neg(u), v), q.delta(a.prod(x, y)));
  Elem t3 = q.nu(b.join(b.neg(u), b.neg(v)), a.res(x, y));
  return {b.res(u, v), a.meet(t1, a.meet(t2, t3))};
}

Pair meet_pair(const AlgebraicQuadruple& q, Pair p1, Pair p2) {
  const Algebra& b = q.skeleton;
  const Algebra& a = q.radical;
  auto [u, x] = p1;
  auto [v, y] = p2;
  Elem t1 = q.nu(b.join(u, v), a.join(x, y));
  Elem t2 = q.nu(b.join(u, b.neg(v)), x);
  Elem t3 = q.nu(b.join(b.neg(u), v), y);
  Elem t4 = q.nu(b.join(b.neg(u), b.neg(v)), a.meet(x, y));
  return {b.meet(u, v), a.meet(a.meet(t1, t2), a.meet(t3, t4))};
}

Pair join_pair(const AlgebraicQuadruple& q, Pair p1, Pair p2) {
  const Algebra& b = q.skeleton;
  const Algebra& a = q.radical;
  auto [u, x] = p1;
  auto [v, y] = p2;
  Elem t1 = q.nu(b.join(u, v), a.meet(x, y));
  Elem t2 = q.nu(b.join(u, b.neg(v)), y);
  Elem t3 = q.nu(b.join(b.neg(u), v), x);
  Elem t4 = q.nu(b.join(b.neg(u), b.neg(v)), a.join(x, y));
  return {b.join(u, v), a.meet(a.meet(t1, t2), a.meet(t3, t4))};
}

}  // namespace

QuadrupleComposition compose(const AlgebraicQuadruple& q) {
  Report rep = validate_quadruple(q);
  if (!rep.passed()) throw QuadrupleInvalid("quadruple invalid: " + rep.to_string());

  const Algebra& b = q.skeleton;
  const Algebra& a = q.radical;
  const int cols = a.size;
  const int pairs = b.size * a.size;

  std::map<Key, int> key_index;
  for (Elem u = 0; u < b.size; ++u)
    for (Elem x = 0; x < a.size; ++x) key_index.emplace(class_key(q, u, x), 0);
  int next = 0;
  for (auto& [k, v] : key_index) v = next++;

  QuadrupleComposition c;
  c.cols = cols;
  c.class_of.assign(pairs, -1);
  c.rep.assign(key_index.size(), {-1, -1});
  for (Elem u = 0; u < b.size; ++u)
    for (Elem x = 0; x < a.size; ++x) {
      int cls = key_index.at(class_key(q, u, x));
      c.class_of[static_cast<size_t>(u) * cols + x] = cls;
      if (c.rep[cls].first < 0) c.rep[cls] = {u, x};
    }

  const int n = static_cast<int>(c.rep.size());
  auto cls_of = [&](Pair p) { return key_index.at(class_key(q, p.first, p.second)); };

  // each operation on canonical representatives, with representative
  // independence verified across every member of both classes
  auto build = [&](auto&& op, const char* opname) {
    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[static_cast<size_t>(i) * n + j] = cls_of(op(q, c.rep[i], c.rep[j]));
    for (Elem u = 0; u < b.size; ++u)
      for (Elem x = 0; x < a.size; ++x)
        for (Elem v = 0; v < b.size; ++v)
          for (Elem y = 0; y < a.size; ++y) {
            int i = c.class_of[static_cast<size_t>(u) * cols + x];
            int j = c.class_of[static_cast<size_t>(v) * cols + y];
            if (cls_of(op(q, {u, x}, {v, y})) != table[static_cast<size_t>(i) * n + j])
              throw WellDefinednessFailure(std::string(opname) +
                                           " depends on the representatives");
          }
    return table;
  };

  std::vector<int> prod_t = build(prod_pair, "product");
  std::vector<int> res_t = build(res_pair, "residual");
  std::vector<int> meet_t = build(meet_pair, "meet");
  std::vector<int> join_t = build(join_pair, "join");

  Algebra& alg = c.algebra;
  alg.name = "compose";
  alg.size = n;
  alg.leq.assign(static_cast<size_t>(n) * n, 0);
  alg.mul.assign(prod_t.begin(), prod_t.end());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      alg.leq[static_cast<size_t>(i) * n + j] =
          (meet_t[static_cast<size_t>(i) * n + j] == i) ? 1 : 0;
  alg.one = c.class_of[static_cast<size_t>(b.one) * cols + a.one];
  alg.zero = c.class_of[static_cast<size_t>(*b.zero) * cols + a.one];

  Report v = validate(alg);
  if (!v.passed()) throw TheoremViolation("composed algebra invalid: " + v.to_string());
  if (!classify(alg).is_sbp())
    throw TheoremViolation("composed algebra is not an sbp-algebra");

  // the four pair formulas must give exactly the lattice and residual
  // operations the order determines
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (alg.meet(i, j) != meet_t[static_cast<size_t>(i) * n + j])
        throw TheoremViolation("formula meet differs from the order meet");
      if (alg.join(i, j) != join_t[static_cast<size_t>(i) * n + j])
        throw TheoremViolation("formula join differs from the order join");
      if (alg.res(i, j) != res_t[static_cast<size_t>(i) * n + j])
        throw TheoremViolation("formula residual differs from the derived residuum");
    }
  return c;
}

std::pair<Elem, Elem> decompose_element(const SbpParts& p, Elem ambient) {
  const Algebra& a = p.ambient;
  for (Elem u = 0; u < p.skeleton.size; ++u) {
    for (Elem x = 0; x < p.radical.size; ++x) {
      Elem ue = p.skel_embed[u];
      Elem xe = p.rad_embed[x];
      Elem val = a.meet(a.join(ue, a.neg(xe)), a.join(a.neg(ue), xe));
      if (val == ambient) return {u, x};
    }
  }
  throw NoDecomposition("element " + std::to_string(ambient) +
                        " has no skeleton/radical decomposition");
}

GoodPairCheck check_good_morphism_pair(const AlgebraicQuadruple& q,
                                       const AlgebraicQuadruple& q2,
                                       const std::vector<Elem>& f,
                                       const std::vector<Elem>& g) {
  std::string why;
  if (!is_homomorphism(q.skeleton, q2.skeleton, f, &why))
    throw NotHomomorphism("f: " + why);
  if (!is_homomorphism(q.radical, q2.radical, g, &why))
    throw NotHomomorphism("g: " + why);
  for (Elem u = 0; u < q.skeleton.size; ++u) {
    for (Elem x = 0; x < q.radical.size; ++x) {
      if (g[q.nu(u, x)] != q2.nu(f[u], g[x])) return {false, "ext_join", {u, x}};
    }
  }
  for (Elem x = 0; x < q.radical.size; ++x) {
    if (g[q.delta(x)] != q2.delta(g[x])) return {false, "delta", {x}};
  }
  return {true, "", {}};
}

std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> find_quadruple_isomorphism(
    const AlgebraicQuadruple& q, const AlgebraicQuadruple& q2) {
  std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> found;
  for_each_isomorphism(q.skeleton, q2.skeleton, [&](const std::vector<Elem>& f) {
    for_each_isomorphism(q.radical, q2.radical, [&](const std::vector<Elem>& g) {
      if (check_good_morphism_pair(q, q2, f, g).good) {
        found = {f, g};
        return false;
      }
      return true;
    });
    return !found.has_value();
  });
  return found;
}

std::string print_quadruple(const AlgebraicQuadruple& q) {
  std::ostringstream os;
  os << "quadruple\n";
  os << print_algebra(q.skeleton);
  os << print_algebra(q.radical);
  os << "extjoin\n";
  for (Elem u = 0; u < q.skeleton.size; ++u) {
    for (Elem x = 0; x < q.radical.size; ++x) {
      if (x) os << ' ';
      os << q.nu(u, x);
    }
    os << "\n";
  }
  os << "delta\n";
  for (Elem x = 0; x < q.radical.size; ++x) {
    if (x) os << ' ';
    os << q.delta(x);
  }
  os << "\nend\n";
  return os.str();
}

AlgebraicQuadruple parse_quadruple(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok != "quadruple") throw ParseError("expected 'quadruple'");
  AlgebraicQuadruple q;
  q.skeleton = parse_algebra(in);
  q.radical = parse_algebra(in);
  if (!(in >> tok) || tok != "extjoin") throw ParseError("expected 'extjoin'");
  q.ext_join.assign(static_cast<size_t>(q.skeleton.size) * q.radical.size, 0);
  for (size_t i = 0; i < q.ext_join.size(); ++i) {
    int v;
    if (!(in >> v) || v < 0 || v >= q.radical.size) throw ParseError("bad extjoin entry");
    q.ext_join[i] = v;
  }
  if (!(in >> tok) || tok != "delta") throw ParseError("expected 'delta'");
  q.delta.map.assign(q.radical.size, 0);
  for (Elem x = 0; x < q.radical.size; ++x) {
    int v;
    if (!(in >> v) || v < 0 || v >= q.radical.size) throw ParseError("bad delta entry");
    q.delta.map[x] = v;
  }
  if (!(in >> tok) || tok != "end") throw ParseError("expected 'end'");
  return q;
}

AlgebraicQuadruple load_quadruple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quadruple(buf.str());
}

}  // namespace rldual

#include "rldual/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace rldual {

namespace {

// order/product profile used to prune candidate images
struct Profile {
  int below = 0;
  int above = 0;
  bool idempotent = false;
  int prod_orbit = 0;  // |{x*y : y}| for fixed x

  bool operator==(const Profile&) const = default;
};

Profile profile_of(const Algebra& a, Elem x) {
  Profile p;
  for (Elem y = 0; y < a.size; ++y) {
    if (a.le(x, y)) ++p.above;
    if (a.le(y, x)) ++p.below;
  }
  p.idempotent = a.prod(x, x) == x;
  Mask imgs = 0;
  for (Elem y = 0; y < a.size; ++y) imgs |= mask_bit(a.prod(x, y));
  p.prod_orbit = mask_count(imgs);
  return p;
}

}  // namespace

void for_each_isomorphism(const Algebra& a, const Algebra& b,
                          const std::function<bool(const std::vector<Elem>&)>& visit) {
  if (a.bounded() != b.bounded() || a.size != b.size) return;
  const int n = a.size;

  std::vector<Profile> pa(n), pb(n);
  for (Elem x = 0; x < n; ++x) pa[x] = profile_of(a, x);
  for (Elem x = 0; x < n; ++x) pb[x] = profile_of(b, x);

  std::vector<Elem> map(n, -1);
  std::vector<bool> used(n, false);
  bool stopped = false;

  auto consistent = [&](Elem x, Elem fx) {
    if (!(pa[x] == pb[fx])) return false;
    for (Elem y = 0; y < n; ++y) {
      if (map[y] < 0) continue;
      if (a.le(x, y) != b.le(fx, map[y])) return false;
      if (a.le(y, x) != b.le(map[y], fx)) return false;
      Elem xy = a.prod(x, y);
      if (map[xy] >= 0 && map[xy] != b.prod(fx, map[y])) return false;
    }
    return true;
  };

  std::function<void(Elem)> go = [&](Elem x) {
    if (stopped) return;
    while (x < n && map[x] >= 0) ++x;
    if (x == n) {
      for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j)
          if (map[a.prod(i, j)] != b.prod(map[i], map[j])) return;
      if (!visit(map)) stopped = true;
      return;
    }
    for (Elem fx = 0; fx < n && !stopped; ++fx) {
      if (used[fx] || !consistent(x, fx)) continue;
      map[x] = fx;
      used[fx] = true;
      go(x + 1);
      used[fx] = false;
      map[x] = -1;
    }
  };

  // constants are forced
  if (!(pa[a.one] == pb[b.one])) return;
  map[a.one] = b.one;
  used[b.one] = true;
  if (a.bounded() && *a.zero != a.one) {
    if (used[*b.zero] || !(pa[*a.zero] == pb[*b.zero])) return;
    map[*a.zero] = *b.zero;
    used[*b.zero] = true;
  }
  go(0);
}

std::optional<std::vector<Elem>> find_isomorphism(const Algebra& a, const Algebra& b) {
  std::optional<std::vector<Elem>> found;
  for_each_isomorphism(a, b, [&](const std::vector<Elem>& f) {
    found = f;
    return false;
  });
  return found;
}

namespace {

struct SpaceProfile {
  int below = 0;
  int above = 0;
  int defined_row = 0;
  int defined_col = 0;
  int tag = 0;

  bool operator==(const SpaceProfile&) const = default;
};

}  // namespace

std::optional<std::vector<int>> find_space_isomorphism(const SpaceShape& a,
                                                       const SpaceShape& b) {
  if (a.n != b.n) return std::nullopt;
  const int n = a.n;
  const bool tags = a.has_tags && b.has_tags;

  auto prof = [&](const SpaceShape& s, int x) {
    SpaceProfile p;
    for (int y = 0; y < s.n; ++y) {
      if (s.le(x, y)) ++p.above;
      if (s.le(y, x)) ++p.below;
      if (s.apply(x, y) >= 0) ++p.defined_row;
      if (s.apply(y, x) >= 0) ++p.defined_col;
    }
    p.tag = tags ? s.tag[x] : 0;
    return p;
  };
  std::vector<SpaceProfile> pa(n), pb(n);
  for (int x = 0; x < n; ++x) pa[x] = prof(a, x);
  for (int x = 0; x < n; ++x) pb[x] = prof(b, x);

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);

  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int v = a.apply(i, j), w = b.apply(map[i], map[j]);
          if ((v < 0) != (w < 0)) return false;
          if (v >= 0 && map[v] != w) return false;
        }
      return true;
    }
    for (int fx = 0; fx < n; ++fx) {
      if (used[fx] || !(pa[x] == pb[fx])) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (a.le(x, y) != b.le(fx, map[y])) ok = false;
        if (a.le(y, x) != b.le(map[y], fx)) ok = false;
        if ((a.apply(x, y) < 0) != (b.apply(fx, map[y]) < 0)) ok = false;
        if ((a.apply(y, x) < 0) != (b.apply(map[y], fx) < 0)) ok = false;
      }
      if (!ok) continue;
      map[x] = fx;
      used[fx] = true;
      if (go(x + 1)) return true;
      used[fx] = false;
      map[x] = -1;
    }
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

}  // namespace rldual

#include "rldual/fixtures.hpp"

#include <algorithm>

#include "rldual/chains.hpp"

namespace rldual {

namespace {

Algebra chain_with(const std::string& name, int n, std::vector<Elem> mul) {
  Algebra a;
  a.name = name;
  a.size = n;
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) a.leq[static_cast<size_t>(x) * n + y] = 1;
  a.mul = std::move(mul);
  a.one = n - 1;
  a.zero = 0;
  return a;
}

}  // namespace

Algebra godel_chain(int n) {
  std::vector<Elem> mul(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) mul[static_cast<size_t>(x) * n + y] = std::min(x, y);
  return chain_with("g" + std::to_string(n), n, std::move(mul));
}

Algebra nm_chain(int n) {
  std::vector<Elem> mul(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      mul[static_cast<size_t>(x) * n + y] = (x + y <= n - 1) ? 0 : std::min(x, y);
  return chain_with("nm" + std::to_string(n), n, std::move(mul));
}

Algebra lukasiewicz_chain(int n) {
  std::vector<Elem> mul(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      mul[static_cast<size_t>(x) * n + y] = std::max(0, x + y - (n - 1));
  return chain_with("luk" + std::to_string(n), n, std::move(mul));
}

const std::vector<Algebra>& builtin_fixtures() {
  static const std::vector<Algebra> fixtures = [] {
    std::vector<Algebra> out;
    out.push_back(godel_chain(3));
    out.push_back(godel_chain(4));
    out.push_back(nm_chain(4));
    out.push_back(nm_chain(6));
    Algebra g3 = godel_chain(3);
    Algebra x = product(g3, g3);
    x.name = "g3xg3";
    out.push_back(x);
    Algebra nm4 = nm_chain(4);
    Algebra y = product(nm4, g3);
    y.name = "nm4xg3";
    out.push_back(y);
    Algebra b2 = godel_chain(2);
    b2.name = "bool2";
    out.push_back(b2);
    Algebra b4 = product(b2, b2);
    b4.name = "bool4";
    out.push_back(b4);
    return out;
  }();
  return fixtures;
}

std::optional<Algebra> builtin_fixture(const std::string& name) {
  for (const Algebra& a : builtin_fixtures()) {
    if (a.name == name) return a;
  }
  return std::nullopt;
}

std::vector<Algebra> bounded_corpus(int max_chain) {
  std::vector<Algebra> out = builtin_fixtures();
  for (int n = 1; n <= max_chain; ++n) {
    for (Algebra& c : enumerate_mtl_chains(n, std::max(max_chain, kDefaultChainBound)))
      out.push_back(std::move(c));
  }
  return out;
}

std::vector<Algebra> sbp_corpus(int max_chain) {
  std::vector<Algebra> out;
  for (Algebra& a : bounded_corpus(max_chain)) {
    if (is_sbp_algebra(a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace rldual

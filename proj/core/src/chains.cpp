#include "rldual/chains.hpp"

#include <functional>

namespace rldual {

namespace {

// Free cells of a commutative monotone table with unit n-1: pairs (i,j)
// with 1 <= i <= j <= n-2.  Row 0 and the unit row are forced.
struct ChainSearch {
  int n;
  std::vector<int> t;  // n*n working table
  std::function<void(const std::vector<int>&)> emit;

  int& at(int i, int j) { return t[i * n + j]; }

  bool associative_ok() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) return false;
    return true;
  }

  void fill(int i, int j) {
    if (i > n - 2) {
      if (associative_ok()) emit(t);
      return;
    }
    int ni = (j == n - 2) ? i + 1 : i;
    int nj = (j == n - 2) ? i + 1 : j + 1;
    int lo = 0;
    if (i >= 1) lo = std::max(lo, at(i - 1, j));
    if (j >= 1 && j - 1 >= i) lo = std::max(lo, at(i, j - 1));
    if (j - 1 < i && j >= 1) lo = std::max(lo, at(j - 1, i));
    for (int v = lo; v <= i; ++v) {
      at(i, j) = v;
      at(j, i) = v;
      fill(ni, nj);
    }
  }

  void run() {
    t.assign(n * n, 0);
    for (int x = 0; x < n; ++x) {
      at(n - 1, x) = x;
      at(x, n - 1) = x;
      at(0, x) = 0;
      at(x, 0) = 0;
    }
    if (n == 1) {
      emit(t);
      return;
    }
    fill(1, 1);
  }
};

Algebra chain_algebra(int n, const std::vector<int>& table, long index) {
  Algebra a;
  a.name = "chain" + std::to_string(n) + "_" + std::to_string(index);
  a.size = n;
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) a.leq[static_cast<size_t>(x) * n + y] = 1;
  a.mul.assign(table.begin(), table.end());
  a.one = n - 1;
  a.zero = 0;
  return a;
}

}  // namespace

std::vector<Algebra> enumerate_mtl_chains(int n, int bound) {
  if (n < 1) throw BoundExceeded("chain size must be >= 1");
  if (n > bound) throw BoundExceeded("chain size " + std::to_string(n) +
                                     " exceeds bound " + std::to_string(bound));
  std::vector<Algebra> out;
  ChainSearch s;
  s.n = n;
  s.emit = [&](const std::vector<int>& t) {
    out.push_back(chain_algebra(n, t, static_cast<long>(out.size())));
  };
  s.run();
  return out;
}

long count_mtl_chains(int n, int bound) {
  if (n < 1) throw BoundExceeded("chain size must be >= 1");
  if (n > bound) throw BoundExceeded("chain size " + std::to_string(n) +
                                     " exceeds bound " + std::to_string(bound));
  long count = 0;
  ChainSearch s;
  s.n = n;
  s.emit = [&](const std::vector<int>&) { ++count; };
  s.run();
  return count;
}

}  // namespace rldual

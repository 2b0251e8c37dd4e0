#ifndef RLDUAL_ISOMORPHISM_HPP
#define RLDUAL_ISOMORPHISM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "rldual/algebra.hpp"

namespace rldual {

/// Brute-force search for a bijection a -> b preserving leq, mul, one and
/// zero, pruned by local invariants.  Returns the first hit in a
/// deterministic order, or nullopt.
std::optional<std::vector<Elem>> find_isomorphism(const Algebra& a, const Algebra& b);

/// Calls `visit` for every isomorphism a -> b; stop early by returning
/// false from the callback.
void for_each_isomorphism(const Algebra& a, const Algebra& b,
                          const std::function<bool(const std::vector<Elem>&)>& visit);

/// Relational structure for space-isomorphism search: a finite poset with
/// a partial binary operation and an optional point tag.  Definedness is
/// part of the signature.
struct SpaceShape {
  int n = 0;
  std::vector<std::uint8_t> leq;  // n*n
  std::vector<int> op;            // n*n, -1 = undefined
  std::vector<int> tag;           // n, compared only when both sides carry tags
  bool has_tags = false;

  bool le(int x, int y) const { return leq[static_cast<size_t>(x) * n + y] != 0; }
  int apply(int x, int y) const { return op[static_cast<size_t>(x) * n + y]; }
};

/// Bijection preserving order both ways and transporting the partial
/// operation exactly (including undefinedness); tags are matched when
/// both shapes carry them.
std::optional<std::vector<int>> find_space_isomorphism(const SpaceShape& a,
                                                       const SpaceShape& b);

}  // namespace rldual

#endif

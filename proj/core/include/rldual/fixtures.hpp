#ifndef RLDUAL_FIXTURES_HPP
#define RLDUAL_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "rldual/algebra.hpp"

namespace rldual {

/// Chain with the minimum t-norm.
Algebra godel_chain(int n);
/// Chain with the nilpotent-minimum t-norm (x*y = 0 when x+y <= n-1).
Algebra nm_chain(int n);
/// Chain with the Lukasiewicz t-norm (not an sbp-algebra for n >= 3).
Algebra lukasiewicz_chain(int n);

/// The named fixtures shipped in the binary: g3, g4, nm4, nm6, g3xg3,
/// nm4xg3, bool2, bool4.
const std::vector<Algebra>& builtin_fixtures();
std::optional<Algebra> builtin_fixture(const std::string& name);

/// Built-in fixtures plus every enumerated chain of size <= max_chain.
std::vector<Algebra> bounded_corpus(int max_chain);
/// The sbp members of the corpus (fixtures plus sbp chains, size >= 2).
std::vector<Algebra> sbp_corpus(int max_chain);

}  // namespace rldual

#endif

#include "doctest.h"

#include "rldual/algebra.hpp"
#include "rldual/chains.hpp"
#include "rldual/fixtures.hpp"

using namespace rldual;

TEST_CASE("small chain counts are forced") {
  CHECK(count_mtl_chains(1) == 1);
  CHECK(count_mtl_chains(2) == 1);
  CHECK(enumerate_mtl_chains(2).size() == 1);
}

TEST_CASE("every enumerated chain is a semilinear bounded CIDRL") {
  for (int n = 1; n <= 5; ++n) {
    for (const Algebra& c : enumerate_mtl_chains(n)) {
      CAPTURE(c.name);
      CHECK(validate(c).passed());
      ClassificationReport r = classify(c);
      CHECK(r.is_mtl());
      CHECK(r.distributive.holds);
    }
  }
}

TEST_CASE("counts grow with the chain size") {
  long prev = 0;
  for (int n = 1; n <= 6; ++n) {
    long count = count_mtl_chains(n);
    CHECK(count >= prev);
    prev = count;
  }
}

TEST_CASE("enumeration is duplicate-free") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Algebra> chains = enumerate_mtl_chains(n);
    for (size_t i = 0; i < chains.size(); ++i)
      for (size_t j = i + 1; j < chains.size(); ++j) CHECK(chains[i].mul != chains[j].mul);
  }
}

TEST_CASE("the bound is enforced") {
  CHECK_THROWS_AS(enumerate_mtl_chains(7), BoundExceeded);
  CHECK_THROWS_AS(enumerate_mtl_chains(0), BoundExceeded);
  CHECK_NOTHROW(enumerate_mtl_chains(7, 7));
}

TEST_CASE("known families appear in the enumeration") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Algebra> chains = enumerate_mtl_chains(n);
    auto contains = [&](const Algebra& target) {
      for (const Algebra& c : chains) {
        if (c.mul == target.mul) return true;
      }
      return false;
    };
    CHECK(contains(godel_chain(n)));
    CHECK(contains(lukasiewicz_chain(n)));
    CHECK(contains(nm_chain(n)));
  }
}

#ifndef RLDUAL_VERIFY_HPP
#define RLDUAL_VERIFY_HPP

#include <string>
#include <vector>

#include "rldual/algebra.hpp"

namespace rldual {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> lines;

  bool passed() const {
    for (const auto& l : lines) {
      if (!l.passed) return false;
    }
    return true;
  }
};

/// Suites: core, chains, filters, duality, quadruples, bowtie, dualquad.
std::vector<std::string> suite_names();

/// Runs one named suite over the built-in corpus (chains up to max_chain)
/// plus any extra algebras.
SuiteResult run_suite(const std::string& name, const std::vector<Algebra>& extra,
                      int max_chain);

std::vector<SuiteResult> run_all_suites(const std::vector<Algebra>& extra, int max_chain);

}  // namespace rldual

#endif

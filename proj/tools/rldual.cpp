// Command-line front end: load and validate algebras, run the analyses,
// emit DOT/JSON artifacts, and drive the verification suites.
//
// Exit codes: 0 = success / all checks pass, 1 = a falsified property
// (witness printed), 2 = input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rldual/algebra_io.hpp"
#include "rldual/chains.hpp"
#include "rldual/dual_quadruple.hpp"
#include "rldual/filter_pairs.hpp"
#include "rldual/fixtures.hpp"
#include "rldual/space.hpp"
#include "rldual/verify.hpp"

namespace {

using namespace rldual;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitInput = 2;

Algebra resolve_algebra(const std::string& input) {
  if (std::filesystem::exists(input)) return load_algebra(input);
  if (auto fixture = builtin_fixture(input)) return *fixture;
  throw ParseError("no such file or built-in fixture: '" + input + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot write '" + out_path + "'");
  out << text;
}

nlohmann::json algebra_json(const Algebra& a) {
  nlohmann::json j;
  j["name"] = a.name;
  j["mode"] = a.bounded() ? "bounded" : "gmtl";
  j["size"] = a.size;
  auto& leq = j["leq"] = nlohmann::json::array();
  auto& mul = j["mul"] = nlohmann::json::array();
  for (Elem x = 0; x < a.size; ++x) {
    nlohmann::json lrow = nlohmann::json::array();
    nlohmann::json mrow = nlohmann::json::array();
    for (Elem y = 0; y < a.size; ++y) {
      lrow.push_back(a.le(x, y) ? 1 : 0);
      mrow.push_back(a.prod(x, y));
    }
    leq.push_back(lrow);
    mul.push_back(mrow);
  }
  j["one"] = a.one;
  if (a.bounded()) j["zero"] = *a.zero;
  return j;
}

std::string flag_str(const Flag& f) { return f.holds ? "yes" : "no"; }

int cmd_validate(const std::vector<std::string>& inputs, const std::string& format,
                 const std::string& out) {
  std::ostringstream os;
  bool all_ok = true;
  nlohmann::json jall = nlohmann::json::array();
  for (const std::string& in : inputs) {
    Algebra a = resolve_algebra(in);
    Report r = validate(a);
    all_ok = all_ok && r.passed();
    if (format == "json") {
      nlohmann::json j;
      j["algebra"] = a.name;
      j["passed"] = r.passed();
      auto& v = j["violations"] = nlohmann::json::array();
      for (const auto& viol : r.violations) {
        nlohmann::json jv;
        jv["clause"] = viol.clause;
        jv["witness"] = viol.witness;
        v.push_back(jv);
      }
      jall.push_back(j);
    } else {
      os << a.name << ": " << (r.passed() ? "ok" : "FAIL\n" + r.to_string()) << "\n";
    }
  }
  if (format == "json") os << jall.dump(2) << "\n";
  emit(os.str(), out);
  return all_ok ? kExitOk : kExitFalsified;
}

int cmd_classify(const std::vector<std::string>& inputs, const std::string& format,
                 const std::string& out) {
  std::ostringstream os;
  nlohmann::json jall = nlohmann::json::array();
  for (const std::string& in : inputs) {
    Algebra a = resolve_algebra(in);
    Report r = validate(a);
    if (!r.passed()) {
      std::cerr << a.name << " fails validation:\n" << r.to_string();
      return kExitFalsified;
    }
    ClassificationReport c = classify(a);
    if (format == "json") {
      nlohmann::json j;
      j["algebra"] = a.name;
      j["commutative"] = c.commutative.holds;
      j["integral"] = c.integral.holds;
      j["distributive"] = c.distributive.holds;
      j["semilinear"] = c.semilinear.holds;
      j["bounded"] = c.bounded;
      j["mtl"] = c.mtl.holds;
      if (c.bounded) {
        j["smtl"] = c.smtl->holds;
        j["sbp"] = c.sbp->holds;
        j["ibp"] = c.ibp->holds;
        j["zero_divisors"] = c.has_zero_divisors->holds;
        j["directly_indecomposable"] = c.directly_indecomposable->holds;
      }
      jall.push_back(j);
    } else {
      os << a.name << ":\n";
      os << "  commutative  " << flag_str(c.commutative) << "\n";
      os << "  integral     " << flag_str(c.integral) << "\n";
      os << "  distributive " << flag_str(c.distributive) << "\n";
      os << "  semilinear   " << flag_str(c.semilinear) << "\n";
      os << "  bounded      " << (c.bounded ? "yes" : "no") << "\n";
      os << "  mtl          " << flag_str(c.mtl) << "\n";
      if (c.bounded) {
        os << "  smtl         " << flag_str(*c.smtl) << "\n";
        os << "  sbp          " << flag_str(*c.sbp) << "\n";
        os << "  ibp          " << flag_str(*c.ibp) << "\n";
        os << "  zero divisors " << flag_str(*c.has_zero_divisors) << "\n";
        os << "  directly indecomposable " << flag_str(*c.directly_indecomposable) << "\n";
      }
    }
  }
  if (format == "json") os << jall.dump(2) << "\n";
  emit(os.str(), out);
  return kExitOk;
}

int cmd_spectrum(const std::string& input, const std::string& format, const std::string& out) {
  Algebra a = resolve_algebra(input);
  require_valid(a);
  Spectrum s(a);
  if (format == "dot") {
    emit(space_to_dot(spectrum_space(s)), out);
  } else if (format == "json") {
    emit(spectrum_to_json(s) + "\n", out);
  } else {
    std::ostringstream os;
    os << a.name << ": " << s.count() << " prime filters\n";
    ResiduatedSpace x = spectrum_space(s);
    for (int i = 0; i < s.count(); ++i) os << "  [" << i << "] " << x.labels[i] << "\n";
    emit(os.str(), out);
  }
  return kExitOk;
}

int cmd_bowtie(const std::string& input, const std::string& format, const std::string& out) {
  Algebra a = resolve_algebra(input);
  FilterPairContext ctx(a);
  BowtieSpace bt = build_bowtie(ctx);
  if (format == "dot") {
    emit(bowtie_to_dot(ctx, bt), out);
  } else if (format == "json") {
    emit(bowtie_to_json(ctx, bt) + "\n", out);
  } else {
    std::ostringstream os;
    os << a.name << ": " << bt.count() << " points ("
       << std::count_if(bt.points.begin(), bt.points.end(),
                        [](const BowtiePoint& p) { return !p.upper; })
       << " lower)\n";
    emit(os.str(), out);
  }
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& inputs, const std::string& suite, bool all,
               int max_size, const std::string& out) {
  std::vector<Algebra> extra;
  for (const std::string& in : inputs) extra.push_back(resolve_algebra(in));

  std::vector<SuiteResult> results;
  if (all) {
    results = run_all_suites(extra, max_size);
  } else if (!suite.empty()) {
    results.push_back(run_suite(suite, extra, max_size));
  } else {
    throw ParseError("verify needs --suite NAME or --all");
  }

  std::ostringstream os;
  bool ok = true;
  for (const SuiteResult& r : results) {
    for (const CheckLine& l : r.lines) {
      os << (l.passed ? "ok   " : "FAIL ") << l.name;
      if (!l.detail.empty()) os << "  (" << l.detail << ")";
      os << "\n";
    }
    os << "suite " << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " ("
       << r.lines.size() << " checks)\n";
    ok = ok && r.passed();
  }
  emit(os.str(), out);
  return ok ? kExitOk : kExitFalsified;
}

int cmd_enumerate(int n, const std::string& format, const std::string& out, int bound) {
  std::vector<Algebra> chains = enumerate_mtl_chains(n, bound);
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["count"] = chains.size();
    auto& arr = j["algebras"] = nlohmann::json::array();
    for (const Algebra& c : chains) arr.push_back(algebra_json(c));
    os << j.dump(2) << "\n";
  } else {
    os << chains.size() << (chains.size() == 1 ? " chain" : " chains") << "\n";
  }
  emit(os.str(), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite residuated-lattice duality toolbox"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string format = "text";
  std::string suite;
  std::string out;
  bool all = false;
  int max_size = 5;
  int enum_n = 1;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--input", inputs, "input file or built-in fixture name");
    if (with_format)
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--out", out, "write output to a file");
    cmd->add_option("--max-size", max_size, "size bound for enumerated chains");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check every axiom on an algebra");
  add_common(validate_cmd);
  CLI::App* classify_cmd = app.add_subcommand("classify", "class membership flags");
  add_common(classify_cmd);
  CLI::App* skeleton_cmd = app.add_subcommand("skeleton", "Boolean skeleton subalgebra");
  add_common(skeleton_cmd);
  CLI::App* radical_cmd = app.add_subcommand("radical", "radical and coradical");
  add_common(radical_cmd);
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "prime filter space");
  add_common(spectrum_cmd);
  CLI::App* bowtie_cmd = app.add_subcommand("bowtie", "filter-pair space with its order");
  add_common(bowtie_cmd);
  CLI::App* quad_extract_cmd =
      app.add_subcommand("quad-extract", "skeleton/radical quadruple of an sbp-algebra");
  add_common(quad_extract_cmd);
  CLI::App* quad_compose_cmd =
      app.add_subcommand("quad-compose", "compose a quadruple file into an algebra");
  add_common(quad_compose_cmd);
  CLI::App* dualquad_extract_cmd =
      app.add_subcommand("dualquad-extract", "dual quadruple of an sbp-algebra (json)");
  add_common(dualquad_extract_cmd);
  CLI::App* rotate_cmd = app.add_subcommand("rotate", "rotate a dual-quadruple json file");
  add_common(rotate_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--suite", suite, "suite name");
  verify_cmd->add_flag("--all", all, "run every suite");
  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "count the monoid tables on a chain");
  enumerate_cmd->add_option("n", enum_n, "chain size")->required();
  add_common(enumerate_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed() || classify_cmd->parsed()) {
      if (inputs.empty()) throw ParseError("at least one --input is required");
    }
    if (validate_cmd->parsed()) return cmd_validate(inputs, format, out);
    if (classify_cmd->parsed()) return cmd_classify(inputs, format, out);
    if (skeleton_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("skeleton needs exactly one --input");
      Algebra a = resolve_algebra(inputs[0]);
      require_valid(a);
      Algebra s = boolean_skeleton(a).first;
      emit(format == "json" ? algebra_json(s).dump(2) + "\n" : print_algebra(s), out);
      return kExitOk;
    }
    if (radical_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("radical needs exactly one --input");
      Algebra a = resolve_algebra(inputs[0]);
      Mask rad = radical(a);
      Mask cor = coradical(a);
      Algebra r = radical_algebra(a).first;
      if (format == "json") {
        nlohmann::json j;
        j["algebra"] = a.name;
        auto& jr = j["radical"] = nlohmann::json::array();
        auto& jc = j["coradical"] = nlohmann::json::array();
        for (Elem x = 0; x < a.size; ++x) {
          if (mask_has(rad, x)) jr.push_back(x);
          if (mask_has(cor, x)) jc.push_back(x);
        }
        j["radical_algebra"] = algebra_json(r);
        emit(j.dump(2) + "\n", out);
      } else {
        std::ostringstream os;
        os << a.name << " radical:";
        for (Elem x = 0; x < a.size; ++x) {
          if (mask_has(rad, x)) os << " " << x;
        }
        os << "\ncoradical:";
        for (Elem x = 0; x < a.size; ++x) {
          if (mask_has(cor, x)) os << " " << x;
        }
        os << "\n" << print_algebra(r);
        emit(os.str(), out);
      }
      return kExitOk;
    }
    if (spectrum_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("spectrum needs exactly one --input");
      return cmd_spectrum(inputs[0], format, out);
    }
    if (bowtie_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("bowtie needs exactly one --input");
      return cmd_bowtie(inputs[0], format, out);
    }
    if (quad_extract_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("quad-extract needs exactly one --input");
      Algebra a = resolve_algebra(inputs[0]);
      emit(print_quadruple(extract_quadruple(a)), out);
      return kExitOk;
    }
    if (quad_compose_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("quad-compose needs exactly one --input");
      AlgebraicQuadruple q = load_quadruple(inputs[0]);
      QuadrupleComposition c = compose(q);
      c.algebra.name = "composed";
      emit(print_algebra(c.algebra), out);
      return kExitOk;
    }
    if (dualquad_extract_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("dualquad-extract needs exactly one --input");
      Algebra a = resolve_algebra(inputs[0]);
      emit(dual_quadruple_to_json(extract_dual_quadruple(a)) + "\n", out);
      return kExitOk;
    }
    if (rotate_cmd->parsed()) {
      if (inputs.size() != 1) throw ParseError("rotate needs exactly one --input");
      DualQuadruple dq = load_dual_quadruple(inputs[0]);
      RotationSpace rot = rotate(dq);
      if (format == "dot") {
        emit(rotation_to_dot(rot), out);
      } else if (format == "json") {
        emit(space_to_json(rot.as_space()) + "\n", out);
      } else {
        std::ostringstream os;
        os << rot.count() << " points ("
           << std::count_if(rot.points.begin(), rot.points.end(),
                            [](const RotationPoint& p) { return !p.upper; })
           << " lower)\n";
        emit(os.str(), out);
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) return cmd_verify(inputs, suite, all, max_size, out);
    if (enumerate_cmd->parsed())
      return cmd_enumerate(enum_n, format, out, std::max(max_size, kDefaultChainBound));
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BoundExceeded& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotSbp& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotBounded& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ModeMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kExitFalsified;
  }
  return kExitOk;
}

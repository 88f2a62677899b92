#include "tropgw/fock.hpp"
#include "tropgw/gwh.hpp"
#include "tropgw/local_gw.hpp"
#include "tropgw/perm_hurwitz.hpp"
#include "tropgw/serialize.hpp"
#include "tropgw/trop_covers.hpp"
#include "tropgw/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using namespace tropgw;

namespace {

constexpr int kUsageError = 1;
constexpr int kVerificationFailure = 2;

// Invalid requests, reported with the relation they violate.
struct RequestError : std::runtime_error {
  RequestError(const std::string& what, std::string relation_)
      : std::runtime_error(what), relation(std::move(relation_)) {}
  std::string relation;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw RequestError("bad integer '" + item + "' in '" + text + "'", "syntax");
    }
  }
  return out;
}

// Runs every method, reports each value and fails when they disagree.
int emit_all(const std::vector<std::string>& methods, const std::function<Rational(const std::string&)>& by_method,
             Json out) {
  Json checks = Json::array();
  std::optional<Rational> first;
  bool agree = true;
  for (const auto& m : methods) {
    const auto v = by_method(m);
    checks.push_back({{"method", m}, {"value", to_json(v)}});
    if (first && *first != v) agree = false;
    if (!first) first = v;
  }
  out["value"] = to_json(*first);
  out["method"] = "all";
  out["checks"] = checks;
  out["agree"] = agree;
  emit(out);
  return agree ? 0 : kVerificationFailure;
}

// ---------------------------------------------------------------- hurwitz

struct HurwitzArgs {
  int d = 1;
  std::string profiles;
  int target_genus = 0;
  std::optional<int> genus;
  bool connected = false;
  std::string method = "all";
};

int run_hurwitz(const HurwitzArgs& a) {
  if (a.d < 1) throw RequestError("degree must be positive", "d >= 1");
  const auto profiles = parse_profile_list(a.profiles);
  for (const auto& mu : profiles) {
    if (mu.size() != a.d) {
      throw RequestError("profile (" + to_string(mu) + ") has size " + std::to_string(mu.size()) + ", not d=" +
                             std::to_string(a.d),
                         "|mu_i| = d");
    }
  }
  const std::string rh = "Riemann-Hurwitz: 2 - 2g = d(2 - 2h) - sum (mu_ij - 1)";
  const auto g = riemann_hurwitz_genus(a.d, a.target_genus, profiles);
  if (!g) throw RequestError("no integral source genus", rh);
  if (a.genus && *a.genus != *g) {
    throw RequestError(
        "requested genus " + std::to_string(*a.genus) + " but Riemann-Hurwitz forces " + std::to_string(*g), rh);
  }
  if (a.method == "tropical" && a.target_genus > 1) {
    throw RequestError("tropical counting needs target genus 0 or 1", "h <= 1");
  }
  const HurwitzProblem p{a.d, a.target_genus, profiles, a.connected, std::nullopt};
  auto by_method = [&](const std::string& m) -> Rational {
    if (m == "bruteforce") return hurwitz_bruteforce(p);
    if (m == "class-algebra") {
      return a.connected ? connected_from_disconnected(a.d, a.target_genus, profiles) : hurwitz_class_algebra(p);
    }
    const auto shape = a.target_genus == 0 ? HurwitzTarget::Shape::Caterpillar : HurwitzTarget::Shape::Cycle;
    return tropical_hurwitz(HurwitzTarget{shape, profiles, a.connected, std::nullopt}, a.d);
  };
  Json out;
  out["genus"] = *g;
  if (a.method == "all") {
    std::vector<std::string> methods{"class-algebra"};
    if (a.d <= kMaxBruteForceDegree) methods.insert(methods.begin(), "bruteforce");
    if (a.target_genus <= 1) methods.push_back("tropical");
    return emit_all(methods, by_method, out);
  }
  out["value"] = to_json(by_method(a.method));
  out["method"] = a.method;
  emit(out);
  return 0;
}

// ------------------------------------------------------------- descendant

struct DescendantArgs {
  std::string mu, nu, k;
  bool connected = false;
  std::optional<int> genus;
  std::string method = "tropical";
  bool dot = false;
  bool surgery = false;
};

struct ValidDescendant {
  Partition mu, nu;
  std::vector<int> ks;
  int genus = 0;
};

ValidDescendant validate(const DescendantArgs& a) {
  ValidDescendant v{parse_partition(a.mu), parse_partition(a.nu), parse_ints(a.k), 0};
  if (v.mu.size() != v.nu.size() || v.mu.size() == 0) {
    throw RequestError("|mu| = " + std::to_string(v.mu.size()) + " but |nu| = " + std::to_string(v.nu.size()),
                       "degree: |mu| = |nu| > 0");
  }
  for (int k : v.ks)
    if (k < 0) throw RequestError("negative descendant power", "k_i >= 0");
  const auto g = descendant_genus(v.mu, v.nu, v.ks);
  const std::string dim = "dimension: sum k_i = 2g - 2 + l(mu) + l(nu)";
  if (!g) throw RequestError("the insertions give no integral genus", dim);
  if (a.genus && *a.genus != *g) {
    throw RequestError("requested genus " + std::to_string(*a.genus) + " but the insertions force " +
                           std::to_string(*g),
                       dim);
  }
  v.genus = *g;
  return v;
}

DescendantProblem problem_of(const ValidDescendant& v, bool connected) {
  return DescendantProblem{v.mu, v.nu, v.ks, connected, std::nullopt};
}

int run_descendant(const DescendantArgs& a) {
  const auto v = validate(a);
  if (a.connected && a.method != "tropical") {
    throw RequestError("only the tropical method counts connected invariants", "method = tropical");
  }
  auto by_method = [&](const std::string& m) -> Rational {
    if (m == "tropical") return descendant_invariant(problem_of(v, a.connected));
    if (m == "fock") return matrix_element(v.mu, v.nu, v.ks);
    return substitute_and_evaluate(v.mu, v.nu, v.ks);
  };
  Json out;
  out["genus"] = v.genus;
  out["connected"] = a.connected;
  if (a.method == "all") return emit_all({"tropical", "fock", "substitution"}, by_method, out);
  out["value"] = to_json(by_method(a.method));
  out["method"] = a.method;
  if (a.method == "tropical") out["covers"] = to_json(enumerate_descendant_covers(problem_of(v, a.connected)));
  emit(out);
  return 0;
}

int run_covers(const DescendantArgs& a) {
  const auto v = validate(a);
  const auto covers = enumerate_descendant_covers(problem_of(v, a.connected));
  if (a.dot) {
    for (std::size_t i = 0; i < covers.size(); ++i) std::cout << to_dot(covers[i].cover, "cover" + std::to_string(i));
    return 0;
  }
  Json out;
  Rational total = 0;
  Json list = Json::array();
  for (const auto& c : covers) {
    total += c.multiplicity.total;
    Json j = to_json(c);
    if (a.surgery) {
      const auto s = tgwh_surgery(c.cover, v.ks);
      j["surgery_total"] = to_json(s.total);
      j["surgery"] = Json::array();
      for (const auto& e : s.entries) j["surgery"].push_back(to_json(e));
    }
    list.push_back(std::move(j));
  }
  out["value"] = to_json(total);
  out["method"] = "tropical";
  out["genus"] = v.genus;
  out["covers"] = list;
  emit(out);
  return 0;
}

// ------------------------------------------------------------------- fock

std::vector<HeisenbergMonomial> parse_product(const std::string& text) {
  std::vector<HeisenbergMonomial> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '|')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    HeisenbergMonomial m;
    if (first != std::string::npos) m.factors = parse_ints(item.substr(first, last - first + 1));
    out.push_back(std::move(m));
  }
  return out;
}

int run_fock(const std::string& expression, const std::string& wick, bool dot) {
  if (!wick.empty()) {
    const auto product = parse_product(wick);
    const auto r = wick_expectation(product);
    if (dot) {
      for (std::size_t i = 0; i < r.diagrams.size(); ++i) {
        std::cout << to_dot(r.diagrams[i], product, "feynman" + std::to_string(i));
      }
      return 0;
    }
    Json out;
    out["value"] = to_json(r.value);
    out["internal_value"] = to_json(r.internal_value);
    out["method"] = "wick";
    out["diagrams"] = Json::array();
    for (const auto& d : r.diagrams) out["diagrams"].push_back(to_json(d));
    emit(out);
    return 0;
  }
  if (expression.empty()) throw RequestError("an expression or --wick is required", "syntax");
  const auto terms = evaluate_expression(expression);
  Json out;
  Json by_power = Json::object();
  for (const auto& [power, c] : terms) by_power[std::to_string(power)] = to_json(c);
  if (terms.empty()) {
    out["value"] = "0";
  } else if (terms.size() == 1) {
    out["value"] = to_json(terms.begin()->second);
  }
  out["u_powers"] = by_power;
  out["method"] = "direct";
  emit(out);
  return 0;
}

// ----------------------------------------------------------------- coeffs

int run_coeffs(int k, const std::string& method) {
  if (k < 0) throw RequestError("descendant power must be non-negative", "k >= 0");
  Json out;
  const auto formula = completion_coefficients(k).expansion;
  if (method == "formula") {
    out["completed_cycle"] = to_json(formula);
    emit(out);
    return 0;
  }
  const auto system = solve_completion_by_correspondence(k, k + 2);
  WElement solved;
  for (const auto& [lambda, c] : system.terms())
    if (lambda.size() >= 1) solved.add_term(lambda, c);
  out["completed_cycle"] = to_json(method == "linear-system" ? solved : formula);
  if (method == "all") {
    out["checks"] = Json::array({{{"method", "formula"}, {"value", to_json(formula)}},
                                 {{"method", "linear-system"}, {"value", to_json(solved)}}});
    out["agree"] = formula == solved;
    emit(out);
    return formula == solved ? 0 : kVerificationFailure;
  }
  emit(out);
  return 0;
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& budget, bool json) {
  const auto b = budget == "full" ? Budget::Full : Budget::Quick;
  Json checks = Json::array();
  bool all = true;
  const auto results = run_acceptance(b, [&](const CheckResult& r) {
    if (!json) {
      std::printf("%-4s  %-55s %8.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
      std::fflush(stdout);
    }
  });
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (json) {
    Json out;
    out["method"] = "verify-" + budget;
    out["checks"] = checks;
    out["value"] = all ? "pass" : "fail";
    emit(out);
  }
  return all ? 0 : kVerificationFailure;
}

void error_json(const std::string& message, const std::string& relation) {
  Json err;
  err["error"] = message;
  if (!relation.empty()) err["relation"] = relation;
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hurwitz numbers, descendant invariants of P^1 and Fock-space matrix elements"};
  app.require_subcommand(1);

  HurwitzArgs h;
  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz numbers with prescribed ramification");
  hurwitz->add_option("--d", h.d, "degree")->required();
  hurwitz->add_option("--profiles", h.profiles, "profiles such as \"2;1,1\"")->required();
  hurwitz->add_option("--target-genus", h.target_genus, "genus of the target (0 or 1 for tropical)");
  hurwitz->add_option("--genus", h.genus, "expected source genus (checked against Riemann-Hurwitz)");
  hurwitz->add_flag("--connected", h.connected, "count connected covers only");
  hurwitz->add_option("--method", h.method)->check(CLI::IsMember({"bruteforce", "class-algebra", "tropical", "all"}));

  DescendantArgs da;
  auto add_descendant_options = [](CLI::App* sub, DescendantArgs& a) {
    sub->add_option("--mu", a.mu, "left profile, e.g. 1,1")->required();
    sub->add_option("--nu", a.nu, "right profile")->required();
    sub->add_option("--k", a.k, "descendant powers, e.g. 3,3 (empty for none)");
    sub->add_option("--genus", a.genus, "expected genus");
    auto* c = sub->add_flag("--connected", a.connected, "connected invariant");
    sub->add_flag("--disconnected", [&a](std::int64_t) { a.connected = false; }, "disconnected invariant (default)")
        ->excludes(c);
  };
  auto* descendant = app.add_subcommand("descendant", "stationary descendant invariant <mu| tau_k ... |nu>");
  add_descendant_options(descendant, da);
  descendant->add_option("--method", da.method)->check(CLI::IsMember({"tropical", "fock", "substitution", "all"}));

  DescendantArgs ca;
  auto* covers = app.add_subcommand("covers", "list tropical covers with multiplicities");
  add_descendant_options(covers, ca);
  covers->add_flag("--dot", ca.dot, "emit Graphviz instead of JSON");
  covers->add_flag("--surgery", ca.surgery, "attach the Hurwitz covers produced by the GW/H surgery");

  std::string expression, wick;
  bool fock_dot = false;
  auto* fock = app.add_subcommand("fock", "evaluate a Fock-space expression, e.g. \"bra 2 M(2) ket 2\"");
  fock->add_option("expression", expression);
  fock->add_option("--wick", wick, "Wick expansion of a product such as \"1,1 | -1,-1\"");
  fock->add_flag("--dot", fock_dot, "emit the Feynman diagrams as Graphviz");

  int coeff_k = 0;
  std::string coeff_method = "formula";
  auto* coeffs = app.add_subcommand("coeffs", "completed cycle of tau_k");
  coeffs->add_option("--k", coeff_k)->required();
  coeffs->add_option("--method", coeff_method)->check(CLI::IsMember({"formula", "linear-system", "all"}));

  std::string budget = "quick";
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--budget", budget)->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--json", verify_json, "JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*hurwitz) return run_hurwitz(h);
    if (*descendant) return run_descendant(da);
    if (*covers) return run_covers(ca);
    if (*fock) return run_fock(expression, wick, fock_dot);
    if (*coeffs) return run_coeffs(coeff_k, coeff_method);
    if (*verify) return run_verify(budget, verify_json);
  } catch (const RequestError& e) {
    error_json(e.what(), e.relation);
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    error_json(e.what(), "");
    return kUsageError;
  } catch (const std::exception& e) {
    error_json(e.what(), "");
    return kVerificationFailure;
  }
  return kUsageError;
}

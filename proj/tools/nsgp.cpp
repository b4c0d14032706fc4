// Command-line front door: `info` prints the invariants of a monoid, `element`
// inspects one element, `sweep` runs the formula-vs-oracle harness.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsgp/gas.hpp"
#include "nsgp/harness.hpp"
#include "nsgp/invariants.hpp"

using nsgp::GasParams;
using nsgp::Int;
using nsgp::NumericalMonoid;
using OrderedJson = nlohmann::ordered_json;

namespace {

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      Int v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw nsgp::ConfigInvalid(std::string("cannot parse ") + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw nsgp::ConfigInvalid(std::string("empty ") + what + " list");
  return out;
}

struct MonoidChoice {
  std::optional<GasParams> gas;
  std::optional<NumericalMonoid> monoid;

  const NumericalMonoid& S() const { return *monoid; }
};

MonoidChoice resolve(const std::string& gens_arg, const std::string& gas_arg) {
  if (gens_arg.empty() == gas_arg.empty()) {
    throw nsgp::ConfigInvalid("exactly one of --gens or --gas is required");
  }
  MonoidChoice choice;
  if (!gas_arg.empty()) {
    auto q = parse_int_list(gas_arg, "--gas");
    if (q.size() != 4) throw nsgp::ConfigInvalid("--gas takes a,h,d,x");
    choice.gas = GasParams(q[0], q[1], q[2], q[3]);
    choice.monoid = choice.gas->to_monoid();
  } else {
    choice.monoid = NumericalMonoid(parse_int_list(gens_arg, "--gens"));
  }
  return choice;
}

std::string rational_str(const nsgp::Rational& r) { return r.str(); }

OrderedJson factorization_json(const nsgp::Factorization& z) {
  OrderedJson arr = OrderedJson::array();
  for (Int v : z.e) arr.push_back(v);
  return arr;
}

std::string factorization_str(const nsgp::Factorization& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(z.e[i]);
  }
  return s + ")";
}

void emit(const OrderedJson& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "field,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::cout << it.key() << "," << (it.value().is_string()
                                           ? it.value().get<std::string>()
                                           : it.value().dump())
                << "\n";
    }
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::cout << it.key() << ": "
                << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
    }
  }
}

int cmd_info(const MonoidChoice& choice, const std::string& format, bool frobenius_of_n) {
  const NumericalMonoid& S = choice.S();
  OrderedJson j;
  j["generators"] = S.generators();
  j["embedding_dim"] = S.embedding_dimension();
  if (S.is_all_of_n()) {
    if (!frobenius_of_n) {
      throw nsgp::IsAllOfN("S = N: invariants undefined (pass --frobenius-of-N=-1 to force)");
    }
    j["frobenius"] = -1;
    j["apery"] = S.apery(1);
    j["note"] = "S = N: factorization invariants undefined";
    emit(j, format);
    return 0;
  }
  j["frobenius"] = S.frobenius();
  j["apery"] = S.apery(S.multiplicity());
  j["catenary"] = nsgp::catenary_degree(S);
  j["tame"] = nsgp::tame_degree(S);
  j["omega"] = nsgp::omega(S);
  if (S.embedding_dimension() >= 2) j["min_multiple"] = nsgp::min_multiple_in_rest(S);
  if (choice.gas) {
    const GasParams& P = *choice.gas;
    OrderedJson g;
    g["a"] = P.a;
    g["h"] = P.h;
    g["d"] = P.d;
    g["x"] = P.x;
    g["frobenius"] = gas_frobenius(P);
    g["catenary"] = gas_catenary(P);
    g["tame"] = gas_tame(P);
    g["min_multiple"] = gas_min_multiple(P);
    g["apery"] = gas_apery(P);
    auto b = gas_bounds(P);
    g["B"] = rational_str(b.upper);
    g["B_minus_t"] = rational_str(b.upper_minus_tame);
    g["t_minus_c"] = b.tame_minus_catenary;
    auto w = gas_tame_witness(P);
    g["tame_witness_element"] = w.element;
    g["tame_witness_distance"] = w.oracle_distance;
    if (P.h == 1) {
      auto h1 = gas_h1_check(P);
      g["h1_catenary"] = h1.catenary;
      g["h1_tame"] = h1.tame;
    }
    j["gas"] = g;
  }
  emit(j, format);
  return 0;
}

int cmd_element(const MonoidChoice& choice, Int n, const std::string& what,
                const std::string& format, std::size_t max_factorizations) {
  const NumericalMonoid& S = choice.S();
  OrderedJson j;
  j["n"] = n;
  if (what == "factorizations") {
    auto capped = nsgp::factorizations_capped(S, n, max_factorizations);
    j["count"] = capped.items.size();
    j["truncated"] = capped.truncated;
    OrderedJson arr = OrderedJson::array();
    for (const auto& z : capped.items) arr.push_back(factorization_json(z));
    j["factorizations"] = arr;
    if (format == "text") {
      std::cout << "n: " << n << "\n";
      for (const auto& z : capped.items) std::cout << factorization_str(z) << "\n";
      if (capped.truncated) {
        std::cout << "(truncated to " << max_factorizations << " factorizations)\n";
      }
      return 0;
    }
    emit(j, format);
    return 0;
  }
  if (what == "lengths") {
    auto ls = nsgp::length_set(S, n);
    j["lengths"] = ls.lengths;
    j["min"] = ls.lengths.front();
    j["max"] = ls.lengths.back();
    j["delta"] = nsgp::delta_set(S, n);
    j["elasticity"] = rational_str(nsgp::elasticity_of_element(S, n));
    emit(j, format);
    return 0;
  }
  if (what == "rclasses") {
    auto part = nsgp::r_classes(S, n);
    j["count"] = part.classes.size();
    OrderedJson classes = OrderedJson::array();
    for (const auto& cls : part.classes) {
      OrderedJson c = OrderedJson::array();
      for (const auto& z : cls) c.push_back(factorization_json(z));
      classes.push_back(c);
    }
    j["classes"] = classes;
    j["min_lengths"] = part.class_min_lengths;
    j["mu"] = part.mu();
    emit(j, format);
    return 0;
  }
  if (what == "catenary") {
    j["catenary"] = nsgp::catenary_of_element(S, n);
    emit(j, format);
    return 0;
  }
  if (what == "tame") {
    j["tame"] = nsgp::tame_of_element(S, n);
    emit(j, format);
    return 0;
  }
  if (what == "graph") {
    auto g = nsgp::element_graph(S, n);
    if (format == "json") {
      OrderedJson verts = OrderedJson::array();
      for (int v : g.vertices) verts.push_back(v + 1);
      OrderedJson edges = OrderedJson::array();
      for (auto [u, v] : g.edges) edges.push_back(OrderedJson::array({u + 1, v + 1}));
      j["vertices"] = verts;
      j["edges"] = edges;
      j["components"] = g.component_count;
      emit(j, format);
      return 0;
    }
    // DOT text; vertices are 1-based generator indices.
    std::cout << "graph G_" << n << " {\n";
    std::cout << "  // components: " << g.component_count << "\n";
    for (int v : g.vertices) std::cout << "  " << (v + 1) << ";\n";
    for (auto [u, v] : g.edges) std::cout << "  " << (u + 1) << " -- " << (v + 1) << ";\n";
    std::cout << "}\n";
    return 0;
  }
  throw nsgp::ConfigInvalid("unknown element query: " + what);
}

std::pair<Int, Int> parse_range(const std::string& text, const char* what) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      Int v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw nsgp::ConfigInvalid(std::string("cannot parse ") + what + " range: '" + text + "'");
  }
}

int cmd_sweep(const std::string& a_range, const std::string& h_range,
              const std::string& d_range, const std::string& x_mode,
              const std::string& tuple, const std::string& checks_arg, int jobs,
              const std::string& format, bool with_counterexample) {
  nsgp::SweepConfig cfg;
  if (!tuple.empty()) {
    auto q = parse_int_list(tuple, "--tuple");
    if (q.size() != 4) throw nsgp::ConfigInvalid("--tuple takes a,h,d,x");
    cfg.a_lo = cfg.a_hi = q[0];
    cfg.h_lo = cfg.h_hi = q[1];
    cfg.d_lo = cfg.d_hi = q[2];
    cfg.x_values = {q[3]};
  } else {
    std::tie(cfg.a_lo, cfg.a_hi) = parse_range(a_range, "--a");
    std::tie(cfg.h_lo, cfg.h_hi) = parse_range(h_range, "--h");
    std::tie(cfg.d_lo, cfg.d_hi) = parse_range(d_range, "--d");
    if (x_mode != "all") cfg.x_values = parse_int_list(x_mode, "--x");
  }
  if (checks_arg != "all") {
    cfg.checks.clear();
    for (const std::string& name : [&] {
           std::vector<std::string> names;
           std::stringstream ss(checks_arg);
           std::string item;
           while (std::getline(ss, item, ',')) names.push_back(item);
           return names;
         }()) {
      auto c = nsgp::check_from_name(name);
      if (!c) throw nsgp::ConfigInvalid("unknown check: " + name);
      cfg.checks.push_back(*c);
    }
  }
  cfg.workers = jobs;
  if (const char* env = std::getenv("NSGP_TIMEOUT_SECS")) {
    cfg.tuple_budget = std::chrono::milliseconds(1000 * std::strtoll(env, nullptr, 10));
  }

  nsgp::SweepResult result = nsgp::run_sweep(cfg);
  if (with_counterexample) {
    auto row = nsgp::counterexample_check();
    ++result.summary.rows;
    if (row.status == nsgp::RowStatus::Pass) {
      ++result.summary.passed;
    } else {
      ++result.summary.failed;
    }
    result.rows.push_back(std::move(row));
  }

  if (format == "json") {
    std::cout << nsgp::report_json(result);
  } else if (format == "csv") {
    std::cout << nsgp::report_csv(result);
    std::cerr << "summary: tuples=" << result.summary.tuples
              << " skipped=" << result.summary.skipped << " rows=" << result.summary.rows
              << " passed=" << result.summary.passed << " failed=" << result.summary.failed
              << " timeouts=" << result.summary.timeouts << "\n";
  } else {
    std::cout << nsgp::report_text(result);
  }
  return result.summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact non-unique-factorization invariants of numerical monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string gens_arg, gas_arg;
  std::string format = "text";
  app.add_option("--gens", gens_arg, "Generators, comma separated (e.g. 5,13,16)");
  app.add_option("--gas", gas_arg, "Generalized arithmetic parameters a,h,d,x");
  app.add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* info = app.add_subcommand("info", "Invariants of a monoid");
  int frobenius_of_n = 0;
  info->add_option("--frobenius-of-N", frobenius_of_n,
                   "Pass -1 to report frobenius(N) = -1 instead of refusing");

  auto* element = app.add_subcommand("element", "Per-element data");
  Int n = 0;
  std::string what;
  std::size_t max_factorizations = 100000;
  element->add_option("--n", n, "The element to inspect")->required();
  element
      ->add_option("what", what,
                   "One of: factorizations, lengths, rclasses, catenary, tame, graph")
      ->required();
  element->add_option("--max-factorizations", max_factorizations,
                      "Truncate factorization listings beyond this count");

  auto* sweep = app.add_subcommand("sweep", "Cross-check closed forms against oracles");
  std::string a_range = "2..2", h_range = "1..1", d_range = "1..1", x_mode = "all";
  std::string tuple, checks_arg = "all";
  int jobs = 1;
  bool with_counterexample = false;
  sweep->add_option("--a", a_range, "Range lo..hi for a");
  sweep->add_option("--h", h_range, "Range lo..hi for h");
  sweep->add_option("--d", d_range, "Range lo..hi for d");
  sweep->add_option("--x", x_mode, "Either 'all' or an explicit comma list");
  sweep->add_option("--tuple", tuple, "Single tuple a,h,d,x (overrides the ranges)");
  sweep->add_option("--checks", checks_arg,
                    "Comma list of checks, or 'all': catenary, tame, omega, frobenius, "
                    "apery, maxlen, betti, minmult, bounds, h1, tau_identity");
  sweep->add_option("--jobs", jobs, "Worker threads");
  sweep->add_flag("--counterexample", with_counterexample,
                  "Also run the <6,9,11> strictness check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) {
      if (frobenius_of_n != 0 && frobenius_of_n != -1) {
        throw nsgp::ConfigInvalid("--frobenius-of-N only accepts -1");
      }
      return cmd_info(resolve(gens_arg, gas_arg), format, frobenius_of_n == -1);
    }
    if (element->parsed()) {
      return cmd_element(resolve(gens_arg, gas_arg), n, what, format, max_factorizations);
    }
    if (sweep->parsed()) {
      return cmd_sweep(a_range, h_range, d_range, x_mode, tuple, checks_arg, jobs, format,
                       with_counterexample);
    }
  } catch (const nsgp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

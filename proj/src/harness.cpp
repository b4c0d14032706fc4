#include "nsgp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nsgp/errors.hpp"
#include "nsgp/gas.hpp"
#include "nsgp/invariants.hpp"

namespace nsgp {

namespace {

using OrderedJson = nlohmann::ordered_json;

const char* kCheckNames[] = {"catenary", "tame",    "omega",  "frobenius",
                             "apery",    "maxlen",  "betti",  "minmult",
                             "bounds",   "h1",      "tau_identity"};

std::string int_list(const std::vector<Int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  s += '}';
  return s;
}

std::string exponent_list(const Factorization& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(z.e[i]);
  }
  s += ')';
  return s;
}

std::string tuple_flag(const GasParams& P) {
  return std::to_string(P.a) + "," + std::to_string(P.h) + "," + std::to_string(P.d) + "," +
         std::to_string(P.x);
}

// Lazily computed oracle values shared by the checks of one tuple.
struct TupleOracles {
  const GasParams& P;
  NumericalMonoid S;
  Deadline dl;

  std::optional<InvariantWitness> cat, tam;
  std::optional<OmegaWitness> omg;
  std::optional<std::vector<Int>> betti;

  TupleOracles(const GasParams& p, const Deadline& deadline)
      : P(p), S(p.to_monoid()), dl(deadline) {}

  const InvariantWitness& catenary() {
    if (!cat) cat = catenary_degree_witnessed(S, dl);
    return *cat;
  }
  const InvariantWitness& tame() {
    if (!tam) tam = tame_degree_witnessed(S, dl);
    return *tam;
  }
  const OmegaWitness& omega_value() {
    if (!omg) omg = omega_witnessed(S, dl);
    return *omg;
  }
  const std::vector<Int>& betti_list() {
    if (!betti) betti = betti_elements(S, dl);
    return *betti;
  }
};

struct CheckOutcome {
  std::string formula, oracle, witness;
  bool pass = false;
};

CheckOutcome check_catenary(TupleOracles& t) {
  CheckOutcome o;
  Int f = gas_catenary(t.P);
  const auto& w = t.catenary();
  o.formula = std::to_string(f);
  o.oracle = std::to_string(w.value);
  o.pass = f == w.value;
  if (!o.pass) {
    o.witness = "mu attained at n=" + std::to_string(w.element) + "; nsgp element --gas " +
                tuple_flag(t.P) + " --n " + std::to_string(w.element) + " rclasses";
  }
  return o;
}

CheckOutcome check_tame(TupleOracles& t) {
  CheckOutcome o;
  Int f = gas_tame(t.P);
  const auto& w = t.tame();
  o.formula = std::to_string(f);
  o.oracle = std::to_string(w.value);
  o.pass = f == w.value;
  if (!o.pass) {
    o.witness = "t(n) attained at n=" + std::to_string(w.element) + "; nsgp element --gas " +
                tuple_flag(t.P) + " --n " + std::to_string(w.element) + " tame";
  }
  return o;
}

CheckOutcome check_omega(TupleOracles& t) {
  CheckOutcome o;
  Int f = gas_tame(t.P);  // t(S) = omega(S) for this class
  const auto& w = t.omega_value();
  o.formula = std::to_string(f);
  o.oracle = std::to_string(w.value);
  o.pass = f == w.value;
  if (!o.pass) {
    o.witness = "omega attained for atom " + std::to_string(w.atom) + " at value " +
                std::to_string(w.element);
  }
  return o;
}

CheckOutcome check_frobenius(TupleOracles& t) {
  CheckOutcome o;
  Int f = gas_frobenius(t.P);
  Int g = t.S.frobenius();
  o.formula = std::to_string(f);
  o.oracle = std::to_string(g);
  o.pass = f == g;
  if (!o.pass) o.witness = "nsgp info --gas " + tuple_flag(t.P);
  return o;
}

CheckOutcome check_apery(TupleOracles& t) {
  CheckOutcome o;
  std::vector<Int> f = gas_apery(t.P);
  std::vector<Int> g = t.S.apery(t.P.a);
  std::sort(f.begin(), f.end());
  std::sort(g.begin(), g.end());
  o.formula = int_list(f);
  o.oracle = int_list(g);
  o.pass = f == g;
  if (!o.pass) o.witness = "nsgp info --gas " + tuple_flag(t.P);
  return o;
}

CheckOutcome check_maxlen(TupleOracles& t) {
  CheckOutcome o;
  Int bound = checked_add(gas_frobenius(t.P), 2 * t.S.largest_generator());
  Int checked = 0, agreed = 0;
  for (Int n = 0; n <= bound; ++n) {
    if ((n & 63) == 0) t.dl.check();
    bool member_formula = gas_contains(t.P, n);
    bool member_oracle = t.S.contains(n);
    ++checked;
    if (member_formula != member_oracle) {
      if (o.witness.empty()) {
        o.witness = "membership of n=" + std::to_string(n) + ": formula=" +
                    (member_formula ? "true" : "false") + " oracle=" +
                    (member_oracle ? "true" : "false");
      }
      continue;
    }
    if (!member_oracle) {
      ++agreed;
      continue;
    }
    Int f = gas_max_length(t.P, n);
    auto [q, i] = qaid_rep(t.P, n);
    Int fg = (q >= t.P.d) ? gas_max_length_general(t.P, q - t.P.d, i + t.P.a)
                          : gas_max_length_general(t.P, q, i);
    Int oracle = max_length(t.S, n);
    if (f == oracle && fg == f) {
      ++agreed;
    } else if (o.witness.empty()) {
      o.witness = "n=" + std::to_string(n) + ": formula=" + std::to_string(f) +
                  " general=" + std::to_string(fg) + " oracle=" + std::to_string(oracle) +
                  "; nsgp element --gas " + tuple_flag(t.P) + " --n " + std::to_string(n) +
                  " lengths";
    }
  }
  o.formula = std::to_string(checked);
  o.oracle = std::to_string(agreed);
  o.pass = checked == agreed;
  return o;
}

CheckOutcome check_betti(TupleOracles& t) {
  CheckOutcome o;
  const std::vector<Int>& betti = t.betti_list();
  std::vector<Int> cand = gas_betti_candidates(t.P);
  std::set<Int> cand_set(cand.begin(), cand.end());
  Int inside = 0;
  std::vector<Int> missing;
  for (Int n : betti) {
    if (cand_set.count(n)) {
      ++inside;
      cand_set.erase(n);
    } else {
      missing.push_back(n);
    }
  }
  o.formula = std::to_string(betti.size());
  o.oracle = std::to_string(inside);
  o.pass = missing.empty();
  std::vector<Int> unused(cand_set.begin(), cand_set.end());
  o.witness = "betti=" + int_list(betti) + " unused_candidates=" + int_list(unused);
  if (!o.pass) o.witness += " outside_candidates=" + int_list(missing);
  return o;
}

CheckOutcome check_minmult(TupleOracles& t) {
  CheckOutcome o;
  Int f = gas_min_multiple(t.P);
  Int g = min_multiple_in_rest(t.S);
  o.formula = std::to_string(f);
  o.oracle = std::to_string(g);
  o.pass = f == g;
  if (!o.pass) o.witness = "nsgp info --gas " + tuple_flag(t.P);
  return o;
}

CheckOutcome check_bounds(TupleOracles& t) {
  CheckOutcome o;
  GasBounds b = gas_bounds(t.P);
  Int c = t.catenary().value;
  Int tm = t.tame().value;
  Int total = 0, good = 0;
  auto expect = [&](bool cond, const std::string& label) {
    ++total;
    if (cond) {
      ++good;
    } else if (o.witness.empty()) {
      o.witness = "failed: " + label + "; nsgp info --gas " + tuple_flag(t.P);
    }
  };
  expect(c <= tm, "c(S) <= t(S)");
  expect(Rational(tm) <= b.upper, "t(S) <= B");
  expect(b.upper - Rational(tm) == b.upper_minus_tame, "B - t(S) = (x-1)d/a");
  expect(tm - c == b.tame_minus_catenary, "t(S) - c(S) matches the ceiling formula");
  expect(b.upper - Rational(gas_tame(t.P)) == b.upper_minus_tame, "B - gas_tame consistency");
  if (t.P.a % t.P.x != 1 && (t.P.x - 1) * t.P.d < t.P.a) {
    expect(b.upper.floor() == tm, "floor(B) = t(S)");
  }
  o.formula = std::to_string(total);
  o.oracle = std::to_string(good);
  o.pass = total == good;
  return o;
}

CheckOutcome check_h1(TupleOracles& t) {
  CheckOutcome o;
  if (t.P.h != 1) {
    o.formula = "-";
    o.oracle = "-";
    o.pass = true;
    o.witness = "not applicable: h != 1";
    return o;
  }
  GasH1 v = gas_h1_check(t.P);
  Int total = 0, good = 0;
  auto expect = [&](bool cond, const std::string& label) {
    ++total;
    if (cond) {
      ++good;
    } else if (o.witness.empty()) {
      o.witness = "failed: " + label + "; nsgp info --gas " + tuple_flag(t.P);
    }
  };
  expect(v.catenary == gas_catenary(t.P), "piecewise c equals gas_catenary");
  expect(v.tame == gas_tame(t.P), "piecewise t equals gas_tame");
  expect(v.catenary == t.catenary().value, "piecewise c equals oracle");
  expect(v.tame == t.tame().value, "piecewise t equals oracle");
  o.formula = std::to_string(total);
  o.oracle = std::to_string(good);
  o.pass = total == good;
  return o;
}

CheckOutcome check_tau_identity(TupleOracles& t) {
  CheckOutcome o;
  const auto& g = t.S.generators();
  Int total = 0, good = 0;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    Int lhs = tame_degree_of_atom(t.S, i, t.dl);
    Int w = omega_of_atom(t.S, g[i], t.dl);
    Int tau = tau_of_atom(t.S, g[i], t.dl);
    Int rhs = std::max(w, 1 + tau);
    ++total;
    if (lhs == rhs) {
      ++good;
    } else if (o.witness.empty()) {
      o.witness = "atom " + std::to_string(g[i]) + ": t_i(S)=" + std::to_string(lhs) +
                  " max(omega=" + std::to_string(w) + ", 1+tau=" + std::to_string(1 + tau) +
                  ")=" + std::to_string(rhs);
    }
  }
  o.formula = std::to_string(total);
  o.oracle = std::to_string(good);
  o.pass = total == good;
  return o;
}

CheckOutcome run_check(Check c, TupleOracles& t) {
  switch (c) {
    case Check::Catenary: return check_catenary(t);
    case Check::Tame: return check_tame(t);
    case Check::Omega: return check_omega(t);
    case Check::Frobenius: return check_frobenius(t);
    case Check::Apery: return check_apery(t);
    case Check::MaxLen: return check_maxlen(t);
    case Check::Betti: return check_betti(t);
    case Check::MinMult: return check_minmult(t);
    case Check::Bounds: return check_bounds(t);
    case Check::H1: return check_h1(t);
    case Check::TauIdentity: return check_tau_identity(t);
  }
  throw Error("unknown check");
}

std::vector<InvariantReport> run_tuple(const GasParams& P, const std::vector<Check>& checks,
                                       std::chrono::milliseconds budget) {
  Deadline dl = Deadline::after(budget);
  std::vector<InvariantReport> rows;
  std::optional<TupleOracles> oracles;
  for (Check c : checks) {
    InvariantReport row;
    row.a = P.a;
    row.h = P.h;
    row.d = P.d;
    row.x = P.x;
    row.check = check_name(c);
    auto start = std::chrono::steady_clock::now();
    try {
      if (!oracles) oracles.emplace(P, dl);
      CheckOutcome out = run_check(c, *oracles);
      row.formula_value = out.formula;
      row.oracle_value = out.oracle;
      row.witness = out.witness;
      row.status = out.pass ? RowStatus::Pass : RowStatus::Fail;
    } catch (const Timeout&) {
      row.formula_value = "?";
      row.oracle_value = "?";
      row.status = RowStatus::Timeout;
      row.witness = "timeout: tuple budget exhausted";
    } catch (const std::exception& e) {
      row.formula_value = "?";
      row.oracle_value = "?";
      row.status = RowStatus::Fail;
      row.witness = std::string("error: ") + e.what();
    }
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Check> normalized_checks(std::vector<Check> checks) {
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
  return checks;
}

void validate(const SweepConfig& c) {
  if (c.a_lo < 2 || c.a_lo > c.a_hi) throw ConfigInvalid("bad a range");
  if (c.h_lo < 1 || c.h_lo > c.h_hi) throw ConfigInvalid("bad h range");
  if (c.d_lo < 1 || c.d_lo > c.d_hi) throw ConfigInvalid("bad d range");
  if (c.checks.empty()) throw ConfigInvalid("no checks requested");
  if (c.workers < 1) throw ConfigInvalid("workers must be positive");
  for (Int x : c.x_values) {
    if (x < 1) throw ConfigInvalid("x values must be positive");
  }
}

}  // namespace

std::string check_name(Check c) { return kCheckNames[static_cast<int>(c)]; }

std::optional<Check> check_from_name(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kCheckNames); ++i) {
    if (name == kCheckNames[i]) return static_cast<Check>(i);
  }
  return std::nullopt;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> all = [] {
    std::vector<Check> v;
    for (std::size_t i = 0; i < std::size(kCheckNames); ++i) v.push_back(static_cast<Check>(i));
    return v;
  }();
  return all;
}

SweepResult run_sweep(const SweepConfig& config) {
  validate(config);
  std::vector<Check> checks = normalized_checks(config.checks);

  SweepResult result;
  std::vector<GasParams> tuples;
  for (Int a = config.a_lo; a <= config.a_hi; ++a) {
    for (Int h = config.h_lo; h <= config.h_hi; ++h) {
      for (Int d = config.d_lo; d <= config.d_hi; ++d) {
        std::vector<Int> xs = config.x_values;
        if (xs.empty()) {
          for (Int x = 1; x <= a - 1; ++x) xs.push_back(x);
        }
        for (Int x : xs) {
          if (std::gcd(a, d) != 1) {
            ++result.summary.skipped;
            continue;
          }
          tuples.emplace_back(a, h, d, x);
        }
      }
    }
  }
  result.summary.tuples = static_cast<std::int64_t>(tuples.size());

  std::vector<std::vector<InvariantReport>> per_tuple(tuples.size());
  int workers = config.workers;
  if (static_cast<std::size_t>(workers) > tuples.size()) {
    workers = static_cast<int>(std::max<std::size_t>(tuples.size(), 1));
  }
  if (workers <= 1) {
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      per_tuple[i] = run_tuple(tuples[i], checks, config.tuple_budget);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < tuples.size(); i = next.fetch_add(1)) {
        per_tuple[i] = run_tuple(tuples[i], checks, config.tuple_budget);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& rows : per_tuple) {
    for (auto& row : rows) {
      ++result.summary.rows;
      switch (row.status) {
        case RowStatus::Pass: ++result.summary.passed; break;
        case RowStatus::Fail: ++result.summary.failed; break;
        case RowStatus::Timeout: ++result.summary.timeouts; break;
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

InvariantReport counterexample_check() {
  InvariantReport row;
  row.check = "counterexample";
  row.formula_value = "c=4 minmult=3";
  auto start = std::chrono::steady_clock::now();
  NumericalMonoid S({6, 9, 11});
  Int c = catenary_degree(S);
  Int mm = min_multiple_in_rest(S);
  row.oracle_value = "c=" + std::to_string(c) + " minmult=" + std::to_string(mm);
  row.status = row.formula_value == row.oracle_value ? RowStatus::Pass : RowStatus::Fail;
  row.witness = "S=<6,9,11>; nsgp info --gens 6,9,11";
  row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return row;
}

namespace {

OrderedJson row_json(const InvariantReport& r) {
  OrderedJson j;
  j["a"] = r.a;
  j["h"] = r.h;
  j["d"] = r.d;
  j["x"] = r.x;
  j["check"] = r.check;
  j["formula"] = r.formula_value;
  j["oracle"] = r.oracle_value;
  j["equal"] = r.equal();
  j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

OrderedJson summary_json(const SweepSummary& s) {
  OrderedJson j;
  j["tuples"] = s.tuples;
  j["skipped"] = s.skipped;
  j["rows"] = s.rows;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["timeouts"] = s.timeouts;
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_json(const SweepResult& result) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& r : result.rows) arr.push_back(row_json(r));
  OrderedJson tail;
  tail["summary"] = summary_json(result.summary);
  arr.push_back(tail);
  return arr.dump() + "\n";
}

std::string report_csv(const SweepResult& result) {
  std::string out = "a,h,d,x,check,formula,oracle,equal,witness,elapsed_ms\n";
  for (const auto& r : result.rows) {
    out += std::to_string(r.a) + "," + std::to_string(r.h) + "," + std::to_string(r.d) + "," +
           std::to_string(r.x) + "," + r.check + "," + r.formula_value + "," + r.oracle_value +
           "," + (r.equal() ? "true" : "false") + "," + csv_quote(r.witness) + "," +
           std::to_string(r.elapsed_ms) + "\n";
  }
  return out;
}

std::string report_text(const SweepResult& result) {
  std::ostringstream out;
  for (const auto& r : result.rows) {
    const char* state = r.status == RowStatus::Pass    ? "ok"
                        : r.status == RowStatus::Fail ? "FAIL"
                                                       : "TIMEOUT";
    out << "a=" << r.a << " h=" << r.h << " d=" << r.d << " x=" << r.x << "  " << r.check
        << ": formula=" << r.formula_value << " oracle=" << r.oracle_value << " " << state;
    if (!r.witness.empty()) out << "  [" << r.witness << "]";
    out << "  (" << r.elapsed_ms << " ms)\n";
  }
  const auto& s = result.summary;
  out << "summary: tuples=" << s.tuples << " skipped=" << s.skipped << " rows=" << s.rows
      << " passed=" << s.passed << " failed=" << s.failed << " timeouts=" << s.timeouts << "\n";
  return out.str();
}

}  // namespace nsgp

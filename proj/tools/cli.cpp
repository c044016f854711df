#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermzeta/characters.hpp"
#include "hermzeta/discriminants.hpp"
#include "hermzeta/eisenstein.hpp"
#include "hermzeta/errors.hpp"
#include "hermzeta/euler_products.hpp"
#include "hermzeta/hermitian_count.hpp"
#include "hermzeta/parallel.hpp"
#include "hermzeta/residue_table.hpp"

namespace hermzeta::cli {

namespace {

using Record = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::vector<std::string> columns;
  std::vector<Record> rows;
};

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw std::invalid_argument("malformed integer or range '" + whole + "'");
  }
  return v;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::int64_t> parse_ranges(const std::vector<std::string>& tokens) {
  std::vector<std::int64_t> out;
  for (const auto& t : tokens) {
    const auto r = parse_range(t);
    out.insert(out.end(), r.begin(), r.end());
  }
  return sorted_unique(out);
}

std::string cell_text(const Record& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Report& report, Format format, std::ostream& os) {
  switch (format) {
    case Format::kJson: {
      Record arr = Record::array();
      for (const auto& row : report.rows) arr.push_back(row);
      os << arr.dump(2) << '\n';
      return;
    }
    case Format::kCsv: {
      for (std::size_t c = 0; c < report.columns.size(); ++c) {
        os << (c ? "," : "") << report.columns[c];
      }
      os << '\n';
      for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < report.columns.size(); ++c) {
          os << (c ? "," : "") << cell_text(row.at(report.columns[c]));
        }
        os << '\n';
      }
      return;
    }
    case Format::kText: {
      std::vector<std::size_t> width(report.columns.size());
      for (std::size_t c = 0; c < report.columns.size(); ++c) width[c] = report.columns[c].size();
      for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < report.columns.size(); ++c) {
          width[c] = std::max(width[c], cell_text(row.at(report.columns[c])).size());
        }
      }
      auto line = [&](const std::function<std::string(std::size_t)>& cell) {
        std::string s;
        for (std::size_t c = 0; c < report.columns.size(); ++c) {
          std::string v = cell(c);
          if (c + 1 < report.columns.size()) v.resize(width[c] + 2, ' ');
          s += v;
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
      };
      line([&](std::size_t c) { return report.columns[c]; });
      for (const auto& row : report.rows) {
        line([&](std::size_t c) { return cell_text(row.at(report.columns[c])); });
      }
      return;
    }
  }
}

// verify ---------------------------------------------------------------------

Record check_row(std::int64_t D, Record k, Record j, const std::string& check, std::size_t checked,
                 std::size_t failures, std::string detail) {
  Record r;
  r["D"] = D;
  r["k"] = std::move(k);
  r["j"] = std::move(j);
  r["check"] = check;
  r["status"] = failures == 0 ? "pass" : "fail";
  r["checked"] = checked;
  r["failures"] = failures;
  r["detail"] = std::move(detail);
  r["paper_eq"] = check;
  return r;
}

// Runs fn, turning an unexpected exception into a failed row.
Record guarded(std::int64_t D, Record k, Record j, const std::string& check,
               const std::function<Record()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return check_row(D, std::move(k), std::move(j), check, 0, 1, std::string("exception: ") + e.what());
  }
}

std::vector<Record> verify_kj(const FundamentalDiscriminant& D, unsigned k, int j, std::size_t N) {
  const std::int64_t d = D.value();
  std::vector<Record> rows;
  const TheoremReport report = verify_main_theorem(k, D, j, N);
  auto first_detail = [](const std::vector<CoefficientMismatch>& m) {
    if (m.empty()) return std::string();
    return "n=" + std::to_string(m.front().index) + " expected " + to_string(m.front().expected) +
           " got " + to_string(m.front().actual);
  };
  rows.push_back(check_row(d, k, j, "main-identity", N + 1, report.mismatches.size(),
                           first_detail(report.mismatches)));
  rows.push_back(check_row(d, k, j, "main-identity-coprime", report.coprime_indices_checked,
                           report.coprime_mismatches.size(), first_detail(report.coprime_mismatches)));
  rows.push_back(guarded(d, k, j, "fricke", [&] {
    const bool ok = fricke_check(k, D, j, N);
    return check_row(d, k, j, "fricke", 1, ok ? 0 : 1, "");
  }));
  rows.push_back(guarded(d, k, j, "f-constant", [&] {
    const Rational expected = f_constant_from_definition(k, D);
    const Rational actual = eisenstein_combination(k, D, j, 0).coefficients[0];
    const bool ok = expected == actual && F_expansion(k, D, j, 0).coefficients[0] == expected;
    return check_row(d, k, j, "f-constant", 1, ok ? 0 : 1,
                     ok ? "" : "expected " + to_string(expected) + " got " + to_string(actual));
  }));
  rows.push_back(guarded(d, k, j, "g-constant", [&] {
    const Rational expected = g_constant_from_definition(k, D, j);
    const Rational actual = g_combination(k, D, j, 0).coefficients[0];
    return check_row(d, k, j, "g-constant", 1, expected == actual ? 0 : 1,
                     expected == actual ? "" : "expected " + to_string(expected) + " got " + to_string(actual));
  }));
  rows.push_back(guarded(d, k, j, "theta0-charsum", [&] {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string detail;
    for (std::int64_t delta = 1; delta <= static_cast<std::int64_t>(N); ++delta) {
      if (std::gcd(delta, 2 * d) != 1) continue;
      ++checked;
      if (!theta0_charsum_check(delta, D, k, j)) {
        if (failures++ == 0) detail = "delta=" + std::to_string(delta);
      }
    }
    return check_row(d, k, j, "theta0-charsum", checked, failures, detail);
  }));
  return rows;
}

std::vector<Record> verify_k(const FundamentalDiscriminant& D, unsigned k, std::size_t N) {
  const std::int64_t d = D.value();
  const auto n_max = static_cast<std::int64_t>(N);
  std::vector<Record> rows;
  rows.push_back(guarded(d, k, nullptr, "c-constant", [&] {
    const bool ok = c_constant_direct(k, D) == c_constant_via_functional_equation(k, D);
    return check_row(d, k, nullptr, "c-constant", 1, ok ? 0 : 1, "");
  }));
  rows.push_back(guarded(d, k, nullptr, "sigma-functional", [&] {
    const QuadraticCharacter chi(D);
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string detail;
    for (std::int64_t delta = -n_max; delta <= n_max; ++delta) {
      if (delta == 0 || std::gcd(delta, d) != 1) continue;
      ++checked;
      if (!sigma_functional_check(chi, 2 * k, delta)) {
        if (failures++ == 0) detail = "delta=" + std::to_string(delta);
      }
    }
    return check_row(d, k, nullptr, "sigma-functional", checked, failures, detail);
  }));
  rows.push_back(guarded(d, k, nullptr, "local-factor", [&] {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string detail;
    for (const std::int64_t p : prime_divisors(d)) {
      for (std::int64_t delta = -n_max; delta <= n_max; ++delta) {
        if (delta == 0 || std::gcd(delta, 2 * d) != 1) continue;
        ++checked;
        const Rational lhs = euler_factor(delta, p, D).evaluate_at_exponent(2 * k);
        if (lhs != local_factor_closed_form(delta, p, D, 2 * k)) {
          if (failures++ == 0) detail = "p=" + std::to_string(p) + " delta=" + std::to_string(delta);
        }
      }
    }
    return check_row(d, k, nullptr, "local-factor", checked, failures, detail);
  }));
  return rows;
}

std::vector<Record> verify_d(const FundamentalDiscriminant& D, std::size_t N,
                             const std::vector<std::int64_t>& deltas, const std::vector<std::int64_t>& ns) {
  const std::int64_t d = D.value();
  const auto n_max = static_cast<std::int64_t>(N);
  std::vector<Record> rows;
  rows.push_back(guarded(d, nullptr, nullptr, "chi-factorization", [&] {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string detail;
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
      ++checked;
      if (!chi_factorization_check(D, n)) {
        if (failures++ == 0) detail = "n=" + std::to_string(n);
      }
    }
    return check_row(d, nullptr, nullptr, "chi-factorization", checked, failures, detail);
  }));
  rows.push_back(guarded(d, nullptr, nullptr, "egm-closed-form", [&] {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string detail;
    const auto length = static_cast<std::size_t>(ns.back());
    for (const std::int64_t delta : deltas) {
      const auto predicted = egm_coefficient_oracle(delta, D, length);
      for (const std::int64_t n : ns) {
        ++checked;
        const std::uint64_t actual = r_count(delta, n, D);
        if (predicted[static_cast<std::size_t>(n)] != Integer(static_cast<unsigned long>(actual))) {
          if (failures++ == 0) {
            detail = "delta=" + std::to_string(delta) + " n=" + std::to_string(n);
          }
        }
      }
    }
    return check_row(d, nullptr, nullptr, "egm-closed-form", checked, failures, detail);
  }));
  return rows;
}

// Runs item_fn(i) for every item on the worker pool and concatenates the
// results in item order.
std::vector<Record> collect(std::size_t count, unsigned threads,
                            const std::function<std::vector<Record>(std::size_t)>& item_fn) {
  std::vector<std::vector<Record>> slots(count);
  parallel_for(count, threads, [&](std::size_t i) { slots[i] = item_fn(i); });
  std::vector<Record> out;
  for (auto& s : slots) {
    for (auto& r : s) out.push_back(std::move(r));
  }
  return out;
}

Report cmd_verify(const RunConfig& cfg) {
  struct Item {
    std::int64_t d;
    int kind;  // 0: per (D, k, j), 1: per (D, k), 2: per D
    unsigned k;
    int j;
  };
  std::vector<Item> items;
  for (const auto d : cfg.discriminants) {
    for (const auto k : cfg.ks) {
      for (const auto j : cfg.js) items.push_back({d, 0, k, j});
      items.push_back({d, 1, k, 0});
    }
    items.push_back({d, 2, 0, 0});
  }
  const auto N = static_cast<std::size_t>(cfg.precision);
  Report report{{"D", "k", "j", "check", "status", "checked", "failures", "detail"}, {}};
  report.rows = collect(items.size(), cfg.threads, [&](std::size_t i) {
    const Item& it = items[i];
    const FundamentalDiscriminant D(it.d);
    if (it.kind == 0) return verify_kj(D, it.k, it.j, N);
    if (it.kind == 1) return verify_k(D, it.k, N);
    return verify_d(D, N, cfg.deltas, cfg.ns);
  });
  return report;
}

// table / count / eisenstein / oracle ------------------------------------------

Report cmd_table(const RunConfig& cfg) {
  struct Item {
    std::int64_t d;
    unsigned k;
    int j;
    std::int64_t delta;
  };
  std::vector<Item> items;
  for (const auto d : cfg.discriminants) {
    for (const auto k : cfg.ks) {
      for (const auto j : cfg.js) {
        for (const auto delta : cfg.deltas) items.push_back({d, k, j, delta});
      }
    }
  }
  Report report{{"D", "k", "j", "Delta", "num", "den", "pi_exp", "sqrtD_exp", "float_approx"}, {}};
  report.rows = collect(items.size(), cfg.threads, [&](std::size_t i) {
    const Item& it = items[i];
    const SymbolicConstant z = special_value_Z(it.delta, it.j, FundamentalDiscriminant(it.d), it.k);
    Record r;
    r["D"] = it.d;
    r["k"] = it.k;
    r["j"] = it.j;
    r["Delta"] = it.delta;
    r["num"] = to_string(Integer(z.rational_part().get_num()));
    r["den"] = to_string(Integer(z.rational_part().get_den()));
    r["pi_exp"] = z.pi_exponent();
    r["sqrtD_exp"] = z.sqrt_abs_disc_exponent();
    r["float_approx"] = z.to_double();
    r["paper_eq"] = "special-value-divisor-sum";
    return std::vector<Record>{r};
  });
  return report;
}

Report cmd_count(const RunConfig& cfg) {
  Report report{{"D", "Delta", "n", "r", "r_star"}, {}};
  const auto max_n = static_cast<std::uint64_t>(cfg.ns.back());
  for (const auto d : cfg.discriminants) {
    const FundamentalDiscriminant D(d);
    const ResidueCountTable plain = ResidueCountTable::for_r(D, max_n, cfg.threads);
    const ResidueCountTable star = ResidueCountTable::for_r_star(D, max_n, cfg.threads);
    for (const auto delta : cfg.deltas) {
      for (const auto n : cfg.ns) {
        Record r;
        r["D"] = d;
        r["Delta"] = delta;
        r["n"] = n;
        r["r"] = plain.r(delta, static_cast<std::uint64_t>(n));
        r["r_star"] = star.r_star(delta, static_cast<std::uint64_t>(n));
        r["paper_eq"] = "representation-count";
        report.rows.push_back(std::move(r));
      }
    }
  }
  return report;
}

Report cmd_eisenstein(const RunConfig& cfg) {
  Report report{{"D", "k", "D1", "D2", "index", "num", "den"}, {}};
  const auto N = static_cast<std::size_t>(cfg.precision);
  for (const auto d : cfg.discriminants) {
    const FundamentalDiscriminant D(d);
    for (const auto k : cfg.ks) {
      for (const auto& pair : enumerate_splitting_pairs(D)) {
        const QExpansion e = eisenstein_expansion(QuadraticCharacter(pair.d1), QuadraticCharacter(pair.d2),
                                                  2 * k + 1, N);
        for (std::size_t n = 0; n <= N; ++n) {
          Record r;
          r["D"] = d;
          r["k"] = k;
          r["D1"] = pair.d1.value();
          r["D2"] = pair.d2.value();
          r["index"] = n;
          r["num"] = to_string(Integer(e.coefficients[n].get_num()));
          r["den"] = to_string(Integer(e.coefficients[n].get_den()));
          r["paper_eq"] = "eisenstein-normalized";
          report.rows.push_back(std::move(r));
        }
      }
    }
  }
  return report;
}

Report cmd_oracle(const RunConfig& cfg, bool& all_equal) {
  struct Item {
    std::int64_t d;
    std::int64_t delta;
  };
  std::vector<Item> items;
  for (const auto d : cfg.discriminants) {
    for (const auto delta : cfg.deltas) items.push_back({d, delta});
  }
  Report report{{"D", "Delta", "n", "r", "predicted", "status"}, {}};
  report.rows = collect(items.size(), cfg.threads, [&](std::size_t i) {
    const Item& it = items[i];
    const FundamentalDiscriminant D(it.d);
    std::vector<Record> rows;
    std::vector<Integer> predicted;
    std::string error;
    try {
      predicted = egm_coefficient_oracle(it.delta, D, static_cast<std::size_t>(cfg.ns.back()));
    } catch (const IntegralityError& e) {
      error = e.what();
    }
    for (const auto n : cfg.ns) {
      const std::uint64_t actual = r_count(it.delta, n, D);
      Record r;
      r["D"] = it.d;
      r["Delta"] = it.delta;
      r["n"] = n;
      r["r"] = actual;
      if (error.empty()) {
        const Integer& p = predicted[static_cast<std::size_t>(n)];
        r["predicted"] = to_string(p);
        r["status"] = p == Integer(static_cast<unsigned long>(actual)) ? "pass" : "fail";
      } else {
        r["predicted"] = nullptr;
        r["status"] = "fail";
      }
      r["paper_eq"] = "egm-closed-form";
      rows.push_back(std::move(r));
    }
    return rows;
  });
  all_equal = std::all_of(report.rows.begin(), report.rows.end(),
                          [](const Record& r) { return r["status"] == "pass"; });
  return report;
}

// configuration ------------------------------------------------------------------

struct RawOptions {
  std::vector<std::string> disc;
  std::vector<std::string> k;
  std::vector<std::string> j;
  std::vector<std::string> delta;
  std::vector<std::string> n;
  std::int64_t N = 200;
  std::string format = "text";
  std::string out;
  unsigned threads = default_thread_count();
};

RunConfig build_config(Command command, const RawOptions& raw) {
  RunConfig cfg;
  cfg.command = command;
  try {
    cfg.discriminants = parse_ranges(raw.disc);
    if (!raw.k.empty()) {
      cfg.ks.clear();
      for (const auto v : parse_ranges(raw.k)) {
        if (v < 1 || v > 64) throw UsageError("k must lie in 1..64, got " + std::to_string(v));
        cfg.ks.push_back(static_cast<unsigned>(v));
      }
    }
    if (!raw.j.empty()) {
      cfg.js.clear();
      for (const auto v : parse_ranges(raw.j)) {
        if (v != 0 && v != 1) throw UsageError("j must be 0 or 1, got " + std::to_string(v));
        cfg.js.push_back(static_cast<int>(v));
      }
    }
    cfg.deltas = parse_ranges(raw.delta);
    cfg.ns = parse_ranges(raw.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (cfg.discriminants.empty()) throw UsageError("--disc needs at least one discriminant");
  for (const auto d : cfg.discriminants) {
    try {
      FundamentalDiscriminant D(d);
    } catch (const std::invalid_argument& e) {
      throw UsageError("--disc " + std::to_string(d) + ": " + e.what());
    }
    if (d >= 0) throw UsageError("--disc " + std::to_string(d) + ": discriminant must be negative");
  }
  if (raw.N < 1) throw UsageError("--N must be >= 1, got " + std::to_string(raw.N));
  cfg.precision = raw.N;
  if (raw.threads < 1) throw UsageError("--threads must be >= 1");
  cfg.threads = raw.threads;
  cfg.out_path = raw.out;
  if (raw.format == "text") {
    cfg.format = Format::kText;
  } else if (raw.format == "csv") {
    cfg.format = Format::kCsv;
  } else if (raw.format == "json") {
    cfg.format = Format::kJson;
  } else {
    throw UsageError("--format must be text, csv or json");
  }

  switch (command) {
    case Command::kTable:
      if (cfg.deltas.empty()) cfg.deltas = parse_range("1..10");
      if (cfg.deltas.front() < 1) throw UsageError("table needs Delta >= 1");
      break;
    case Command::kCount:
      if (cfg.deltas.empty()) cfg.deltas = {1};
      if (cfg.ns.empty()) cfg.ns = parse_range("1..10");
      break;
    case Command::kVerify:
    case Command::kOracle:
      if (cfg.deltas.empty()) cfg.deltas = parse_range("-10..10");
      if (cfg.ns.empty()) cfg.ns = parse_range("1..40");
      break;
    case Command::kEisenstein:
      break;
  }
  if (!cfg.ns.empty() && cfg.ns.front() < 1) throw UsageError("--n must be >= 1");
  return cfg;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output path '" << cfg.out_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = cfg.out_path.empty() ? out : file;

  Report report;
  int status = kExitOk;
  switch (cfg.command) {
    case Command::kVerify:
      report = cmd_verify(cfg);
      for (const auto& r : report.rows) {
        if (r["status"] != "pass") status = kExitMismatch;
      }
      break;
    case Command::kTable:
      report = cmd_table(cfg);
      break;
    case Command::kCount:
      report = cmd_count(cfg);
      break;
    case Command::kEisenstein:
      report = cmd_eisenstein(cfg);
      break;
    case Command::kOracle: {
      bool all_equal = false;
      report = cmd_oracle(cfg, all_equal);
      if (!all_equal) status = kExitMismatch;
      break;
    }
  }
  std::ostringstream buffer;
  emit(report, cfg.format, buffer);
  sink << buffer.str();
  sink.flush();
  if (!sink) {
    err << "error: failed to write output\n";
    return kExitUsage;
  }
  return status;
}

}  // namespace

std::vector<std::int64_t> parse_range(const std::string& token) {
  const auto dots = token.find("..");
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int(token, token);
  } else {
    lo = parse_int(std::string_view(token).substr(0, dots), token);
    hi = parse_int(std::string_view(token).substr(dots + 2), token);
  }
  if (lo > hi) throw std::invalid_argument("empty range '" + token + "'");
  if (hi - lo > 10'000'000) throw std::invalid_argument("range '" + token + "' is too long");
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<std::string> normalize_arguments(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool long_option = a.rfind("--", 0) == 0 && a.size() > 2 && a.find('=') == std::string::npos;
    if (!long_option || a == "--help") {
      out.push_back(a);
      continue;
    }
    std::size_t jdx = i + 1;
    while (jdx < args.size() && args[jdx].rfind("--", 0) != 0) {
      out.push_back(a + "=" + args[jdx]);
      ++jdx;
    }
    if (jdx == i + 1) out.push_back(a);
    i = jdx - 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of binary Hermitian forms: special values, Eisenstein series and checks",
               "hermzeta"};
  app.require_subcommand(1, 1);

  RawOptions raw;
  const std::map<std::string, std::pair<Command, std::string>> commands{
      {"verify", {Command::kVerify, "Run the exact identity and lemma checks"}},
      {"table", {Command::kTable, "Tabulate special values Z((-1)^(j-1) Delta, 2k)"}},
      {"count", {Command::kCount, "Brute-force representation counts r and r*"}},
      {"eisenstein", {Command::kEisenstein, "Dump q-expansions of E_(2k+1)(chi_D1, chi_D2)"}},
      {"oracle", {Command::kOracle, "Compare brute-force counts with the closed-form Dirichlet series"}},
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->add_option("--disc", raw.disc, "Negative fundamental discriminants")->required();
    sub->add_option("--k", raw.k, "k values or ranges a..b (default 1)");
    sub->add_option("--j", raw.j, "j values in {0, 1} (default 0 1)");
    sub->add_option("--delta", raw.delta, "Delta values or ranges a..b");
    sub->add_option("--n", raw.n, "n values or ranges a..b");
    sub->add_option("--N", raw.N, "Truncation / q-expansion precision (default 200)");
    sub->add_option("--format", raw.format, "text, csv or json (default text)");
    sub->add_option("--out", raw.out, "Output file (default stdout)");
    sub->add_option("--threads", raw.threads, "Worker threads (default HERMZETA_THREADS or all cores)");
  }

  std::vector<std::string> normalized = normalize_arguments(args);
  std::reverse(normalized.begin(), normalized.end());
  try {
    app.parse(normalized);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Command command = Command::kVerify;
  for (const auto& [name, entry] : commands) {
    if (app.got_subcommand(name)) command = entry.first;
  }
  RunConfig cfg;
  try {
    cfg = build_config(command, raw);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return execute(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace hermzeta::cli

#include "magneton/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "magneton/diagnostics.hpp"
#include "magneton/errors.hpp"
#include "magneton/potential.hpp"
#include "magneton/quad.hpp"
#include "magneton/roots.hpp"
#include "magneton/specfun.hpp"
#include "magneton/taylor.hpp"

#ifndef MAGNETON_VERSION
#define MAGNETON_VERSION "unknown"
#endif

namespace magneton::cli {
namespace {

constexpr double kJumpPoints[] = {0.0, 0.5, 1.0};

// Default rows: both sides of the strip and the critical line itself.
const std::vector<double> kDefaultTableRows = {1.0, 0.0, 0.8, 0.2, 0.7, 0.3, 0.6, 0.4, 0.55,
                                               0.45, 0.5, 1.2, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0};

struct Manifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string rh_mode = "conditional_rh";
};

std::string mode_name(RhMode mode) {
  return mode == RhMode::conditional_rh ? "conditional_rh" : "outside_strip_only";
}

std::string rh_tag(bool in_strip, RhMode mode) {
  return in_strip ? mode_name(mode) : "unconditional";
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MAGNETON_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1) {
      throw DomainError(fmt::format("MAGNETON_THREADS must be a positive integer, got '{}'", env));
    }
    n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw DomainError(fmt::format("'{}' is not a finite number", text));
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<double> uniform_grid(double from, double to, double step) {
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  if (!(to >= from)) throw DomainError(fmt::format("grid end {} is below its start {}", to, from));
  const double count = std::floor((to - from) / step + 1e-9) + 1.0;
  if (count > 1e7) throw DomainError("grid has more than 10^7 points");
  std::vector<double> grid;
  for (long i = 0; i < static_cast<long>(count); ++i) grid.push_back(from + i * step);
  return grid;
}

void emit(const Manifest& m, const std::string& header, const std::string& body,
          const std::optional<std::string>& out_path, std::ostream& out) {
  std::string data = fmt::format("# magneton {}\n# command: {}\n# rh_mode: {}\n", MAGNETON_VERSION,
                                 m.command, m.rh_mode);
  for (const auto& [k, v] : m.parameters) data += fmt::format("# {} = {}\n", k, v);
  data += header + "\n" + body;

  if (!out_path) {
    out << data;
    return;
  }
  std::ofstream file(*out_path, std::ios::binary);
  if (!file) throw DomainError(fmt::format("cannot open '{}' for writing", *out_path));
  file << data;

  const std::string stamp = iso_timestamp();
  nlohmann::json sidecar = {{"command", m.command},         {"parameters", m.parameters},
                            {"rh_mode", m.rh_mode},         {"tool_version", MAGNETON_VERSION},
                            {"timestamp", stamp},           {"data_file", *out_path}};
  std::ofstream meta(*out_path + ".manifest.json");
  if (!meta) throw DomainError(fmt::format("cannot write the manifest for '{}'", *out_path));
  meta << sidecar.dump(2) << "\n";
  out << fmt::format("wrote {} at {}\n", *out_path, stamp);
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::vector<std::string> rho;
  double t_max = 50.0;
  double tol = 1e-8;
  RhMode mode = RhMode::conditional_rh;
  std::optional<std::string> out;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const auto rows = a.rho.empty() ? kDefaultTableRows : parse_rho_list(a.rho);
  QuadratureConfig cfg;
  cfg.t_max = a.t_max;
  cfg.abs_tol = a.tol;
  validate(cfg);
  if (a.mode == RhMode::outside_strip_only) {
    for (double r : rows) {
      if (inside_strip(r)) {
        throw ModeError(fmt::format("rho = {} is inside the critical strip; the closed form there "
                                    "needs --rh-mode conditional",
                                    r));
      }
    }
  }

  std::vector<double> numeric(rows.size());
  std::vector<std::exception_ptr> failure(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        numeric[i] = integrate_phi(rows[i], cfg).value;
      } catch (...) {
        failure[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::min<std::size_t>(worker_count(), rows.size());
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (const auto& f : failure) {
    if (f) std::rethrow_exception(f);
  }

  std::string body;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double rho = rows[i];
    const double closed = phi_closed(rho, a.mode);
    body += fmt::format("{:.10g},{:.10f},{:.10f},{:.3e},{:.10f},{}\n", rho, numeric[i], closed,
                        std::abs(numeric[i] - closed), symmetry_defect(rho),
                        rh_tag(inside_strip(rho), a.mode));
  }
  Manifest m{"table",
             {{"t_max", fmt::format("{}", a.t_max)},
              {"tol", fmt::format("{}", a.tol)},
              {"rows", fmt::format("{}", rows.size())}},
             mode_name(a.mode)};
  emit(m, "rho,phi_numeric,phi_closed,abs_diff,symmetry_f,rh_tag", body, a.out, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// figure

struct FigureArgs {
  std::string name;
  std::optional<double> from, to, step;
  std::optional<double> one_sided;
  RhMode mode = RhMode::conditional_rh;
  std::optional<std::string> out;
};

std::vector<double> default_field_grid() {
  // multiples of 0.002 on [-2, 3]: every fifth point, all of them near a jump
  std::vector<double> grid;
  for (int k = -1000; k <= 1500; ++k) {
    const double x = k / 500.0;
    bool near_jump = false;
    for (double j : kJumpPoints) near_jump = near_jump || std::abs(x - j) <= 0.05 + 1e-12;
    if (k % 5 == 0 || near_jump) grid.push_back(x);
  }
  return grid;
}

int cmd_figure(const FigureArgs& a, std::ostream& out) {
  const bool custom = a.from || a.to || a.step;
  if (custom && !(a.from && a.to && a.step)) {
    throw DomainError("--from, --to and --step must be given together");
  }
  Manifest m{"figure " + a.name, {}, mode_name(a.mode)};
  std::string header, body;
  const auto row = [&](double x, double v, bool in_strip) {
    body += fmt::format("{:.10g},{:.12g},{}\n", x, v, rh_tag(in_strip, a.mode));
  };

  if (a.name == "phi") {
    m.parameters["figure"] = "potential phi(rho) on the real line";
    header = "rho,phi,rh_tag";
    const auto grid = custom ? uniform_grid(*a.from, *a.to, *a.step) : uniform_grid(-2.0, 3.0, 0.01);
    for (double r : grid) row(r, phi_closed(r, a.mode), inside_strip(r));
  } else if (a.name == "field") {
    m.parameters["figure"] = "field E(rho) = phi'(rho) with its jumps";
    header = "rho,field_E,rh_tag";
    const auto grid = custom ? uniform_grid(*a.from, *a.to, *a.step) : default_field_grid();
    const double offset = a.one_sided.value_or(custom ? 0.0 : 1e-6);
    if (a.one_sided && !(*a.one_sided > 0.0 && *a.one_sided < 0.01)) {
      throw DomainError("--one-sided offset must be in (0, 0.01)");
    }
    m.parameters["one_sided_offset"] = fmt::format("{}", offset);
    for (double r : grid) {
      const double* hit = nullptr;
      for (const double& j : kJumpPoints) {
        if (std::abs(r - j) < 1e-9) hit = &j;
      }
      if (!hit) {
        row(r, field_E(r, a.mode), inside_strip(r));
      } else if (offset > 0.0) {
        for (double x : {*hit - offset, *hit + offset}) row(x, field_E(x, a.mode), inside_strip(x));
      } else {
        throw JumpPointError(fmt::format(
            "the grid hits the jump at rho = {}; sample it one-sided with --one-sided 1e-6", *hit));
      }
    }
  } else if (a.name == "well") {
    m.parameters["figure"] = "symmetric well S(x) around x = 1";
    header = "x,well_S,rh_tag";
    // anchored at x = 1 so that mirrored rows are computed from the same |x - 1|
    const double lo = custom ? *a.from : -1.0, hi = custom ? *a.to : 3.0;
    const double step = custom ? *a.step : 0.01;
    uniform_grid(lo, hi, step);  // validates the flags
    const long i_lo = static_cast<long>(std::ceil((lo - 1.0) / step - 1e-9));
    const long i_hi = static_cast<long>(std::floor((hi - 1.0) / step + 1e-9));
    for (long i = i_lo; i <= i_hi; ++i) {
      const double d = std::labs(i) * step;
      row(1.0 + i * step, well_S(1.0 + d, a.mode), inside_strip(d + 0.5) || inside_strip(0.5 - d));
    }
  } else {
    m.parameters["figure"] = "ln xi(x) on the real axis";
    header = "x,ln_xi,rh_tag";
    const auto grid = custom ? uniform_grid(*a.from, *a.to, *a.step) : uniform_grid(-1.0, 3.0, 0.01);
    for (double x : grid) row(x, std::log(xi(Complex(x, 0.0)).real()), false);
  }
  if (custom) {
    m.parameters["from"] = fmt::format("{}", *a.from);
    m.parameters["to"] = fmt::format("{}", *a.to);
    m.parameters["step"] = fmt::format("{}", *a.step);
  }
  emit(m, header, body, a.out, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// constants

int cmd_constants(RhMode mode, const std::optional<std::string>& out_path, std::ostream& out) {
  if (mode == RhMode::outside_strip_only) {
    throw ModeError("every constant involves the closed form inside the critical strip; use "
                    "--rh-mode conditional");
  }
  auto checks = potential_constant_checks();

  const auto w = well_zeros();
  const auto s = [](double x) { return well_S(x); };
  const double s_root1 = find_root(s, 1.55, 1.65, 1e-13).root;
  const double s_root2 = find_root(s, 0.35, 0.45, 1e-13).root;
  checks.push_back({"x1", w.x1, s_root1, 1e-8});
  checks.push_back({"x2", w.x2, s_root2, 1e-8});

  // xi(x1) again, from the Taylor series about 3/2
  const auto table = sieve_primes(100);
  const auto coeffs = compute_coefficients(13, table, 1);
  const double series = std::exp(static_cast<double>(partial_sums(coeffs, w.x1).sums.back()));
  checks.push_back({"xi_at_x1", w.xi_at_x1, series, 1e-10});

  std::string body;
  bool all_ok = true;
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok();
    body += fmt::format("{},{:.12f},{:.12f},{:.3e},{:.0e},{}\n", c.name, c.analytic, c.numeric,
                        c.discrepancy(), c.tolerance, c.ok() ? "ok" : "FAILED");
  }
  Manifest m{"constants", {}, mode_name(mode)};
  emit(m, "name,analytic,numeric,discrepancy,tolerance,status", body, out_path, out);
  return all_ok ? kOk : kCrossCheckFailure;
}

// ---------------------------------------------------------------------------
// taylor

struct TaylorArgs {
  int order = 13;
  std::uint64_t prime_limit = 1'000'000;
  int k_max = 60;
  std::string zeta_part = "analytic";
  std::optional<double> tail_ceiling;
  std::optional<std::string> out;
};

int cmd_taylor(const TaylorArgs& a, std::ostream& out) {
  const auto table = sieve_primes(a.prime_limit);
  TaylorOptions opts;
  opts.source = a.zeta_part == "primes" ? ZetaPartSource::primes : ZetaPartSource::analytic;
  opts.tail_ceiling = a.tail_ceiling;
  opts.threads = worker_count();
  const auto c = compute_coefficients(a.order, table, a.k_max, opts);

  std::string body;
  for (int n = 0; n <= a.order; ++n) body += fmt::format("C_{},{:.20e}\n", n, c.c[n]);
  for (int n = 0; n <= a.order; ++n) {
    body += fmt::format("prime_tail_bound_{},{:.6e}\n", n, c.prime_tail_bound[n]);
  }
  const auto r = rearranged_at_one(c, a.order);
  body += fmt::format("value_at_one,{:.6e}\n", r.value);
  body += fmt::format("slope_at_one,{:.20f}\n", r.slope);
  body += fmt::format("curvature_at_one,{:.20f}\n", r.curvature);
  if (a.order >= 2) {
    const auto li = li_estimate_vs_exact(c);
    body += fmt::format("lambda_one,{:.20f}\n", li.exact);
    body += fmt::format("lambda_one_gap,{:.6e}\n", li.gap);
  }
  body += fmt::format("tail_bound,{:.6e}\n", c.tail_bound());

  Manifest m{"taylor",
             {{"order", fmt::format("{}", a.order)},
              {"prime_limit", fmt::format("{}", a.prime_limit)},
              {"k_max", fmt::format("{}", a.k_max)},
              {"zeta_part", a.zeta_part}},
             "unconditional"};
  if (a.tail_ceiling) m.parameters["tail_ceiling"] = fmt::format("{}", *a.tail_ceiling);
  emit(m, "quantity,value", body, a.out, out);
  return kOk;
}

const std::map<std::string, RhMode> kModes = {{"conditional", RhMode::conditional_rh},
                                              {"outside-only", RhMode::outside_strip_only}};

}  // namespace

std::vector<double> parse_rho_list(const std::vector<std::string>& entries) {
  std::vector<double> rows;
  for (const auto& entry : entries) {
    for (const auto& item : split(entry, ',')) {
      if (item.find(':') == std::string::npos) {
        rows.push_back(parse_number(item));
        continue;
      }
      const auto parts = split(item, ':');
      if (parts.size() != 3) {
        throw DomainError(fmt::format("range '{}' must look like from:to:step", item));
      }
      for (double r : uniform_grid(parse_number(parts[0]), parse_number(parts[1]),
                                   parse_number(parts[2]))) {
        rows.push_back(r);
      }
    }
  }
  if (rows.empty()) throw DomainError("--rho needs at least one value");
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Potential of the Riemann zeta function on vertical lines", "magneton"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MAGNETON_VERSION);

  TableArgs table;
  RhMode table_mode = RhMode::conditional_rh;
  auto* t = app.add_subcommand("table", "phi by quadrature next to the closed form");
  t->add_option("--rho", table.rho, "values, comma lists or from:to:step ranges");
  t->add_option("--t-max", table.t_max, "integration height")->check(CLI::PositiveNumber);
  t->add_option("--tol", table.tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
  t->add_option("--rh-mode", table_mode)->transform(CLI::CheckedTransformer(kModes));
  t->add_option("--out", table.out, "write data here instead of stdout");

  FigureArgs figure;
  auto* f = app.add_subcommand("figure", "plot data for phi, field, well or xi");
  f->add_option("name", figure.name)->required()->check(CLI::IsMember({"phi", "field", "well", "xi"}));
  f->add_option("--from", figure.from);
  f->add_option("--to", figure.to);
  f->add_option("--step", figure.step);
  f->add_option("--one-sided", figure.one_sided, "sample jump points at this offset on each side");
  f->add_option("--rh-mode", figure.mode)->transform(CLI::CheckedTransformer(kModes));
  f->add_option("--out", figure.out);

  RhMode constants_mode = RhMode::conditional_rh;
  std::optional<std::string> constants_out;
  auto* c = app.add_subcommand("constants", "jump constants with their numeric cross-checks");
  c->add_option("--rh-mode", constants_mode)->transform(CLI::CheckedTransformer(kModes));
  c->add_option("--out", constants_out);

  TaylorArgs taylor;
  auto* y = app.add_subcommand("taylor", "Taylor coefficients of ln xi about 3/2");
  y->add_option("--order", taylor.order)->check(CLI::Range(0, 20));
  y->add_option("--prime-limit", taylor.prime_limit)->check(CLI::Range(2.0, 4.0e9));
  y->add_option("--k-max", taylor.k_max)->check(CLI::PositiveNumber);
  y->add_option("--zeta-part", taylor.zeta_part)->check(CLI::IsMember({"analytic", "primes"}));
  y->add_option("--tail-ceiling", taylor.tail_ceiling)->check(CLI::PositiveNumber);
  y->add_option("--out", taylor.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*t) {
      table.mode = table_mode;
      return cmd_table(table, out);
    }
    if (*f) return cmd_figure(figure, out);
    if (*c) return cmd_constants(constants_mode, constants_out, out);
    return cmd_taylor(taylor, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace magneton::cli

#include "coupon_cli/app.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>

#include "coupon/diagnostics.hpp"
#include "coupon/exact.hpp"
#include "coupon/expansion.hpp"
#include "coupon/simulate.hpp"
#include "coupon_cli/table.hpp"

namespace coupon::cli {

namespace {

struct InstanceFlags {
  std::int64_t n = 0;
  std::int64_t m = 0;
  int kmax = 10;
  std::string format = "csv";
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, bool with_kmax = true) {
  cmd->add_option("--n", f.n, "number of coupon types")->required();
  cmd->add_option("--m", f.m, "coupons still missing when collection stops")->required();
  if (with_kmax) cmd->add_option("--kmax", f.kmax, "largest k reported")->capture_default_str();
  cmd->add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

CollectorInstance checked_instance(const InstanceFlags& f) {
  if (f.kmax < 0) throw std::invalid_argument("--kmax must be >= 0");
  return CollectorInstance(f.n, f.m);
}

void add_instance_meta(Table& t, const std::string& command, const CollectorInstance& inst) {
  t.add_meta("command", command);
  t.add_meta("n", std::to_string(inst.n()));
  t.add_meta("m", std::to_string(inst.m()));
}

void emit(std::ostream& out, const std::string& format, const Table& t) {
  if (format == "json")
    write_json(out, t);
  else
    write_csv(out, t);
}

Table pmf_table(const InstanceFlags& f, const std::string& mode_text) {
  const auto inst = checked_instance(f);
  const auto mode = parse_numeric_mode(mode_text);
  const auto K = static_cast<std::size_t>(f.kmax);
  Table t;
  add_instance_meta(t, "pmf", inst);
  t.add_meta("mode", std::string(to_string(mode)));
  if (mode == NumericMode::rational) {
    const auto pmf = exact_pmf_dp_rational(inst, K);
    t.add_meta("tail_mass", to_string(pmf.tail_mass));
    t.columns = {"k", "exact", "exact_float"};
    for (std::size_t k = 0; k <= K; ++k)
      t.rows.push_back({static_cast<std::int64_t>(k), to_string(pmf[k]), to_double(pmf[k])});
  } else {
    const auto pmf = exact_pmf_dp(inst, K, mode);
    t.add_meta("tail_mass", format_double(pmf.tail_mass));
    t.columns = {"k", "exact"};
    if (mode == NumericMode::log_float) t.columns.push_back("log_exact");
    for (std::size_t k = 0; k <= K; ++k) {
      std::vector<Cell> row{static_cast<std::int64_t>(k), pmf[k]};
      if (mode == NumericMode::log_float) row.emplace_back(pmf.log_probs[k]);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table approx_table(const InstanceFlags& f) {
  const auto inst = checked_instance(f);
  Table t;
  add_instance_meta(t, "approx", inst);
  t.add_meta("lambda", format_double(to_double(lambda_moment(inst, 1))));
  t.add_meta("lambda2", format_double(to_double(lambda_moment(inst, 2))));
  t.columns = {"k", "exact", "order0", "order1", "err0", "err1"};
  for (const auto& r : comparison_table(inst, static_cast<std::size_t>(f.kmax)))
    t.rows.push_back({static_cast<std::int64_t>(r.k), *r.exact, r.order0, r.order1, r.err0(), r.err1()});
  return t;
}

Table simulate_table(const InstanceFlags& f, std::uint64_t samples, std::optional<std::uint64_t> seed,
                     unsigned workers, const std::string& method) {
  SimConfig cfg{checked_instance(f), samples, 0, parse_sim_method(method), workers};
  if (seed) {
    cfg.seed = *seed;
  } else {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  const auto e = simulate_waiting_time(cfg);
  Table t;
  add_instance_meta(t, "simulate", cfg.instance);
  t.add_meta("seed", std::to_string(cfg.seed));
  t.add_meta("seed_source", seed ? "flag" : "os-entropy");
  t.add_meta("samples", std::to_string(samples));
  t.add_meta("workers", std::to_string(workers));
  t.add_meta("method", std::string(to_string(cfg.method)));
  t.add_meta("rng", e.rng);
  t.columns = {"k", "count", "p_hat", "se"};
  for (const auto& [k, c] : e.counts) {
    if (k > f.kmax) break;
    t.rows.push_back({static_cast<std::int64_t>(k), static_cast<std::int64_t>(c), e.p_hat(k), e.se(k)});
  }
  std::uint64_t beyond = 0;
  for (const auto& [k, c] : e.counts)
    if (k > f.kmax) beyond += c;
  t.add_meta("count_above_kmax", std::to_string(beyond));
  return t;
}

Table scaling_table(double lambda, const std::vector<std::int64_t>& nlist, int kmax) {
  if (kmax < 0) throw std::invalid_argument("--kmax must be >= 0");
  const auto report = scaling_study(build_schedule(lambda, nlist), static_cast<std::size_t>(kmax));
  Table t;
  t.add_meta("command", "scaling");
  t.add_meta("lambda_target", format_double(lambda));
  t.add_meta("kmax", std::to_string(kmax));
  t.add_meta("schedule", std::string(ScheduleSpec::kRule));
  if (report.slope0) t.add_meta("slope0", format_double(*report.slope0));
  if (report.slope1) t.add_meta("slope1", format_double(*report.slope1));
  t.columns = {"n", "m", "lambda", "lambda2", "e0", "e1"};
  for (const auto& r : report.rows) t.rows.push_back({r.n, r.m, r.lambda, r.lambda2, r.e0, r.e1});
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and approximate distribution of the centered coupon-collector waiting time"};
  app.name("coupon-poisson");
  app.require_subcommand(1);

  InstanceFlags pmf_f, approx_f, sim_f, verify_f;
  std::string mode = "float";
  auto* pmf = app.add_subcommand("pmf", "exact P(W~ = k) for k = 0..kmax");
  add_instance_flags(pmf, pmf_f);
  pmf->add_option("--mode", mode)->check(CLI::IsMember({"rational", "float", "log"}))->capture_default_str();

  auto* approx = app.add_subcommand("approx", "exact pmf against the Poisson approximations");
  add_instance_flags(approx, approx_f);

  std::uint64_t samples = 100000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::string method = "geometric";
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the pmf");
  add_instance_flags(sim, sim_f);
  sim->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--seed", seed, "omit to draw from OS entropy");
  sim->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();
  sim->add_option("--method", method)->check(CLI::IsMember({"draw", "geometric"}))->capture_default_str();

  double lambda = 0.0;
  std::vector<std::int64_t> nlist;
  int scaling_kmax = 25;
  std::string scaling_format = "csv";
  auto* scaling = app.add_subcommand("scaling", "error decay along n - m = round(sqrt(2 lambda n))");
  scaling->add_option("--lambda", lambda)->required();
  scaling->add_option("--nlist", nlist, "comma-separated, increasing")->required()->delimiter(',');
  scaling->add_option("--kmax", scaling_kmax)->capture_default_str();
  scaling->add_option("--format", scaling_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  std::string form = "printed";
  std::string path = "auto";
  auto* verify = app.add_subcommand("verify", "certify the bounds and identities on one instance");
  add_instance_flags(verify, verify_f);
  verify->add_option("--form", form, "which statement of the bounds decides the exit code")
      ->check(CLI::IsMember({"printed", "corrected", "both"}))
      ->capture_default_str();
  verify->add_option("--path", path, "how S_k is computed")
      ->check(CLI::IsMember({"auto", "enumeration", "dp"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (pmf->parsed()) {
      emit(out, pmf_f.format, pmf_table(pmf_f, mode));
    } else if (approx->parsed()) {
      emit(out, approx_f.format, approx_table(approx_f));
    } else if (sim->parsed()) {
      emit(out, sim_f.format, simulate_table(sim_f, samples, seed, workers, method));
    } else if (scaling->parsed()) {
      emit(out, scaling_format, scaling_table(lambda, nlist, scaling_kmax));
    } else if (verify->parsed()) {
      const auto inst = checked_instance(verify_f);
      CertifyOptions opts;
      opts.path = path == "enumeration" ? SumPath::enumeration : path == "dp" ? SumPath::dp : SumPath::automatic;
      const auto report = certify_bounds(inst, static_cast<unsigned>(verify_f.kmax), opts);
      const BoundForm decide = form == "corrected" ? BoundForm::corrected : BoundForm::printed;
      const bool pass = form == "both" ? report.all_hold(BoundForm::printed) && report.all_hold(BoundForm::corrected)
                                       : report.all_hold(decide);
      Table t;
      add_instance_meta(t, "verify", inst);
      t.add_meta("kmax", std::to_string(verify_f.kmax));
      t.add_meta("sum_path", report.sum_path);
      t.add_meta("form", form);
      t.add_meta("result", pass ? "pass" : "fail");
      t.columns = {"name", "detail", "form", "exact", "lhs", "rhs", "margin", "status", "note"};
      for (const auto& c : report.checks)
        t.rows.push_back({c.name, c.detail, std::string(to_string(c.form)), std::int64_t{c.exact}, c.lhs, c.rhs,
                          c.margin(), std::string(to_string(c.status)), c.note});
      emit(out, verify_f.format, t);
      return pass ? kOk : kVerifyFailed;
    }
  } catch (const ResourceCapExceeded& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace coupon::cli

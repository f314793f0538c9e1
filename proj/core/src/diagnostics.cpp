#include "coupon/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coupon/combinatorics.hpp"
#include "coupon/expansion.hpp"

namespace coupon {

std::int64_t schedule_to_collect(double lambda_target, std::int64_t n) {
  return std::llround(std::sqrt(2.0 * lambda_target * static_cast<double>(n)));
}

ScheduleSpec build_schedule(double lambda_target, std::vector<std::int64_t> n_values) {
  if (!(lambda_target > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (n_values.empty()) throw std::invalid_argument("schedule needs at least one n");
  ScheduleSpec spec;
  spec.lambda_target = lambda_target;
  for (std::size_t idx = 0; idx < n_values.size(); ++idx) {
    const std::int64_t n = n_values[idx];
    if (idx > 0 && n <= n_values[idx - 1])
      throw std::invalid_argument("n values must be strictly increasing");
    const std::int64_t r = schedule_to_collect(lambda_target, n);
    if (r > n)
      throw std::invalid_argument("n=" + std::to_string(n) + " too small: m_n would be negative");
    if (r < 2)
      throw std::invalid_argument("n=" + std::to_string(n) + " gives n - m_n = " + std::to_string(r) +
                                  " < 2");
    spec.instances.emplace_back(n, n - r);
  }
  spec.n_values = std::move(n_values);
  return spec;
}

LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("log-log fit needs >= 2 paired points");
  const auto count = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("log-log fit needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  LineFit fit;
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;
  return fit;
}

ScalingReport scaling_study(const ScheduleSpec& spec, std::size_t K) {
  ScalingReport report;
  report.lambda_target = spec.lambda_target;
  report.K = K;
  for (const auto& instance : spec.instances) {
    ScalingRow row;
    row.n = instance.n();
    row.m = instance.m();
    row.lambda = to_double(lambda_moment(instance, 1));
    row.lambda2 = to_double(lambda_moment(instance, 2));
    for (const auto& r : comparison_table(instance, K)) {
      row.e0 = std::max(row.e0, std::abs(r.err0()));
      row.e1 = std::max(row.e1, std::abs(r.err1()));
    }
    report.rows.push_back(row);
  }
  if (report.rows.size() >= 3) {
    std::vector<double> ns, e0, e1;
    for (const auto& row : report.rows) {
      ns.push_back(static_cast<double>(row.n));
      e0.push_back(row.e0);
      e1.push_back(row.e1);
    }
    report.slope0 = fit_loglog(ns, e0).slope;
    report.slope1 = fit_loglog(ns, e1).slope;
  }
  return report;
}

double lambda_convergence_constant(const ScheduleSpec& spec) {
  double c = 0.0;
  for (const auto& instance : spec.instances) {
    const double n = static_cast<double>(instance.n());
    const double lambda = to_double(lambda_moment(instance, 1));
    c = std::max(c, std::abs(lambda - spec.lambda_target) * std::sqrt(n));
  }
  return c;
}

double lambda2_asymptotic_constant(const ScheduleSpec& spec) {
  double c = 0.0;
  for (const auto& instance : spec.instances) {
    const double n = static_cast<double>(instance.n());
    const double lambda = to_double(lambda_moment(instance, 1));
    const double lambda2 = to_double(lambda_moment(instance, 2));
    const double leading = std::pow(2.0 * lambda, 1.5) / (3.0 * std::sqrt(n));
    c = std::max(c, std::abs(lambda2 - leading) * n);
  }
  return c;
}

double total_variation_to_poisson(const Pmf& pmf, double mean) {
  double l1 = 0.0, poisson_mass = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    const double pk = poisson_order0(mean, static_cast<int>(k));
    poisson_mass += pk;
    l1 += std::abs(pmf[k] - pk);
  }
  const double poisson_tail = std::max(0.0, 1.0 - poisson_mass);
  return 0.5 * (l1 + std::abs(pmf.tail_mass - poisson_tail));
}

// ---------------------------------------------------------------------------

std::string_view to_string(BoundForm form) {
  switch (form) {
    case BoundForm::both:
      return "both";
    case BoundForm::printed:
      return "printed";
    case BoundForm::corrected:
      return "corrected";
  }
  return "?";
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::violated:
      return "violated";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

namespace {

bool in_form(const BoundCheck& c, BoundForm form) {
  return c.form == BoundForm::both || c.form == form;
}

class CheckList {
 public:
  CheckList(std::vector<BoundCheck>& out, double rtol) : out_(out), rtol_(rtol) {}

  // 0 <= lhs and lhs^2 <= rhs_squared, decided exactly.
  void le_sqrt(std::string name, std::string detail, BoundForm form, const Rational& lhs,
               const Rational& rhs_squared) {
    BoundCheck c = base(std::move(name), std::move(detail), form, true);
    c.lhs = to_double(lhs);
    c.rhs = std::sqrt(to_double(rhs_squared));
    c.status = lhs >= 0 && lhs * lhs <= rhs_squared ? CheckStatus::holds : CheckStatus::violated;
    out_.push_back(std::move(c));
  }

  void le(std::string name, std::string detail, BoundForm form, const Rational& lhs,
          const Rational& rhs) {
    BoundCheck c = base(std::move(name), std::move(detail), form, true);
    c.lhs = to_double(lhs);
    c.rhs = to_double(rhs);
    c.status = lhs <= rhs ? CheckStatus::holds : CheckStatus::violated;
    out_.push_back(std::move(c));
  }

  void equal(std::string name, std::string detail, const Rational& lhs, const Rational& rhs) {
    BoundCheck c = base(std::move(name), std::move(detail), BoundForm::both, true);
    c.lhs = to_double(lhs);
    c.rhs = to_double(rhs);
    c.status = lhs == rhs ? CheckStatus::holds : CheckStatus::violated;
    c.note = "identity";
    out_.push_back(std::move(c));
  }

  void le_float(std::string name, std::string detail, BoundForm form, double lhs, double rhs) {
    BoundCheck c = base(std::move(name), std::move(detail), form, false);
    c.lhs = lhs;
    c.rhs = rhs;
    c.status = lhs <= rhs + rtol_ * std::abs(rhs) ? CheckStatus::holds : CheckStatus::violated;
    out_.push_back(std::move(c));
  }

  void skip(std::string name, std::string detail, BoundForm form, std::string note) {
    BoundCheck c = base(std::move(name), std::move(detail), form, false);
    c.status = CheckStatus::skipped;
    c.note = std::move(note);
    out_.push_back(std::move(c));
  }

 private:
  static BoundCheck base(std::string name, std::string detail, BoundForm form, bool exact) {
    BoundCheck c;
    c.name = std::move(name);
    c.detail = std::move(detail);
    c.form = form;
    c.exact = exact;
    return c;
  }

  std::vector<BoundCheck>& out_;
  double rtol_;
};

Rational min_one(const Rational& x) { return x < 1 ? x : Rational(1); }
Rational max_one(const Rational& x) { return x > 1 ? x : Rational(1); }
Rational fact(unsigned k) { return Rational(factorial(k)); }

std::string kl(unsigned k, unsigned l) {
  return "k=" + std::to_string(k) + " l=" + std::to_string(l);
}

}  // namespace

bool CertificationReport::all_hold(BoundForm form) const {
  return std::none_of(checks.begin(), checks.end(), [form](const BoundCheck& c) {
    return in_form(c, form) && c.status == CheckStatus::violated;
  });
}

std::size_t CertificationReport::count(CheckStatus status, BoundForm form) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const BoundCheck& c) {
    return in_form(c, form) && c.status == status;
  }));
}

CertificationReport certify_bounds(const CollectorInstance& instance, unsigned k_max,
                                   const CertifyOptions& options) {
  CertificationReport report{instance, k_max, "none", {}};
  CheckList checks(report.checks, options.rtol);

  const Rational n_q = Rational(static_cast<long>(instance.n()));
  const double n_d = static_cast<double>(instance.n());
  const auto moments = moment_vector(instance, std::max(2u, options.max_moment_order));
  const Rational& lambda = moments[1];
  const Rational two_lambda = 2 * lambda;
  const double lambda_d = to_double(lambda);
  const std::int64_t r = instance.to_collect();

  // Moment bounds: lambda_{n,j} <= lambda (2 lambda / n)^{(j-1)/2}.
  for (unsigned j = 2; j <= moments.max_order(); ++j)
    checks.le_sqrt("moment_decay", "j=" + std::to_string(j), BoundForm::both, moments[j],
                   lambda * lambda * pow(two_lambda / n_q, j - 1));

  // (n - m - 1)/sqrt(n) <= sqrt(2 lambda).
  {
    const Rational lhs_sq = Rational(BigInt(static_cast<long>((r - 1) * (r - 1)))) / n_q;
    BoundCheck c;
    c.name = "stage_count";
    c.exact = true;
    c.lhs = std::sqrt(to_double(lhs_sq));
    c.rhs = std::sqrt(to_double(two_lambda));
    c.status = lhs_sq <= two_lambda ? CheckStatus::holds : CheckStatus::violated;
    report.checks.push_back(c);
  }

  // Composition sums for k <= k_max.
  std::vector<SumDecomposition> sums;
  BigInt enum_size = 0;
  for (unsigned k = 0; k <= k_max; ++k) enum_size += composition_count(k, static_cast<std::size_t>(r - 1));
  bool use_enumeration = options.path == SumPath::enumeration ||
                         (options.path == SumPath::automatic &&
                          enum_size <= BigInt(std::to_string(options.enumeration_budget)));
  try {
    if (use_enumeration) {
      for (unsigned k = 0; k <= k_max; ++k) sums.push_back(sum_S(instance, k));
      report.sum_path = "enumeration";
    }
  } catch (const ResourceCapExceeded&) {
    if (options.path == SumPath::enumeration) throw;
    sums.clear();
    use_enumeration = false;
  }
  if (sums.empty() && options.path != SumPath::enumeration) {
    sums = sum_S_dp(instance, k_max);
    report.sum_path = "dp";
  }

  for (unsigned k = 1; k <= k_max; ++k) {
    const std::string kd = "k=" + std::to_string(k);
    if (static_cast<std::int64_t>(k) >= r) {
      checks.skip("sums", kd, BoundForm::both, "k >= n - m");
      continue;
    }
    if (sums.empty()) {
      checks.skip("sums", kd, BoundForm::both, "skipped (scale)");
      continue;
    }
    const SumDecomposition& d = sums[k];

    // S_{k,l} <= ((k-1)!/(l!(l-1)!)) (2 lambda)^{(k+l)/2} n^{-(k-l)/2}
    for (unsigned l = 1; l <= k; ++l) {
      const Rational c = fact(k - 1) / (fact(l) * fact(l - 1));
      checks.le_sqrt("s_kl_bound", kl(k, l), BoundForm::both, d.S(l),
                     c * c * pow(two_lambda, k + l) / pow(n_q, k - l));
    }
    // sum_{l <= l'} S_{k,l} <= k! {min|max}{1, (2 lambda)^k} n^{-(k-l')/2}
    {
      Rational partial = 0;
      const Rational printed = fact(k) * min_one(pow(two_lambda, k));
      const Rational corrected = fact(k) * max_one(pow(two_lambda, k));
      for (unsigned lp = 1; lp <= k; ++lp) {
        partial += d.S(lp);
        const Rational scale = pow(n_q, k - lp);
        checks.le_sqrt("s_cumulative_bound", "k=" + std::to_string(k) + " l'=" + std::to_string(lp),
                       BoundForm::printed, partial, printed * printed / scale);
        checks.le_sqrt("s_cumulative_bound", "k=" + std::to_string(k) + " l'=" + std::to_string(lp),
                       BoundForm::corrected, partial, corrected * corrected / scale);
      }
    }

    // The multinomial identity for S_{k,k}.
    {
      Rational rhs = pow(lambda, k) / fact(k);
      for (unsigned l = 1; l < k; ++l) rhs -= d.weighted(l);
      checks.equal("s_kk_identity", kd, d.S(k), rhs);
    }

    if (k < 2) continue;

    // Remainders over l <= k-2.
    Rational s_low = 0, r_low = 0;
    for (unsigned l = 1; l + 2 <= k; ++l) {
      s_low += d.S(l);
      r_low += d.R(l);
    }
    const Rational rhs_low_printed = fact(k) * min_one(pow(two_lambda, k)) / n_q;
    const Rational rhs_low_corrected = fact(k) * max_one(pow(two_lambda, k)) / n_q;
    if (k >= 3) {
      checks.le("low_order_bound", kd + " R<=S", BoundForm::both, r_low, s_low);
      checks.le("low_order_bound", kd + " R", BoundForm::printed, r_low, rhs_low_printed);
      checks.le("low_order_bound", kd + " S", BoundForm::printed, s_low, rhs_low_printed);
      checks.le("low_order_bound", kd + " R", BoundForm::corrected, r_low, rhs_low_corrected);
      checks.le("low_order_bound", kd + " S", BoundForm::corrected, s_low, rhs_low_corrected);
    }

    const RemainderSplit split =
        use_enumeration ? remainder_split(instance, k) : remainder_split_dp(instance, k);
    checks.equal("remainder_split", kd, split.r_kk1, split.leading - split.r1 - split.r2);

    // R^1 <= lambda^{3/2} (k-2)! {min|max}{1,(2 lambda)^{k-2}} / (sqrt(2) n)
    const Rational m_r1_printed = min_one(pow(two_lambda, k - 2));
    const Rational m_r1_corrected = max_one(pow(two_lambda, k - 2));
    const auto rhs_r1_sq = [&](const Rational& mm) -> Rational {
      const Rational f = fact(k - 2) * mm;
      return pow(lambda, 3) * f * f / (2 * n_q * n_q);
    };
    checks.le_sqrt("r1_bound", kd, BoundForm::printed, split.r1, rhs_r1_sq(m_r1_printed));
    checks.le_sqrt("r1_bound", kd, BoundForm::corrected, split.r1, rhs_r1_sq(m_r1_corrected));

    // R^2 <= 2^{k-2} lambda^k / ((k-2)! n), and the corrected
    // R^2 <= lambda^{k-1} / ((k-3)! n) (k >= 3), R^2 = 0 (k = 2).
    const Rational rhs_r2_printed =
        Rational(pow(BigInt(2), k - 2)) * pow(lambda, k) / (fact(k - 2) * n_q);
    const Rational rhs_r2_corrected = k == 2 ? Rational(0) : pow(lambda, k - 1) / (fact(k - 3) * n_q);
    checks.le("r2_bound", kd + " lower", BoundForm::both, Rational(0), split.r2);
    checks.le("r2_bound", kd, BoundForm::printed, split.r2, rhs_r2_printed);
    checks.le("r2_bound", kd, BoundForm::corrected, split.r2, rhs_r2_corrected);

    // First-order form of S_k: the residual is controlled by the three bounds above.
    const Rational residual = d.total - pow(lambda, k) / fact(k) - split.leading;
    const double resid_abs = std::abs(to_double(residual));
    const double rhs_resid_printed = (k >= 3 ? to_double(rhs_low_printed) : 0.0) +
                                 std::sqrt(to_double(rhs_r1_sq(m_r1_printed))) + to_double(rhs_r2_printed);
    const double rhs_resid_corrected = (k >= 3 ? to_double(rhs_low_corrected) : 0.0) +
                                   std::sqrt(to_double(rhs_r1_sq(m_r1_corrected))) +
                                   to_double(rhs_r2_corrected);
    checks.le_float("first_order_residual", kd, BoundForm::printed, resid_abs, rhs_resid_printed);
    checks.le_float("first_order_residual", kd, BoundForm::corrected, resid_abs, rhs_resid_corrected);
  }

  // Tail of the moment series and the product-vs-exponential residual.
  const bool applicable = tail_bound_applicable(lambda_d, n_d);
  for (unsigned j0 : {2u, 3u}) {
    const std::string jd = "j0=" + std::to_string(j0);
    if (!applicable) {
      checks.skip("moment_tail", jd, BoundForm::both, "sqrt(2 lambda/n) >= 1/2");
      continue;
    }
    checks.le_float("moment_tail", jd, BoundForm::both, moment_tail_sum(instance, j0),
                    moment_tail_bound(lambda_d, n_d, j0));
  }
  if (!applicable) {
    checks.skip("product_residual", "", BoundForm::both, "sqrt(2 lambda/n) >= 1/2");
  } else {
    const ProductGap gap = product_exponential_gap(instance);
    checks.le_float("product_residual", "", BoundForm::both, std::abs(gap.residual),
                    product_residual_bound(lambda_d, n_d));
  }
  return report;
}

}  // namespace coupon

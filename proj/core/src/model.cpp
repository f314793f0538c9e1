#include "coupon/model.hpp"

#include <stdexcept>
#include <string>

namespace coupon {

CollectorInstance::CollectorInstance(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 1)
    throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  if (m < 0 || m > n - 1)
    throw std::invalid_argument("m must lie in [0, n-1], got m=" + std::to_string(m) +
                                " for n=" + std::to_string(n));
}

Rational CollectorInstance::failure(std::int64_t i) const {
  Rational q(n_ - i, n_);
  q.canonicalize();
  return q;
}

std::vector<GeometricTerm> geometric_terms(const CollectorInstance& instance) {
  std::vector<GeometricTerm> terms;
  terms.reserve(static_cast<std::size_t>(instance.to_collect()));
  for (std::int64_t i = instance.m() + 1; i <= instance.n(); ++i) {
    Rational p(i, instance.n());
    p.canonicalize();
    terms.push_back({i, p, instance.failure(i)});
  }
  return terms;
}

Rational lambda_moment(const CollectorInstance& instance, unsigned j) {
  if (j == 0) throw std::invalid_argument("moment order j must be >= 1");
  // Accumulate sum (n-i)^j over the integers, divide by n^j once.
  BigInt acc = 0;
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i)
    acc += pow(BigInt(static_cast<long>(instance.n() - i)), j);
  Rational out(acc, pow(BigInt(static_cast<long>(instance.n())), j));
  out.canonicalize();
  return out;
}

Rational lambda_closed_form(const CollectorInstance& instance) {
  const BigInt r = static_cast<long>(instance.to_collect());
  Rational out(r * (r - 1), 2 * BigInt(static_cast<long>(instance.n())));
  out.canonicalize();
  return out;
}

Rational lambda2_closed_form(const CollectorInstance& instance) {
  // (r)(r-1)(r-1/2)/(3n^2) = r(r-1)(2r-1)/(6n^2)
  const BigInt r = static_cast<long>(instance.to_collect());
  const BigInt n = static_cast<long>(instance.n());
  Rational out(r * (r - 1) * (2 * r - 1), 6 * n * n);
  out.canonicalize();
  return out;
}

MomentVector moment_vector(const CollectorInstance& instance, unsigned max_order) {
  if (max_order == 0) throw std::invalid_argument("max moment order must be >= 1");
  MomentVector mv{instance, {}, {}};
  mv.values.reserve(max_order);
  for (unsigned j = 1; j <= max_order; ++j) {
    mv.values.push_back(lambda_moment(instance, j));
    mv.values_d.push_back(to_double(mv.values.back()));
  }
  return mv;
}

}  // namespace coupon

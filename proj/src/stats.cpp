#include "fundcast/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace fundcast::stats {

Moments moments(std::span<const double> values) {
  Moments m;
  m.n = values.size();
  if (m.n == 0) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(m.n);
  double sq = 0.0;
  for (double v : values) sq += (v - m.mean) * (v - m.mean);
  m.stddev = std::sqrt(sq / static_cast<double>(m.n));
  return m;
}

double sample_stddev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const Moments m = moments(values);
  const double n = static_cast<double>(values.size());
  return m.stddev * std::sqrt(n / (n - 1.0));
}

namespace {

double ln_gamma(double x) { return std::lgamma(x); }

// Lentz continued fraction for the incomplete beta function.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) return 1.0;
  const double x = df / (df + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("pearson: need at least 3 points");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("pearson: zero variance");

  PearsonResult out;
  out.r = sxy / std::sqrt(sxx * syy);
  if (out.r > 1.0) out.r = 1.0;
  if (out.r < -1.0) out.r = -1.0;

  const double df = static_cast<double>(n - 2);
  const double denom = 1.0 - out.r * out.r;
  if (denom <= 0.0) {
    out.p_value = 0.0;
  } else {
    const double t = out.r * std::sqrt(df / denom);
    out.p_value = student_t_two_sided_p(t, df);
  }
  return out;
}

TwoSampleTest welch_t_test(std::span<const double> a,
                           std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw std::invalid_argument("welch_t_test: need at least 2 per sample");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = moments(a).mean;
  const double mb = moments(b).mean;
  double va = 0.0, vb = 0.0;
  for (double v : a) va += (v - ma) * (v - ma);
  for (double v : b) vb += (v - mb) * (v - mb);
  va /= na - 1.0;
  vb /= nb - 1.0;
  const double se2 = va / na + vb / nb;
  if (se2 == 0.0) throw std::invalid_argument("welch_t_test: zero variance");
  TwoSampleTest out;
  out.statistic = (ma - mb) / std::sqrt(se2);
  const double df = se2 * se2 /
                    (va * va / (na * na * (na - 1.0)) +
                     vb * vb / (nb * nb * (nb - 1.0)));
  out.p_value = student_t_two_sided_p(out.statistic, df);
  return out;
}

TwoSampleTest two_proportion_z_test(std::size_t k1, std::size_t n1,
                                    std::size_t k2, std::size_t n2) {
  if (n1 == 0 || n2 == 0)
    throw std::invalid_argument("two_proportion_z_test: empty group");
  const double p1 = static_cast<double>(k1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(k2) / static_cast<double>(n2);
  const double pooled =
      static_cast<double>(k1 + k2) / static_cast<double>(n1 + n2);
  const double se = std::sqrt(pooled * (1.0 - pooled) *
                              (1.0 / static_cast<double>(n1) +
                               1.0 / static_cast<double>(n2)));
  TwoSampleTest out;
  if (se == 0.0) {
    out.statistic = 0.0;
    out.p_value = 1.0;
    return out;
  }
  out.statistic = (p1 - p2) / se;
  out.p_value = std::erfc(std::fabs(out.statistic) / std::sqrt(2.0));
  return out;
}

}  // namespace fundcast::stats

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fundcast::stats {

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;  // population (divide by n)
  std::size_t n = 0;
};

Moments moments(std::span<const double> values);

// Sample standard deviation (divide by n-1); 0 when n < 2.
double sample_stddev(std::span<const double> values);

struct PearsonResult {
  double r = 0.0;
  double p_value = 1.0;  // two-sided, t-distribution with n-2 dof
};

// Product-moment correlation. Throws std::invalid_argument on length
// mismatch, n < 3, or zero variance in either input.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b). Continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

// Two-sided p-value for a Student-t statistic with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

struct TwoSampleTest {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Welch's unequal-variance t-test on two samples (two-sided).
TwoSampleTest welch_t_test(std::span<const double> a, std::span<const double> b);

// Pooled two-proportion z-test: k1 successes of n1 vs k2 of n2 (two-sided).
TwoSampleTest two_proportion_z_test(std::size_t k1, std::size_t n1,
                                    std::size_t k2, std::size_t n2);

}  // namespace fundcast::stats

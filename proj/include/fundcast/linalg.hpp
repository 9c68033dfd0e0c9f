#pragma once

#include <cstddef>
#include <vector>

namespace fundcast::linalg {

// Dense symmetric positive-definite solve via Cholesky, row-major a (n x n).
// Returns false when a pivot drops below tol (matrix not PD / rank
// deficient); a and b are clobbered either way.
bool cholesky_solve(std::vector<double>& a, std::vector<double>& b,
                    std::size_t n, double tol = 0.0);

}  // namespace fundcast::linalg

#pragma once

// 1-D adaptive Simpson quadrature, used for reference values of the limit
// checks. Deliberately separate from the Monte Carlo path it corroborates.

#include <functional>

namespace pairsing {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

}  // namespace pairsing

#pragma once

#include <functional>
#include <vector>

namespace swishart {

// Gauss-Legendre rule on [-1, 1] (Newton iteration on the Legendre
// recurrence from Chebyshev initial guesses).
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int n);

// Classic adaptive Simpson with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 40);

}  // namespace swishart

#include "swishart/capacity.hpp"

#include <cmath>
#include <sstream>

#include "swishart/quadrature.hpp"

namespace swishart {

double miso_capacity(const CapacityQuery& query) {
    validate_spec(query.spec);
    if (query.spec.beta != 2)
        throw std::invalid_argument("miso_capacity: spec.beta must be 2");
    if (query.spec.n != 1) throw std::invalid_argument("miso_capacity: spec.n must be 1");
    if (!(query.rho >= 0.0)) throw std::invalid_argument("miso_capacity: rho must be >= 0");
    if (query.rho == 0.0) return 0.0;

    const LargestEigenvalueDist dist(query.spec, query.budget);

    double x_max;
    try {
        x_max = dist.quantile(1.0 - query.quadrature.tail_mass);
    } catch (const ConvergenceError& e) {
        std::ostringstream msg;
        msg << "miso_capacity: tail cutoff 1 - " << query.quadrature.tail_mass
            << " unreachable within budget (" << e.what() << ")";
        throw ConvergenceError(msg.str());
    }

    const double m = query.spec.m;
    const double rho = query.rho;
    auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        return std::log2(1.0 + rho * x / m) * dist.pdf(x).value;
    };

    double prev = 0.0;
    bool have_prev = false;
    for (int n = query.quadrature.initial_nodes; n <= query.quadrature.max_nodes; n *= 2) {
        const double est = integrate_gauss_legendre(integrand, 0.0, x_max, n);
        if (have_prev && std::abs(est - prev) < query.quadrature.tol) return est;
        prev = est;
        have_prev = true;
    }
    throw ConvergenceError("miso_capacity: quadrature did not settle within the node limit");
}

}  // namespace swishart

#pragma once

#include "swishart/eigendist.hpp"

namespace swishart {

struct QuadraturePolicy {
    int initial_nodes = 64;
    int max_nodes = 8192;
    double tail_mass = 1e-8;  // upper cutoff x_max has cdf(x_max) >= 1 - tail_mass
    double tol = 1e-6;        // stop doubling nodes once estimates agree this closely
};

// MISO channel capacity query: beta = 2, n = 1 (single output), rho is the
// linear-scale signal-to-noise ratio.
struct CapacityQuery {
    double rho = 0.0;
    WishartSpec spec;
    TruncationBudget budget;
    QuadraturePolicy quadrature;
};

// C1 = integral_0^inf log2(1 + rho l / m) f(l) dl in bits per channel use,
// by Gauss-Legendre on [0, x_max] with node doubling. Throws
// ConvergenceError if the tail cutoff is unreachable within the budget or
// the node limit is hit. rho = 0 returns 0 exactly.
double miso_capacity(const CapacityQuery& query);

// bits -> nats conversion factor is ln 2.
inline double bits_to_nats(double bits) { return bits * 0.69314718055994530942; }

}  // namespace swishart

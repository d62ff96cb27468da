#pragma once

#include <vector>

#include "swishart/errors.hpp"
#include "swishart/jack.hpp"
#include "swishart/partition.hpp"

namespace swishart {

struct HypergeomParams {
    std::vector<double> upper;  // alpha_1..alpha_p
    std::vector<double> lower;  // beta_1..beta_q
    int beta = 1;
};

struct TruncationBudget {
    int max_degree = 60;       // K: include partitions of total weight <= K
    double layer_tol = 1e-12;  // early stop once two consecutive degree layers
                               // fall below this relative magnitude
};

struct SeriesValue {
    double value = 0.0;    // sign * exp(log_abs); inf if out of double range
    double log_abs = 0.0;  // stable representation for downstream prefactors
    int sign = 0;
    int degrees_used = 0;
    double last_layer_ratio = 0.0;  // |last degree layer| / |value|
    bool converged = false;
};

// Truncated hypergeometric function of two matrix arguments of different
// dimensions (m >= n):
//   sum_{k<=K} sum_{kappa in P^k_n} [prod (a_i)^b_kappa / prod (b_j)^b_kappa]
//     * C_kappa(A) C_kappa(B) / (k! C_kappa(I_m)).
// Degree layers are summed ascending in k, each layer in the deterministic
// reverse-lexicographic partition order with compensated accumulation.
// A == I_m delegates to hyper_one_matrix over B, making the reduction
// identity exact term by term.
// Throws std::invalid_argument for m < n, dimension mismatches, or a lower
// parameter that would hit a Pochhammer zero within the budget.
SeriesValue hyper_hetero(const HypergeomParams& params, int m, int n,
                         const EigenSpectrum& A, const EigenSpectrum& B,
                         const TruncationBudget& budget);

// One-matrix variant (second argument I_m); partitions range over P^k_m.
SeriesValue hyper_one_matrix(const HypergeomParams& params, int m,
                             const EigenSpectrum& X, const TruncationBudget& budget);

// beta-Kummer relation  1F1(a;c;-X) = etr(-X) 1F1(c-a;c;X).
// Given the left-hand side's (a, c, X), returns the parameters of the
// equivalent series whose terms are all positive when X >= 0.
struct KummerTransformed {
    double a_prime;        // c - a
    double c_prime;        // c
    EigenSpectrum argument;  // +X
    double log_prefactor;  // log etr(-X) = -sum x_i
};
KummerTransformed kummer_transform(double a, double c, const EigenSpectrum& X,
                                   int m, int beta);

// Evaluates 1F1(a;c;-X) through the transform above.
SeriesValue kummer_series_1f1(double a, double c, const EigenSpectrum& X, int m,
                              int beta, const TruncationBudget& budget);

}  // namespace swishart

#pragma once

#include <vector>

#include "swishart/errors.hpp"
#include "swishart/hypergeom.hpp"

namespace swishart {

// Singular beta-Wishart ensemble W = X X* with X an m x n beta-Gaussian
// matrix, m > n. sigma_eigs are the eigenvalues of the m x m scale matrix
// Sigma, sorted descending, all positive.
struct WishartSpec {
    int beta = 1;
    int m = 0;
    int n = 0;
    std::vector<double> sigma_eigs;
};

// Throws std::invalid_argument unless beta in {1,2,4}, m > n >= 1, and
// sigma_eigs has m positive entries sorted descending.
void validate_spec(const WishartSpec& spec);

struct DistValue {
    double value = 0.0;   // probability or density, raw (presentation clamps)
    SeriesValue series;   // truncation provenance of the underlying series
};

// log of the beta-multivariate gamma function
//   Gamma^beta_n(c) = pi^{n(n-1)beta/4} prod_i Gamma(c - (i-1)beta/2),
// valid for c > (n-1)beta/2 (rejected otherwise).
double log_multigamma_beta(double c, int n, int beta);

// Distribution of the largest eigenvalue l1 of W.
//
// The distribution function is
//   Pr(l1 < x) = Gamma^b_n{(n-1)b/2+1} (x b/2)^{b n m/2} /
//                (Gamma^b_n{(n+m-1)b/2+1} |Sigma|^{n b/2})
//                * 1F1^{(b;m,n)}(m b/2; (n+m-1)b/2+1; -(b/2) x Sigma^{-1}, I_n),
// always evaluated through the Kummer-transformed all-positive form
//   etr(-(b x/2) Sigma^{-1}) 1F1^{(b;m)}((m-1)b/2+1; (n+m-1)b/2+1; (b/2) x Sigma^{-1}),
// never the alternating form, which cancels catastrophically at large x.
// When all Sigma eigenvalues are equal the series collapses to dimension n
// (the two-matrix function with an identity first argument), with
// C_kappa(I_n) in closed form.
//
// Since the series argument is x times a fixed spectrum, each degree layer
// is x^k times a constant; the constants are computed once per
// (spec, budget) in the constructor, so cdf/pdf evaluations cost O(K) and
// quantile searches reuse the same Jack table.
class LargestEigenvalueDist {
public:
    LargestEigenvalueDist(WishartSpec spec, TruncationBudget budget);

    DistValue cdf(double x) const;
    DistValue pdf(double x) const;

    // x with |cdf(x) - alpha| <= 1e-6 by bracketing + bisection; throws
    // ConvergenceError when the truncated CDF peaks below alpha.
    double quantile(double alpha) const;

    // Maximum of the truncated distribution function over x > 0 (the
    // truncation makes it decay after its peak).
    struct SupResult {
        double x = 0.0;
        double probability = 0.0;
    };
    SupResult max_probability() const;

    const WishartSpec& spec() const { return spec_; }
    const TruncationBudget& budget() const { return budget_; }

private:
    SeriesValue series_at(double x, bool derivative) const;

    WishartSpec spec_;
    TruncationBudget budget_;
    std::vector<double> log_layer_;  // log of the degree-k layer coefficient
    double arg_scale_ = 0.0;         // series power base is x * arg_scale_
    double exp_rate_ = 0.0;          // exponential prefactor rate
    double log_pre_ = 0.0;           // x-free part of the log prefactor
    double x_power_ = 0.0;           // prefactor x exponent, beta*n*m/2
};

DistValue cdf_largest(double x, const WishartSpec& spec, const TruncationBudget& budget);
DistValue pdf_largest(double x, const WishartSpec& spec, const TruncationBudget& budget);
double quantile_largest(double alpha, const WishartSpec& spec, const TruncationBudget& budget);

// Joint density of the n nonzero eigenvalues (l1 > l2 > ... > ln > 0):
//   const(beta, m, n, Sigma) * det(L1)^{beta(m-n+1)/2-1} *
//   prod_{i<j}(li - lj)^beta * 0F0^{(beta;m,n)}(-(beta/2)Sigma^{-1}, L1),
// with the constant's pi exponent n^2 beta/2 + r, r = 0 for beta=1 and
// r = -beta n/2 for beta in {2,4}.
DistValue joint_density(const std::vector<double>& ells, const WishartSpec& spec,
                        const TruncationBudget& budget);

// Density of l1 for W ~ W_2(1, diag(lambda1, lambda2)), lambda1 >= lambda2:
//   f(l1) = exp(-l1/(2 lambda1)) / (2 sqrt(lambda1 lambda2))
//           * 1F1(1/2; 1; -(1/2) l1 (1/lambda2 - 1/lambda1)),
// the 1F1 evaluated by the Kummer-transformed scalar series.
double pdf_m2_nonnull(double ell1, double lambda1, double lambda2);

}  // namespace swishart

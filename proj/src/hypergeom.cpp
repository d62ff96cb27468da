#include "swishart/hypergeom.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

#include "swishart/signed_log.hpp"

namespace swishart {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_common(const HypergeomParams& params, const TruncationBudget& budget) {
    if (params.beta != 1 && params.beta != 2 && params.beta != 4)
        throw std::invalid_argument("hypergeom: beta must be 1, 2 or 4");
    if (budget.max_degree < 0)
        throw std::invalid_argument("hypergeom: max_degree must be >= 0");
    if (budget.layer_tol < 0)
        throw std::invalid_argument("hypergeom: layer_tol must be >= 0");
}

// A lower parameter b is a pole if some row i <= t can reach a factor
// (b - (i-1)beta/2 + j) == 0 for a partition inside the budget; row i of a
// weight-<=K partition has at most floor(K/i) boxes.
void check_lower_poles(const HypergeomParams& params, int t, const TruncationBudget& budget) {
    for (double b : params.lower) {
        for (int i = 1; i <= t; ++i) {
            const double z = b - (i - 1) * params.beta / 2.0;
            const double zr = std::round(z);
            if (std::abs(z - zr) > 1e-9 || zr > 0.0) continue;
            const int max_row = budget.max_degree / i;
            if (max_row >= 1 - static_cast<int>(zr))
                throw std::invalid_argument(
                    "hypergeom: lower parameter hits a Pochhammer zero within the budget");
        }
    }
}

// Shared series driver: sums layers k = 0..K of terms produced by
// term(kappa), stopping early after two consecutive negligible layers.
SeriesValue sum_layers(int t, const TruncationBudget& budget,
                       const std::function<SignedLog(const Partition&)>& term) {
    SignedLogAccumulator total;
    SeriesValue out;
    double prev_ratio = kInf;
    for (int k = 0; k <= budget.max_degree; ++k) {
        SignedLogAccumulator layer_acc;
        for (const Partition& kappa : enumerate_partitions(k, t)) layer_acc.add(term(kappa));
        const SignedLog layer = layer_acc.total();
        total.add(layer);
        out.degrees_used = k;

        const SignedLog tot = total.total();
        double ratio;
        if (layer.sign == 0)
            ratio = 0.0;
        else if (tot.sign == 0)
            ratio = kInf;
        else
            ratio = std::exp(layer.log_abs - tot.log_abs);
        out.last_layer_ratio = ratio;
        if (k >= 1 && ratio <= budget.layer_tol && prev_ratio <= budget.layer_tol) {
            out.converged = true;
            break;
        }
        prev_ratio = ratio;
    }

    const SignedLog tot = total.total();
    out.log_abs = tot.log_abs;
    out.sign = tot.sign;
    out.value = tot.sign * std::exp(tot.log_abs);
    return out;
}

SignedLog pochhammer_ratio_log(const HypergeomParams& params, const Partition& kappa) {
    SignedLog r = SignedLog::one();
    for (double a : params.upper) r = r * pochhammer_beta_log(a, kappa, params.beta);
    for (double b : params.lower) {
        const SignedLog p = pochhammer_beta_log(b, kappa, params.beta);
        // poles rejected up front; p.sign == 0 cannot happen here
        r = r * SignedLog{-p.log_abs, p.sign};
    }
    return r;
}

bool is_identity(const EigenSpectrum& x) {
    for (double v : x.values)
        if (v != 1.0) return false;
    return true;
}

}  // namespace

SeriesValue hyper_one_matrix(const HypergeomParams& params, int m, const EigenSpectrum& X,
                             const TruncationBudget& budget) {
    validate_common(params, budget);
    if (m < 1) throw std::invalid_argument("hyper_one_matrix: m must be >= 1");
    if (X.dimension() != m)
        throw std::invalid_argument("hyper_one_matrix: X must have dimension m");
    check_lower_poles(params, m, budget);

    JackEvaluator ev(X, params.beta);
    const double log_scale = ev.log_scale();

    auto term = [&](const Partition& kappa) -> SignedLog {
        const SignedLog ratio = pochhammer_ratio_log(params, kappa);
        if (ratio.sign == 0) return SignedLog::zero();
        const double c = ev.scaled_value(kappa);
        if (c == 0.0) return SignedLog::zero();
        const int k = kappa.weight();
        const double log_abs = ratio.log_abs + k * log_scale - std::lgamma(k + 1.0) +
                               std::log(std::abs(c));
        return {log_abs, ratio.sign * (c > 0.0 ? 1 : -1)};
    };
    return sum_layers(m, budget, term);
}

SeriesValue hyper_hetero(const HypergeomParams& params, int m, int n, const EigenSpectrum& A,
                         const EigenSpectrum& B, const TruncationBudget& budget) {
    validate_common(params, budget);
    if (n < 1 || m < n) throw std::invalid_argument("hyper_hetero: need m >= n >= 1");
    if (A.dimension() != m || B.dimension() != n)
        throw std::invalid_argument("hyper_hetero: argument dimensions must be (m, n)");

    // p F q^{(m,n)}(I_m, B) = p F q(B): C_kappa(I_m) cancels term by term.
    if (is_identity(A)) return hyper_one_matrix(params, n, B, budget);

    check_lower_poles(params, n, budget);

    JackEvaluator ev_a(A, params.beta);
    JackEvaluator ev_b(B, params.beta);
    const double log_scales = ev_a.log_scale() + ev_b.log_scale();

    auto term = [&](const Partition& kappa) -> SignedLog {
        const SignedLog ratio = pochhammer_ratio_log(params, kappa);
        if (ratio.sign == 0) return SignedLog::zero();
        const double ca = ev_a.scaled_value(kappa);
        if (ca == 0.0) return SignedLog::zero();
        const double cb = ev_b.scaled_value(kappa);
        if (cb == 0.0) return SignedLog::zero();
        const int k = kappa.weight();
        const double log_abs = ratio.log_abs + k * log_scales - std::lgamma(k + 1.0) -
                               log_jack_identity(kappa, m, params.beta) +
                               std::log(std::abs(ca * cb));
        return {log_abs, ratio.sign * (ca * cb > 0.0 ? 1 : -1)};
    };
    return sum_layers(n, budget, term);
}

KummerTransformed kummer_transform(double a, double c, const EigenSpectrum& X, int m, int beta) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw std::invalid_argument("kummer_transform: beta must be 1, 2 or 4");
    if (X.dimension() != m)
        throw std::invalid_argument("kummer_transform: X must have dimension m");
    double tr = 0.0;
    for (double v : X.values) tr += v;
    return {c - a, c, X, -tr};
}

SeriesValue kummer_series_1f1(double a, double c, const EigenSpectrum& X, int m, int beta,
                              const TruncationBudget& budget) {
    const KummerTransformed t = kummer_transform(a, c, X, m, beta);
    HypergeomParams p;
    p.upper = {t.a_prime};
    p.lower = {t.c_prime};
    p.beta = beta;
    SeriesValue s = hyper_one_matrix(p, m, t.argument, budget);
    s.log_abs += t.log_prefactor;
    s.value = s.sign * std::exp(s.log_abs);
    return s;
}

}  // namespace swishart

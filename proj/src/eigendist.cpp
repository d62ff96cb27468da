#include "swishart/eigendist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "swishart/signed_log.hpp"

namespace swishart {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

double sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}
}  // namespace

void validate_spec(const WishartSpec& spec) {
    if (spec.beta != 1 && spec.beta != 2 && spec.beta != 4)
        throw std::invalid_argument("WishartSpec: beta must be 1, 2 or 4");
    if (spec.n < 1) throw std::invalid_argument("WishartSpec: n must be >= 1");
    if (spec.m <= spec.n)
        throw std::invalid_argument("WishartSpec: singular case requires m > n");
    if (static_cast<int>(spec.sigma_eigs.size()) != spec.m)
        throw std::invalid_argument("WishartSpec: sigma_eigs must have m entries");
    for (std::size_t i = 0; i < spec.sigma_eigs.size(); ++i) {
        if (!(spec.sigma_eigs[i] > 0.0))
            throw std::invalid_argument("WishartSpec: sigma eigenvalues must be positive");
        if (i > 0 && spec.sigma_eigs[i] > spec.sigma_eigs[i - 1])
            throw std::invalid_argument("WishartSpec: sigma eigenvalues must be sorted descending");
    }
}

double log_multigamma_beta(double c, int n, int beta) {
    if (n < 1) throw std::invalid_argument("log_multigamma_beta: n must be >= 1");
    if (beta != 1 && beta != 2 && beta != 4)
        throw std::invalid_argument("log_multigamma_beta: beta must be 1, 2 or 4");
    if (!(c > (n - 1) * beta / 2.0))
        throw std::invalid_argument("log_multigamma_beta: c must exceed (n-1)*beta/2");
    double s = n * (n - 1) * beta / 4.0 * std::log(kPi);
    for (int i = 1; i <= n; ++i) s += std::lgamma(c - (i - 1) * beta / 2.0);
    return s;
}

LargestEigenvalueDist::LargestEigenvalueDist(WishartSpec spec, TruncationBudget budget)
    : spec_(std::move(spec)), budget_(budget) {
    validate_spec(spec_);
    if (budget_.max_degree < 0)
        throw std::invalid_argument("LargestEigenvalueDist: max_degree must be >= 0");

    const int b = spec_.beta;
    const int m = spec_.m;
    const int n = spec_.n;
    const double c_low = (n + m - 1) * b / 2.0 + 1.0;
    x_power_ = b * n * m / 2.0;

    double log_det_sigma = 0.0;
    for (double l : spec_.sigma_eigs) log_det_sigma += std::log(l);
    log_pre_ = log_multigamma_beta((n - 1) * b / 2.0 + 1.0, n, b) -
               log_multigamma_beta(c_low, n, b) - n * b / 2.0 * log_det_sigma +
               x_power_ * std::log(b / 2.0);

    const bool uniform = spec_.sigma_eigs.front() == spec_.sigma_eigs.back();
    const int K = budget_.max_degree;
    log_layer_.assign(static_cast<std::size_t>(K) + 1, -kInf);

    if (uniform) {
        // Sigma = lambda I: the two-matrix 1F1 collapses to dimension n and
        // the Kummer transform is applied there, giving
        //   e^{-n u} sum_k sum_{P^k_n} ((n-1)b/2+1)^b_k / (c)^b_k C_k(I_n) u^k / k!
        // with u = b x / (2 lambda).
        const double lambda = spec_.sigma_eigs.front();
        const double a_up = (n - 1) * b / 2.0 + 1.0;
        arg_scale_ = b / (2.0 * lambda);
        exp_rate_ = n * b / (2.0 * lambda);
        for (int k = 0; k <= K; ++k) {
            SignedLogAccumulator layer;
            for (const Partition& kappa : enumerate_partitions(k, n)) {
                if (kappa.length() > n) continue;
                const SignedLog up = pochhammer_beta_log(a_up, kappa, b);
                const SignedLog lo = pochhammer_beta_log(c_low, kappa, b);
                layer.add({up.log_abs - lo.log_abs + log_jack_identity(kappa, n, b), up.sign * lo.sign});
            }
            log_layer_[static_cast<std::size_t>(k)] = layer.total().log_abs - std::lgamma(k + 1.0);
        }
    } else {
        // General Sigma: 1F1^{(b;m)}((m-1)b/2+1; c; (b/2) x Sigma^{-1}),
        // Jack values taken once at the x-free base spectrum.
        const double a_up = (m - 1) * b / 2.0 + 1.0;
        std::vector<double> base(spec_.sigma_eigs.size());
        for (std::size_t i = 0; i < base.size(); ++i) base[i] = b / (2.0 * spec_.sigma_eigs[i]);
        arg_scale_ = sum(base);
        exp_rate_ = sum(base);
        JackEvaluator ev(EigenSpectrum(base), b);
        for (int k = 0; k <= K; ++k) {
            SignedLogAccumulator layer;
            for (const Partition& kappa : enumerate_partitions(k, m)) {
                const double chat = ev.scaled_value(kappa);  // >= 0: positive spectrum
                if (chat <= 0.0) continue;
                const SignedLog up = pochhammer_beta_log(a_up, kappa, b);
                const SignedLog lo = pochhammer_beta_log(c_low, kappa, b);
                layer.add({up.log_abs - lo.log_abs + std::log(chat), up.sign * lo.sign});
            }
            log_layer_[static_cast<std::size_t>(k)] = layer.total().log_abs - std::lgamma(k + 1.0);
        }
    }
}

// Log-domain evaluation of G(x) = sum_k exp(log_layer_[k]) (x*arg_scale)^k,
// or of G'(x) when derivative is set, with the engine's layer diagnostics.
SeriesValue LargestEigenvalueDist::series_at(double x, bool derivative) const {
    const double lu = std::log(x * arg_scale_);
    SignedLogAccumulator total;
    SeriesValue out;
    double prev_ratio = kInf;
    const int k0 = derivative ? 1 : 0;
    for (int k = k0; k <= budget_.max_degree; ++k) {
        double la = log_layer_[static_cast<std::size_t>(k)];
        if (derivative)
            la += std::log(static_cast<double>(k)) + (k - 1) * lu + std::log(arg_scale_);
        else
            la += k * lu;
        const SignedLog layer{la, la == -kInf ? 0 : 1};
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
        if (k >= k0 + 1 && ratio <= budget_.layer_tol && prev_ratio <= budget_.layer_tol) {
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

DistValue LargestEigenvalueDist::cdf(double x) const {
    if (!(x > 0.0)) throw std::invalid_argument("cdf: x must be positive");
    SeriesValue g = series_at(x, false);
    const double log_cdf = log_pre_ + x_power_ * std::log(x) - exp_rate_ * x + g.log_abs;
    g.log_abs = log_cdf;
    g.value = g.sign * std::exp(log_cdf);
    return {g.value, g};
}

DistValue LargestEigenvalueDist::pdf(double x) const {
    if (!(x > 0.0)) throw std::invalid_argument("pdf: x must be positive");
    // Term-wise x-derivative of the series form: each degree-k term of the
    // CDF carries x^{d+k} e^{-s x}, so
    //   f(x) = pre * x^{d-1} e^{-s x} [ (d - s x) G(x) + x G'(x) ].
    const SeriesValue g = series_at(x, false);
    const SeriesValue gp = series_at(x, true);
    const double M = std::max(g.log_abs, gp.log_abs);
    SeriesValue diag = g;
    if (M == -kInf) return {0.0, diag};
    const double bracket = (x_power_ - exp_rate_ * x) * g.sign * std::exp(g.log_abs - M) +
                           x * gp.sign * std::exp(gp.log_abs - M);
    diag.converged = g.converged && gp.converged;
    if (bracket == 0.0) {
        diag.value = 0.0;
        diag.log_abs = -kInf;
        diag.sign = 0;
        return {0.0, diag};
    }
    const double log_pdf = log_pre_ + (x_power_ - 1.0) * std::log(x) - exp_rate_ * x + M +
                           std::log(std::abs(bracket));
    diag.log_abs = log_pdf;
    diag.sign = bracket > 0.0 ? 1 : -1;
    diag.value = diag.sign * std::exp(log_pdf);
    return {diag.value, diag};
}

double LargestEigenvalueDist::quantile(double alpha) const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("quantile: alpha must lie in (0,1)");
    const double tr_sigma = sum(spec_.sigma_eigs);
    double lo = 1e-8 * tr_sigma;

    // Expand until the CDF crosses alpha. The truncated CDF decays after
    // its peak, so a drop or a non-converged evaluation below alpha means
    // the peak must be located before declaring failure.
    double hi = tr_sigma;
    double best = 0.0;
    bool bracketed = false;
    for (int step = 0; step < 400; ++step) {
        const DistValue v = cdf(hi);
        if (v.value >= alpha) {
            bracketed = true;
            break;
        }
        if (!v.series.converged || v.value < best) {
            // Past (or near) the truncation peak: golden-section maximize on
            // [lo, hi] to decide whether alpha is attained at all.
            double a = lo, b2 = hi;
            const double gr = 0.61803398874989485;
            double x1 = b2 - gr * (b2 - a), x2 = a + gr * (b2 - a);
            double f1 = cdf(x1).value, f2 = cdf(x2).value;
            for (int it = 0; it < 200 && (b2 - a) > 1e-10 * b2; ++it) {
                if (f1 < f2) {
                    a = x1; x1 = x2; f1 = f2;
                    x2 = a + gr * (b2 - a); f2 = cdf(x2).value;
                } else {
                    b2 = x2; x2 = x1; f2 = f1;
                    x1 = b2 - gr * (b2 - a); f1 = cdf(x1).value;
                }
            }
            const double xpeak = 0.5 * (a + b2);
            const double fpeak = cdf(xpeak).value;
            if (fpeak >= alpha) {
                hi = xpeak;
                bracketed = true;
                break;
            }
            std::ostringstream msg;
            msg << "quantile: truncated CDF peaks at " << fpeak << " (x = " << xpeak
                << ") below alpha = " << alpha << "; increase max_degree";
            throw ConvergenceError(msg.str());
        }
        best = std::max(best, v.value);
        lo = hi;
        hi *= 1.4;
    }
    if (!bracketed)
        throw ConvergenceError("quantile: could not bracket alpha within expansion limit");

    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double c = cdf(mid).value;
        if (std::abs(c - alpha) <= 1e-6) return mid;
        if (c < alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

LargestEigenvalueDist::SupResult LargestEigenvalueDist::max_probability() const {
    // The derivative's sign change brackets the peak of the truncated CDF.
    const double tr_sigma = sum(spec_.sigma_eigs);
    double lo = 1e-8 * tr_sigma;
    double hi = tr_sigma;
    int guard = 0;
    while (pdf(hi).value > 0.0 && guard++ < 400) {
        lo = hi;
        hi *= 1.5;
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pdf(mid).value > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    return {x, cdf(x).value};
}

DistValue cdf_largest(double x, const WishartSpec& spec, const TruncationBudget& budget) {
    return LargestEigenvalueDist(spec, budget).cdf(x);
}

DistValue pdf_largest(double x, const WishartSpec& spec, const TruncationBudget& budget) {
    return LargestEigenvalueDist(spec, budget).pdf(x);
}

double quantile_largest(double alpha, const WishartSpec& spec, const TruncationBudget& budget) {
    return LargestEigenvalueDist(spec, budget).quantile(alpha);
}

DistValue joint_density(const std::vector<double>& ells, const WishartSpec& spec,
                        const TruncationBudget& budget) {
    validate_spec(spec);
    const int b = spec.beta;
    const int m = spec.m;
    const int n = spec.n;
    if (static_cast<int>(ells.size()) != n)
        throw std::invalid_argument("joint_density: need exactly n eigenvalues");
    for (std::size_t i = 0; i < ells.size(); ++i) {
        if (!(ells[i] > 0.0))
            throw std::invalid_argument("joint_density: eigenvalues must be positive");
        if (i > 0 && !(ells[i] < ells[i - 1]))
            throw std::invalid_argument("joint_density: eigenvalues must be strictly decreasing");
    }

    const double r = b == 1 ? 0.0 : -b * n / 2.0;
    double log_det_sigma = 0.0;
    for (double l : spec.sigma_eigs) log_det_sigma += std::log(l);
    double log_c = -(b * n * m / 2.0) * std::log(2.0 / b) + (n * n * b / 2.0 + r) * std::log(kPi) -
                   n * b / 2.0 * log_det_sigma - log_multigamma_beta(n * b / 2.0, n, b) -
                   log_multigamma_beta(m * b / 2.0, m, b);

    double log_shape = 0.0;
    const double det_exp = b * (m - n + 1) / 2.0 - 1.0;
    for (double l : ells) log_shape += det_exp * std::log(l);
    for (std::size_t i = 0; i < ells.size(); ++i)
        for (std::size_t j = i + 1; j < ells.size(); ++j)
            log_shape += b * std::log(ells[i] - ells[j]);

    std::vector<double> a_spec(spec.sigma_eigs.size());
    for (std::size_t i = 0; i < a_spec.size(); ++i) a_spec[i] = -b / (2.0 * spec.sigma_eigs[i]);
    HypergeomParams params;
    params.beta = b;
    SeriesValue f = hyper_hetero(params, m, n, EigenSpectrum(a_spec), EigenSpectrum(ells), budget);

    f.log_abs += log_c + log_shape;
    f.value = f.sign * std::exp(f.log_abs);
    return {f.value, f};
}

double pdf_m2_nonnull(double ell1, double lambda1, double lambda2) {
    if (!(ell1 > 0.0) || !(lambda1 > 0.0) || !(lambda2 > 0.0))
        throw std::invalid_argument("pdf_m2_nonnull: inputs must be positive");
    if (lambda1 < lambda2)
        throw std::invalid_argument("pdf_m2_nonnull: need lambda1 >= lambda2");
    const double z = 0.5 * ell1 * (1.0 / lambda2 - 1.0 / lambda1);  // = -a >= 0
    TruncationBudget budget;
    budget.max_degree = 500;
    budget.layer_tol = 1e-16;
    const SeriesValue f1 =
        kummer_series_1f1(0.5, 1.0, EigenSpectrum({z}), 1, 1, budget);
    const double log_f = -std::log(2.0) - 0.5 * (std::log(lambda1) + std::log(lambda2)) -
                         ell1 / (2.0 * lambda1) + f1.log_abs;
    return f1.sign * std::exp(log_f);
}

}  // namespace swishart

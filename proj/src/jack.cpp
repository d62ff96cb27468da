#include "swishart/jack.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swishart {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

int conj_part(const std::vector<int>& conj, int j) {
    return j < static_cast<int>(conj.size()) ? conj[static_cast<std::size_t>(j)] : 0;
}
}  // namespace

double log_jack_identity(const Partition& kappa, int m, int beta) {
    if (kappa.length() > m) return kNegInf;
    if (kappa.empty()) return 0.0;
    const double alpha = 2.0 / beta;
    const int k = kappa.weight();
    double lp = 0.0;  // log (m*beta/2)^beta_kappa, all factors positive here
    for (int i = 0; i < kappa.length(); ++i) {
        const double start = (m - i) * beta / 2.0;
        for (int j = 0; j < kappa.part(i); ++j) lp += std::log(start + j);
    }
    return 2.0 * k * std::log(alpha) + std::lgamma(k + 1.0) - hook_product(kappa, beta).log_j + lp;
}

double jack_identity_value(const Partition& kappa, int m, int beta) {
    if (kappa.length() > m) return 0.0;
    return std::exp(log_jack_identity(kappa, m, beta));
}

std::size_t JackEvaluator::VecHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

JackEvaluator::JackEvaluator(EigenSpectrum x, int beta)
    : y_(std::move(x.values)), beta_(beta) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw std::invalid_argument("JackEvaluator: beta must be 1, 2 or 4");
    alpha_ = 2.0 / beta;
    for (double v : y_) scale_ += std::abs(v);
    log_scale_ = scale_ > 0.0 ? std::log(scale_) : kNegInf;
    if (scale_ > 0.0)
        for (double& v : y_) v /= scale_;
}

int JackEvaluator::intern(const std::vector<int>& parts) {
    auto it = ids_.find(parts);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(rows_.size());
    ids_.emplace(parts, id);
    rows_.push_back(parts);
    std::vector<int> conj;
    if (!parts.empty()) {
        conj.resize(static_cast<std::size_t>(parts[0]));
        for (int j = 0; j < parts[0]; ++j) {
            int c = 0;
            for (int p : parts)
                if (p >= j + 1) ++c;
            conj[static_cast<std::size_t>(j)] = c;
        }
    }
    conj_.push_back(std::move(conj));
    memo_.emplace_back(y_.size() + 1, kNaN);
    return id;
}

// Recurrence weight, log domain. For the C-normalized recurrence
//   C_lam(x_1..x_d) = sum_mu C_mu(x_1..x_{d-1}) * x_d^delta * W(lam,mu),
//   W = alpha^delta * |lam|!/|mu|! * (j_mu/j_lam) * beta_{lam,mu}
// which folds, cell by cell, into the "other hook" products below.
double JackEvaluator::log_weight(int lam_id, const std::vector<int>& mu,
                                 const std::vector<int>& mu_conj) const {
    const std::vector<int>& lam = rows_[static_cast<std::size_t>(lam_id)];
    const std::vector<int>& lam_conj = conj_[static_cast<std::size_t>(lam_id)];
    int wl = 0, wm = 0;
    for (int p : lam) wl += p;
    for (int p : mu) wm += p;
    double s = (wl - wm) * std::log(alpha_) + std::lgamma(wl + 1.0) - std::lgamma(wm + 1.0);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        for (int j = 0; j < lam[i]; ++j) {
            const bool same_col = conj_part(lam_conj, j) == conj_part(mu_conj, j);
            const double lc = conj_part(lam_conj, j);
            const double hook = same_col
                ? lc - (i + 1.0) + 1.0 + alpha_ * (lam[i] - (j + 1.0))        // lower
                : lc - (i + 1.0) + alpha_ * (lam[i] - (j + 1.0) + 1.0);       // upper
            s -= std::log(hook);
        }
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        for (int j = 0; j < mu[i]; ++j) {
            const bool same_col = conj_part(lam_conj, j) == conj_part(mu_conj, j);
            const double mc = conj_part(mu_conj, j);
            const double hook = same_col
                ? mc - (i + 1.0) + 1.0 + alpha_ * (mu[i] - (j + 1.0))
                : mc - (i + 1.0) + alpha_ * (mu[i] - (j + 1.0) + 1.0);
            s += std::log(hook);
        }
    }
    return s;
}

double JackEvaluator::eval(int id, int d) {
    const std::vector<int> lam = rows_[static_cast<std::size_t>(id)];  // copy: rows_ may grow
    if (lam.empty()) return 1.0;
    if (static_cast<int>(lam.size()) > d) return 0.0;

    {
        const double cached = memo_[static_cast<std::size_t>(id)][static_cast<std::size_t>(d)];
        if (!std::isnan(cached)) return cached;
    }

    const double xd = y_[static_cast<std::size_t>(d - 1)];
    const int r = static_cast<int>(lam.size());
    int wl = 0;
    for (int p : lam) wl += p;

    // Odometer over horizontal strips: mu_i in [lam_{i+1}, lam_i].
    std::vector<int> mu(lam);
    double total = 0.0;
    for (;;) {
        int wm = 0;
        for (int p : mu) wm += p;
        const int delta = wl - wm;

        if (delta == 0) {
            total += eval(id, d - 1);
        } else if (xd != 0.0) {
            std::vector<int> mu_trim;
            mu_trim.reserve(mu.size());
            for (int p : mu)
                if (p > 0) mu_trim.push_back(p);
            if (static_cast<int>(mu_trim.size()) <= d - 1) {
                const int mu_id = intern(mu_trim);
                const double v = eval(mu_id, d - 1);
                if (v != 0.0) {
                    const double lw = log_weight(id, mu_trim, conj_[static_cast<std::size_t>(mu_id)]);
                    const double mag = std::exp(lw + delta * std::log(std::abs(xd)));
                    const double sgn = (xd < 0.0 && (delta & 1)) ? -1.0 : 1.0;
                    total += sgn * mag * v;
                }
            }
        }

        // next strip
        int i = r - 1;
        for (; i >= 0; --i) {
            const int lo = (i + 1 < r) ? lam[static_cast<std::size_t>(i + 1)] : 0;
            if (mu[static_cast<std::size_t>(i)] > lo) {
                --mu[static_cast<std::size_t>(i)];
                for (int t = i + 1; t < r; ++t) mu[static_cast<std::size_t>(t)] = lam[static_cast<std::size_t>(t)];
                break;
            }
        }
        if (i < 0) break;
    }

    memo_[static_cast<std::size_t>(id)][static_cast<std::size_t>(d)] = total;
    return total;
}

double JackEvaluator::scaled_value(const Partition& kappa) {
    if (kappa.empty()) return 1.0;
    if (kappa.length() > static_cast<int>(y_.size())) return 0.0;
    if (scale_ == 0.0) return 0.0;
    return eval(intern(kappa.parts()), static_cast<int>(y_.size()));
}

double JackEvaluator::value(const Partition& kappa) {
    if (kappa.empty()) return 1.0;
    if (scale_ == 0.0) return 0.0;
    return scaled_value(kappa) * std::exp(kappa.weight() * log_scale_);
}

double jack_c(const Partition& kappa, const EigenSpectrum& x, int beta) {
    JackEvaluator ev(x, beta);
    return ev.value(kappa);
}

}  // namespace swishart

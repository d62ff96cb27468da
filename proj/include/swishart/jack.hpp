#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "swishart/partition.hpp"

namespace swishart {

// Eigenvalues of a Hermitian argument matrix. Entries may be any reals;
// the distribution series evaluate at spectra like -(beta/2) x Sigma^{-1}.
struct EigenSpectrum {
    std::vector<double> values;

    EigenSpectrum() = default;
    explicit EigenSpectrum(std::vector<double> v) : values(std::move(v)) {}

    int dimension() const { return static_cast<int>(values.size()); }

    static EigenSpectrum identity(int m) { return EigenSpectrum(std::vector<double>(m, 1.0)); }
    static EigenSpectrum scaled_identity(double c, int m) {
        return EigenSpectrum(std::vector<double>(m, c));
    }
    EigenSpectrum scaled(double c) const {
        EigenSpectrum s = *this;
        for (double& v : s.values) v *= c;
        return s;
    }
};

// Closed form for C^beta_kappa(I_m); 0 when length(kappa) > m.
// With alpha = 2/beta and j_kappa from hook_product:
//   C^beta_kappa(I_m) = alpha^(2k) k! / j_kappa * (m*beta/2)^beta_kappa.
double jack_identity_value(const Partition& kappa, int m, int beta);
// log of the above (-inf when the value is 0). Always finite-safe.
double log_jack_identity(const Partition& kappa, int m, int beta);

// Evaluates Jack polynomials C^beta_kappa in C-normalization (the one with
// sum_{kappa of k} C^beta_kappa(X) = (tr X)^k) at a fixed eigenvalue list,
// by the variable-by-variable recurrence
//   J_lam(x_1..x_d) = sum_{lam/mu horizontal strip} J_mu(x_1..x_{d-1})
//                     * x_d^{|lam|-|mu|} * beta_{lam,mu}
// rewritten for C-normalized values, with recurrence weights computed in
// the log domain. Values for every (sub-partition, prefix length) pair are
// memoized, so evaluating all partitions up to a degree budget against one
// spectrum shares the whole table.
//
// Internally the spectrum is rescaled to total absolute value 1, which
// bounds every memoized value by 1 in magnitude; value() reapplies the
// scale. A single evaluator is confined to one spectrum; it is cheap to
// construct and not thread-safe.
class JackEvaluator {
public:
    JackEvaluator(EigenSpectrum x, int beta);

    // C^beta_kappa(x). May overflow double for extreme spectra/weights;
    // use scaled_value + log_scale when assembling large series.
    double value(const Partition& kappa);

    // C^beta_kappa(x / s) with s = scale(); bounded by 1 in magnitude.
    double scaled_value(const Partition& kappa);

    double scale() const { return scale_; }
    double log_scale() const { return log_scale_; }
    int beta() const { return beta_; }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };

    int intern(const std::vector<int>& parts);
    double eval(int id, int d);
    double log_weight(int lam_id, const std::vector<int>& mu, const std::vector<int>& mu_conj) const;

    std::vector<double> y_;   // rescaled spectrum
    double scale_ = 0.0;
    double log_scale_ = 0.0;
    double alpha_ = 2.0;
    int beta_ = 1;

    std::unordered_map<std::vector<int>, int, VecHash> ids_;
    std::vector<std::vector<int>> rows_;   // partition parts by id
    std::vector<std::vector<int>> conj_;   // conjugate parts by id
    std::vector<std::vector<double>> memo_;  // [id][d], NaN = not computed
};

// One-shot evaluation (builds a throwaway evaluator).
double jack_c(const Partition& kappa, const EigenSpectrum& x, int beta);

}  // namespace swishart

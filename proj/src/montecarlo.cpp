#include "swishart/montecarlo.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace swishart {

namespace {

constexpr int kSubBatch = 8192;

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

// Row i scaled by sqrt(lambda_i); entries consumed row-major so the draw
// stream is independent of any linear-algebra internals.
MatrixXd gaussian_real(const WishartSpec& spec, Philox4x32& rng) {
    MatrixXd x(spec.m, spec.n);
    for (int i = 0; i < spec.m; ++i) {
        const double s = std::sqrt(spec.sigma_eigs[static_cast<std::size_t>(i)]);
        for (int j = 0; j < spec.n; ++j) x(i, j) = s * rng.next_gaussian();
    }
    return x;
}

MatrixXcd gaussian_complex(const WishartSpec& spec, Philox4x32& rng) {
    const double c = 1.0 / std::sqrt(2.0);  // variance 1/2 per real component
    MatrixXcd x(spec.m, spec.n);
    for (int i = 0; i < spec.m; ++i) {
        const double s = std::sqrt(spec.sigma_eigs[static_cast<std::size_t>(i)]);
        for (int j = 0; j < spec.n; ++j) {
            const double re = rng.next_gaussian();
            const double im = rng.next_gaussian();
            x(i, j) = std::complex<double>(s * c * re, s * c * im);
        }
    }
    return x;
}

// Quaternion entries as 2x2 complex blocks [[z, w], [-conj(w), conj(z)]],
// components N(0, 1/4) each.
MatrixXcd gaussian_quaternion_embedded(const WishartSpec& spec, Philox4x32& rng) {
    MatrixXcd x(2 * spec.m, 2 * spec.n);
    for (int i = 0; i < spec.m; ++i) {
        const double s = std::sqrt(spec.sigma_eigs[static_cast<std::size_t>(i)]);
        for (int j = 0; j < spec.n; ++j) {
            const double a = 0.5 * rng.next_gaussian();
            const double b = 0.5 * rng.next_gaussian();
            const double c = 0.5 * rng.next_gaussian();
            const double d = 0.5 * rng.next_gaussian();
            const std::complex<double> z(s * a, s * b);
            const std::complex<double> w(s * c, s * d);
            x(2 * i, 2 * j) = z;
            x(2 * i, 2 * j + 1) = w;
            x(2 * i + 1, 2 * j) = -std::conj(w);
            x(2 * i + 1, 2 * j + 1) = std::conj(z);
        }
    }
    return x;
}

template <typename Matrix>
std::vector<double> gram_spectrum(const Matrix& x) {
    // Nonzero eigenvalues of X X* equal those of the Gram matrix X* X.
    const Matrix gram = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    std::vector<double> eigs(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    return eigs;
}

}  // namespace

std::vector<double> sample_embedded_spectrum(const WishartSpec& spec, Philox4x32& rng) {
    if (spec.beta != 4)
        throw std::invalid_argument("sample_embedded_spectrum: beta must be 4");
    return gram_spectrum(gaussian_quaternion_embedded(spec, rng));
}

std::vector<double> sample_wishart_spectrum(const WishartSpec& spec, Philox4x32& rng) {
    switch (spec.beta) {
        case 1:
            return gram_spectrum(gaussian_real(spec, rng));
        case 2:
            return gram_spectrum(gaussian_complex(spec, rng));
        default: {
            std::vector<double> paired = gram_spectrum(gaussian_quaternion_embedded(spec, rng));
            std::vector<double> out;
            out.reserve(paired.size() / 2);
            for (std::size_t i = 0; i + 1 < paired.size(); i += 2)
                out.push_back(0.5 * (paired[i] + paired[i + 1]));
            return out;
        }
    }
}

SampleBatch sample_largest_eigs(const WishartSpec& spec, int count, std::uint64_t seed) {
    validate_spec(spec);
    if (count < 1) throw std::invalid_argument("sample_largest_eigs: count must be >= 1");
    SampleBatch batch;
    batch.spec = spec;
    batch.seed = seed;
    batch.draws.resize(static_cast<std::size_t>(count));
    const int nsub = (count + kSubBatch - 1) / kSubBatch;
    for (int s = 0; s < nsub; ++s) {
        Philox4x32 rng(seed, static_cast<std::uint64_t>(s));
        const int lo = s * kSubBatch;
        const int hi = std::min(count, lo + kSubBatch);
        for (int i = lo; i < hi; ++i)
            batch.draws[static_cast<std::size_t>(i)] = sample_wishart_spectrum(spec, rng).front();
    }
    return batch;
}

double empirical_cdf(const SampleBatch& batch, double x) {
    if (batch.draws.empty()) throw std::invalid_argument("empirical_cdf: batch is empty");
    std::size_t c = 0;
    for (double d : batch.draws)
        if (d <= x) ++c;
    return static_cast<double>(c) / static_cast<double>(batch.draws.size());
}

double ks_distance(const SampleBatch& batch, const std::function<double(double)>& cdf) {
    if (batch.draws.empty()) throw std::invalid_argument("ks_distance: batch is empty");
    std::vector<double> sorted = batch.draws;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

SplittingCheckResult stiefel_splitting_check(const EigenSpectrum& A, const EigenSpectrum& B,
                                             const Partition& kappa, int beta, int count,
                                             std::uint64_t seed) {
    if (beta != 1 && beta != 2)
        throw std::invalid_argument("stiefel_splitting_check: beta must be 1 or 2");
    const int m = A.dimension();
    const int n = B.dimension();
    if (m < n) throw std::invalid_argument("stiefel_splitting_check: need m >= n");
    if (kappa.length() > n)
        throw std::invalid_argument("stiefel_splitting_check: kappa longer than n");
    if (count < 2) throw std::invalid_argument("stiefel_splitting_check: count must be >= 2");
    for (double a : A.values)
        if (!(a > 0.0))
            throw std::invalid_argument("stiefel_splitting_check: A must be positive");

    const double exact = jack_c(kappa, A, beta) * jack_c(kappa, B, beta) /
                         jack_identity_value(kappa, m, beta);

    Philox4x32 rng(seed, 0);
    double mean = 0.0;
    double m2 = 0.0;

    auto accumulate = [&](double v, int i) {
        const double delta = v - mean;
        mean += delta / (i + 1);
        m2 += delta * (v - mean);
    };

    const Eigen::VectorXd sqrt_a =
        Eigen::Map<const Eigen::VectorXd>(A.values.data(), m).cwiseSqrt();
    const Eigen::VectorXd b_diag = Eigen::Map<const Eigen::VectorXd>(B.values.data(), n);

    for (int i = 0; i < count; ++i) {
        std::vector<double> spectrum;
        if (beta == 1) {
            MatrixXd g(m, n);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) g(r, c) = rng.next_gaussian();
            Eigen::HouseholderQR<MatrixXd> qr(g);
            MatrixXd q = qr.householderQ() * MatrixXd::Identity(m, n);
            for (int c = 0; c < n; ++c)
                if (qr.matrixQR()(c, c) < 0.0) q.col(c) = -q.col(c);
            const MatrixXd h = sqrt_a.asDiagonal() * q * b_diag.asDiagonal() *
                               q.transpose() * sqrt_a.asDiagonal();
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(h, Eigen::EigenvaluesOnly);
            spectrum.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);
        } else {
            MatrixXcd g(m, n);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c)
                    g(r, c) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
            Eigen::HouseholderQR<MatrixXcd> qr(g);
            MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(m, n);
            for (int c = 0; c < n; ++c) {
                const std::complex<double> d = qr.matrixQR()(c, c);
                if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
            }
            const MatrixXcd h = sqrt_a.asDiagonal() * q * b_diag.asDiagonal() *
                                q.adjoint() * sqrt_a.asDiagonal();
            Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
            spectrum.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);
        }
        accumulate(jack_c(kappa, EigenSpectrum(spectrum), beta), i);
    }

    SplittingCheckResult out;
    out.mc_mean = mean;
    out.exact = exact;
    out.std_err = std::sqrt(m2 / (count - 1) / count);
    return out;
}

void write_batch_csv(std::ostream& os, const SampleBatch& batch) {
    os << "# spec: beta=" << batch.spec.beta << " m=" << batch.spec.m << " n=" << batch.spec.n
       << " sigma=";
    for (std::size_t i = 0; i < batch.spec.sigma_eigs.size(); ++i) {
        if (i) os << ',';
        os << batch.spec.sigma_eigs[i];
    }
    os << "; seed=" << batch.seed << "; count=" << batch.count() << '\n';
    os << "l1\n";
    os.precision(17);
    for (double d : batch.draws) os << d << '\n';
}

}  // namespace swishart

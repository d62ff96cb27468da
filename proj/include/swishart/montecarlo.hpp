#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "swishart/eigendist.hpp"
#include "swishart/jack.hpp"
#include "swishart/partition.hpp"
#include "swishart/philox.hpp"

namespace swishart {

// Seeded Monte Carlo draw of largest eigenvalues. Identical
// (spec, seed, count) reproduce identical draws bit for bit; draws are
// generated in fixed-size sub-batches with per-sub-batch derived streams,
// so prefixes are stable when count grows.
struct SampleBatch {
    std::vector<double> draws;
    WishartSpec spec;
    std::uint64_t seed = 0;

    int count() const { return static_cast<int>(draws.size()); }
};

// Largest eigenvalue of W = X X* with X an m x n beta-Gaussian matrix
// colored by Sigma^{1/2}. Entry convention: each of the beta real
// components of an entry is N(0, 1/beta), so a unit-Sigma entry has
// expected squared modulus 1 (this matches the density exponent
// -(beta/2) tr Sigma^{-1} X X*; complex conventions differ across the
// literature, so it is pinned here). For beta = 4, quaternion matrices are
// represented by the 2x2 complex block embedding; the embedded eigenvalues
// come in duplicate pairs and are deduplicated before taking the maximum.
SampleBatch sample_largest_eigs(const WishartSpec& spec, int count, std::uint64_t seed);

// Full nonzero spectrum of one draw (n values, descending). For beta = 4
// these are the deduplicated pair representatives.
std::vector<double> sample_wishart_spectrum(const WishartSpec& spec, Philox4x32& rng);

// beta = 4 only: the raw 2n-point spectrum of the embedded Gram matrix,
// pairs not deduplicated (test hook for the pairing property).
std::vector<double> sample_embedded_spectrum(const WishartSpec& spec, Philox4x32& rng);

// Fraction of draws <= x.
double empirical_cdf(const SampleBatch& batch, double x);

// Two-sided Kolmogorov-Smirnov statistic of the batch against a monotone
// theoretical CDF.
double ks_distance(const SampleBatch& batch, const std::function<double(double)>& cdf);

// Monte Carlo check of the Stiefel splitting identity
//   int C_kappa(A H1 B H1*) (dH1) = C_kappa(A) C_kappa(B) / C_kappa(I_m)
// over Haar frames H1 (QR of a Gaussian matrix with the R-diagonal phase
// fix). beta in {1,2}; requires positive A and length(kappa) <= n.
struct SplittingCheckResult {
    double mc_mean = 0.0;
    double exact = 0.0;
    double std_err = 0.0;
};
SplittingCheckResult stiefel_splitting_check(const EigenSpectrum& A, const EigenSpectrum& B,
                                             const Partition& kappa, int beta, int count,
                                             std::uint64_t seed);

// Single-column CSV with a header comment recording spec, seed and count.
void write_batch_csv(std::ostream& os, const SampleBatch& batch);

}  // namespace swishart

#pragma once

#include <cstddef>
#include <vector>

#include "swishart/signed_log.hpp"

namespace swishart {

// Integer partition kappa = (k1 >= k2 >= ... >= kp >= 1). The empty
// partition has weight 0 and length 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Row length at 0-based index i; 0 beyond the last row.
    int part(int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    // Transpose of the Young diagram (an involution).
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of k with length <= max_len, in reverse-lexicographic
// order, e.g. (5),(4,1),(3,2),(3,1,1),(2,2,1) for k=5, max_len=3. The
// order is fixed so series summation is deterministic.
std::vector<Partition> enumerate_partitions(int k, int max_len);

// Product of upper and lower hook lengths over the cells of kappa.
//
// The hook parameter is alpha = 2/beta (Jack parameter); with
//   upper(i,j) = kappa'_j - i     + alpha*(kappa_i - j + 1)
//   lower(i,j) = kappa'_j - i + 1 + alpha*(kappa_i - j)
// (1-based i,j). This is the convention under which the closed form for
// C^beta_kappa(I_m) in jack.hpp reduces, at beta=1, to the classical
// zonal-polynomial expression; the reduction is pinned by tests.
struct HookProducts {
    double j_kappa;    // may overflow for large weights; see log_j
    double log_j;
    int beta;
};
HookProducts hook_product(const Partition& kappa, int beta);

// beta-generalized Pochhammer symbol:
//   (a)^beta_kappa = prod_i (a - (i-1)*beta/2)_(kappa_i)
// with (x)_j the rising factorial. Computed as a finite product (no
// gamma ratios), so zeros and negative a are exact.
double pochhammer_beta(double a, const Partition& kappa, int beta);
SignedLog pochhammer_beta_log(double a, const Partition& kappa, int beta);

}  // namespace swishart

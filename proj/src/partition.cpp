#include "swishart/partition.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swishart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(static_cast<std::size_t>(parts_[0]));
    for (int j = 0; j < parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j + 1) ++count;
        t[static_cast<std::size_t>(j)] = count;
    }
    return Partition(std::move(t));
}

namespace {

void emit_partitions(int k, int max_len, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (k == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(k, max_part); p >= 1; --p) {
        if (static_cast<long long>(p) * max_len < k) break;
        prefix.push_back(p);
        emit_partitions(k - p, max_len - 1, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, int max_len) {
    if (k < 0) throw std::invalid_argument("enumerate_partitions: k must be >= 0");
    if (max_len < 1) throw std::invalid_argument("enumerate_partitions: max_len must be >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(k, max_len, k, prefix, out);
    if (k == 0) out.assign(1, Partition());
    return out;
}

HookProducts hook_product(const Partition& kappa, int beta) {
    const double alpha = 2.0 / beta;
    const Partition conj = kappa.conjugate();
    double prod = 1.0;
    double log_prod = 0.0;
    for (int i = 1; i <= kappa.length(); ++i) {
        for (int j = 1; j <= kappa.part(i - 1); ++j) {
            const double upper = conj.part(j - 1) - i + alpha * (kappa.part(i - 1) - j + 1);
            const double lower = conj.part(j - 1) - i + 1 + alpha * (kappa.part(i - 1) - j);
            prod *= upper * lower;
            log_prod += std::log(upper) + std::log(lower);
        }
    }
    return {prod, log_prod, beta};
}

double pochhammer_beta(double a, const Partition& kappa, int beta) {
    double prod = 1.0;
    for (int i = 0; i < kappa.length(); ++i) {
        const double start = a - i * beta / 2.0;
        for (int j = 0; j < kappa.part(i); ++j) prod *= start + j;
    }
    return prod;
}

SignedLog pochhammer_beta_log(double a, const Partition& kappa, int beta) {
    double log_abs = 0.0;
    int sign = 1;
    for (int i = 0; i < kappa.length(); ++i) {
        const double start = a - i * beta / 2.0;
        for (int j = 0; j < kappa.part(i); ++j) {
            const double f = start + j;
            if (f == 0.0) return SignedLog::zero();
            if (f < 0.0) sign = -sign;
            log_abs += std::log(std::abs(f));
        }
    }
    return {log_abs, sign};
}

}  // namespace swishart

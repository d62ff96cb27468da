#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace swishart {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11 reference
// constants). Streams are independent for distinct (seed, stream) pairs and
// the output is identical across platforms and thread schedules, which is
// what makes sub-batch parallel sampling reproducible.
class Philox4x32 {
public:
    explicit Philox4x32(std::uint64_t seed, std::uint64_t stream = 0) {
        key_ = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
        counter_ = {0, 0, static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
    }

    // One 10-round block; exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * ctr[0];
            const std::uint64_t p1 = 0xCD9E8D57ull * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

    std::uint32_t next_u32() {
        if (idx_ == 4) {
            buf_ = block(counter_, key_);
            if (++counter_[0] == 0) ++counter_[1];
            idx_ = 0;
        }
        return buf_[idx_++];
    }

    // Uniform on (0,1]: 53-bit mantissa, never exactly 0 (log-safe).
    double next_uniform() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t bits = (hi << 32) | next_u32();
        return ((bits >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal by Box-Muller; consumes uniforms in pairs.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::array<std::uint32_t, 4> counter_{};
    std::array<std::uint32_t, 2> key_{};
    std::array<std::uint32_t, 4> buf_{};
    int idx_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace swishart

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace girthcut {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A pure
// function of (counter, key): no state, so any draw can be reproduced
// independently of the order in which draws are made.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter generate(Counter ctr, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Standard normal variates keyed by (seed, sample, vertex).
///
/// One Philox block per vertex pair feeds a Box-Muller transform; the even
/// vertex takes the cosine branch and the odd vertex the sine branch.
class GaussianField {
public:
    explicit GaussianField(std::uint64_t seed) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

    // Both variates of the pair (2p, 2p+1) for one sample.
    std::array<double, 2> pair(std::uint64_t sample, std::uint64_t pair_index) const noexcept {
        const auto r = Philox4x32::generate({static_cast<std::uint32_t>(pair_index),
                                             static_cast<std::uint32_t>(pair_index >> 32),
                                             static_cast<std::uint32_t>(sample),
                                             static_cast<std::uint32_t>(sample >> 32)},
                                            key_);
        // u1 in (0, 1] keeps the logarithm finite; u2 in [0, 1).
        const std::uint64_t hi = (std::uint64_t{r[0]} << 32) | r[1];
        const std::uint64_t lo = (std::uint64_t{r[2]} << 32) | r[3];
        const double u1 = static_cast<double>((hi >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(lo >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    double operator()(std::uint64_t sample, std::uint64_t vertex) const noexcept {
        return pair(sample, vertex / 2)[vertex % 2];
    }

private:
    Philox4x32::Key key_;
};

} // namespace girthcut

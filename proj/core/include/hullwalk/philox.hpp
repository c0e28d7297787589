#pragma once

#include <array>
#include <cstdint>

namespace hullwalk {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// The output block is a pure function of (key, counter), so a stream per
// run index is just a key/counter convention; worker count and evaluation
// order cannot change any drawn value.

struct Philox4x32 {
    static constexpr std::uint32_t M0 = 0xD2511F53u;
    static constexpr std::uint32_t M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u;
    static constexpr std::uint32_t W1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += W0;
                key[1] += W1;
            }
            const std::uint64_t p0 = std::uint64_t(M0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(M1) * ctr[2];
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }
};

/// Stream of 2-bit values for one Monte Carlo run. The counter encodes
/// (run_index, block_index) and the key carries the user seed, so the
/// stream is a pure function of (seed, run_index).
class RunStream {
public:
    RunStream(std::uint64_t seed, std::uint64_t run_index)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          run_index_(run_index) {}

    unsigned next2() {
        if (pos_ == 64) refill();
        const unsigned word = pos_ >> 4;
        const unsigned shift = 2u * (pos_ & 15u);
        ++pos_;
        return (buf_[word] >> shift) & 3u;
    }

private:
    void refill() {
        buf_ = Philox4x32::block({static_cast<std::uint32_t>(run_index_),
                                  static_cast<std::uint32_t>(run_index_ >> 32),
                                  static_cast<std::uint32_t>(block_),
                                  static_cast<std::uint32_t>(block_ >> 32)},
                                 key_);
        ++block_;
        pos_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint64_t run_index_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    unsigned pos_ = 64;
};

/// SplitMix64 finalizer, used to derive per-cell seeds for table runs.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace hullwalk

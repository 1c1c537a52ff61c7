#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "coinai/bytes.hpp"
#include "coinai/sha3.hpp"

namespace coinai {

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// bit-identical across compilers and standard libraries; <random>
// distributions are implementation-defined and would break replayability.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        auto splitmix = [&x]() {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        for (auto& s : state_) s = splitmix();
    }

    uint64_t next_u64() {
        auto rotl = [](uint64_t v, int s) { return (v << s) | (v >> (64 - s)); };
        uint64_t result = rotl(state_[1] * 5, 7) * 9;
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) via rejection sampling.
    uint64_t next_below(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [-half_range, half_range).
    double next_symmetric(double half_range) { return (2.0 * next_double() - 1.0) * half_range; }

    bool next_bernoulli(double p) { return next_double() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_[4];
};

// Per-node stream derivation: all simulation randomness flows from one root
// seed, with independent streams keyed by label (e.g. "miner/m1").
inline Rng derive_stream(uint64_t root_seed, std::string_view label) {
    Bytes preimage;
    put_u64(preimage, root_seed);
    preimage.insert(preimage.end(), label.begin(), label.end());
    Hash512 h = sha3_512(preimage);
    uint64_t seed = 0;
    for (int i = 0; i < 8; ++i) seed = (seed << 8) | h.bytes[i];
    return Rng(seed);
}

}  // namespace coinai

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "coinai/sha3.hpp"

namespace coinai {

// Unsigned 512-bit integer, little-endian u64 limbs. Just enough arithmetic
// for the derivation loop: values start at a 512-bit hash and only ever
// shrink (floor division by small n) or reset, so a fixed width suffices.
class Uint512 {
public:
    Uint512() = default;

    static Uint512 from_u64(uint64_t v) {
        Uint512 x;
        x.limbs_[0] = v;
        return x;
    }

    // Digest bytes interpreted big-endian as an unsigned integer.
    static Uint512 from_hash(const Hash512& h) {
        Uint512 x;
        for (int limb = 0; limb < 8; ++limb) {
            uint64_t v = 0;
            for (int b = 0; b < 8; ++b) v = (v << 8) | h.bytes[limb * 8 + b];
            x.limbs_[7 - limb] = v;
        }
        return x;
    }

    bool is_zero() const {
        for (uint64_t l : limbs_)
            if (l != 0) return false;
        return true;
    }

    bool fits_u64() const {
        for (int i = 1; i < 8; ++i)
            if (limbs_[i] != 0) return false;
        return true;
    }

    uint64_t low_u64() const { return limbs_[0]; }

    bool less_than(uint64_t v) const { return fits_u64() && limbs_[0] < v; }

    // In-place divide by a small divisor; returns the remainder.
    uint64_t divmod(uint64_t divisor) {
        uint64_t rem = 0;
        for (int i = 7; i >= 0; --i) {
            unsigned __int128 acc = (static_cast<unsigned __int128>(rem) << 64) | limbs_[i];
            limbs_[i] = static_cast<uint64_t>(acc / divisor);
            rem = static_cast<uint64_t>(acc % divisor);
        }
        return rem;
    }

    uint64_t mod(uint64_t divisor) const {
        Uint512 tmp = *this;
        return tmp.divmod(divisor);
    }

    std::string hex() const {
        Hash512 h;
        for (int limb = 0; limb < 8; ++limb) {
            uint64_t v = limbs_[7 - limb];
            for (int b = 0; b < 8; ++b) h.bytes[limb * 8 + b] = static_cast<uint8_t>(v >> (56 - 8 * b));
        }
        std::string s = h.hex();
        size_t first = s.find_first_not_of('0');
        return first == std::string::npos ? "0" : s.substr(first);
    }

    auto operator<=>(const Uint512&) const = default;

private:
    std::array<uint64_t, 8> limbs_{};
};

}  // namespace coinai

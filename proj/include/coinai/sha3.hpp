#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

#include "coinai/bytes.hpp"

namespace coinai {

// 512-bit digest. Used both as a chain/model identifier and as the integer
// seed of the hash-to-architecture derivation.
struct Hash512 {
    std::array<uint8_t, 64> bytes{};

    static Hash512 zero() { return Hash512{}; }

    static Hash512 from_hex(std::string_view hex) {
        Bytes raw = coinai::from_hex(hex);
        if (raw.size() != 64) throw std::invalid_argument("Hash512: expected 128 hex chars");
        Hash512 h;
        std::memcpy(h.bytes.data(), raw.data(), 64);
        return h;
    }

    std::string hex() const { return to_hex(bytes.data(), bytes.size()); }

    auto operator<=>(const Hash512&) const = default;
};

namespace detail {

// Keccak-f[1600] permutation (FIPS 202). Lanes are little-endian u64.
inline void keccak_f1600(std::array<uint64_t, 25>& st) {
    static constexpr uint64_t RC[24] = {
        0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
        0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
        0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
        0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
        0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
        0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
        0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
        0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
    };
    static constexpr int ROT[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                    27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
    static constexpr int PI[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                   15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};
    auto rotl = [](uint64_t x, int s) { return (x << s) | (x >> (64 - s)); };

    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5], d;
        for (int i = 0; i < 5; ++i) c[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
        for (int i = 0; i < 5; ++i) {
            d = c[(i + 4) % 5] ^ rotl(c[(i + 1) % 5], 1);
            for (int j = 0; j < 25; j += 5) st[j + i] ^= d;
        }
        // rho + pi
        uint64_t t = st[1], u;
        for (int i = 0; i < 24; ++i) {
            u = st[PI[i]];
            st[PI[i]] = rotl(t, ROT[i]);
            t = u;
        }
        // chi
        for (int j = 0; j < 25; j += 5) {
            uint64_t row[5];
            for (int i = 0; i < 5; ++i) row[i] = st[j + i];
            for (int i = 0; i < 5; ++i) st[j + i] = row[i] ^ (~row[(i + 1) % 5] & row[(i + 2) % 5]);
        }
        // iota
        st[0] ^= RC[round];
    }
}

}  // namespace detail

// SHA3-512: rate 72 bytes, pad 0x06 .. 0x80.
inline Hash512 sha3_512(const uint8_t* data, size_t len) {
    constexpr size_t rate = 72;
    std::array<uint64_t, 25> st{};

    auto absorb_block = [&](const uint8_t* block) {
        for (size_t i = 0; i < rate / 8; ++i) {
            uint64_t lane = 0;
            for (int b = 7; b >= 0; --b) lane = (lane << 8) | block[i * 8 + b];
            st[i] ^= lane;
        }
        detail::keccak_f1600(st);
    };

    while (len >= rate) {
        absorb_block(data);
        data += rate;
        len -= rate;
    }
    uint8_t last[rate] = {0};
    std::memcpy(last, data, len);
    last[len] ^= 0x06;
    last[rate - 1] ^= 0x80;
    absorb_block(last);

    Hash512 out;
    for (size_t i = 0; i < 8; ++i) {
        uint64_t lane = st[i];
        for (int b = 0; b < 8; ++b) out.bytes[i * 8 + b] = static_cast<uint8_t>(lane >> (8 * b));
    }
    return out;
}

inline Hash512 sha3_512(const Bytes& data) { return sha3_512(data.data(), data.size()); }

inline Hash512 sha3_512(std::string_view data) {
    return sha3_512(reinterpret_cast<const uint8_t*>(data.data()), data.size());
}

}  // namespace coinai

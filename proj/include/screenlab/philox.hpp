#pragma once
#include <array>
#include <cstdint>

namespace screenlab {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key) {
        for (int r = 0; r < 10; ++r) {
            ctr = round(ctr, key);
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

private:
    static Counter round(const Counter& c, const Key& k) {
        const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * c[0];
        const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * c[2];
        return {std::uint32_t(p1 >> 32) ^ c[1] ^ k[0], std::uint32_t(p1), std::uint32_t(p0 >> 32) ^ c[3] ^ k[1],
                std::uint32_t(p0)};
    }
};

// Uniform doubles in (0, 1) for draw index i of a (seed, stream) pair; pure function of its inputs.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint32_t stream) : seed_(seed), stream_(stream) {}

    // Two uniforms per index.
    std::array<double, 2> uniforms(std::uint64_t index) const {
        auto out = Philox4x32::block({std::uint32_t(index), std::uint32_t(index >> 32), stream_, 0u},
                                     {std::uint32_t(seed_), std::uint32_t(seed_ >> 32)});
        const std::uint64_t a = (std::uint64_t(out[0]) << 32) | out[1];
        const std::uint64_t b = (std::uint64_t(out[2]) << 32) | out[3];
        return {to_unit(a), to_unit(b)};
    }

private:
    static double to_unit(std::uint64_t x) { return (double(x >> 11) + 0.5) * 0x1.0p-53; }
    std::uint64_t seed_;
    std::uint32_t stream_;
};

}  // namespace screenlab

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace colebrook {

// Two-dimensional Sobol sequence, Gray-code construction, 32-bit state.
// Dimension 1 is the van der Corput sequence in base 2 (all direction
// integers m_j = 1).  Dimension 2 is generated from the primitive
// polynomial x^2 + x + 1 with initial values m_1 = 1, m_2 = 3 and the
// recurrence m_j = 2 m_{j-1} XOR 4 m_{j-2} XOR m_{j-2}.
//
// Point indices start at 1; the degenerate all-zeros point at index 0 is
// never emitted.  The sequence is exhausted after index 2^32 - 1.
class SobolStream {
public:
    static constexpr int kBits = 32;
    static constexpr std::uint64_t kMaxIndex = 0xffffffffull;

    SobolStream() = default;

    // Index of the point the next call to next() will return.
    std::uint64_t index() const { return next_index_; }

    std::array<double, 2> next() {
        if (next_index_ > kMaxIndex)
            throw std::runtime_error("SobolStream: exhausted (more than 2^32 points requested)");
        const auto n = static_cast<std::uint32_t>(next_index_);
        const int bit = std::countr_zero(n);  // g(n-1) and g(n) differ in exactly this bit
        state_[0] ^= directions()[0][bit];
        state_[1] ^= directions()[1][bit];
        ++next_index_;
        return {state_[0] * 0x1p-32, state_[1] * 0x1p-32};
    }

    // Reposition so that next() returns the point with the given index.
    void seek(std::uint64_t index) {
        if (index < 1 || index > kMaxIndex + 1)
            throw std::invalid_argument("SobolStream::seek: index must be in [1, 2^32]");
        next_index_ = index;
        state_[0] = raw_point(0, static_cast<std::uint32_t>(index - 1));
        state_[1] = raw_point(1, static_cast<std::uint32_t>(index - 1));
    }

    // Random access without a stream.
    static std::array<double, 2> point(std::uint32_t index) {
        if (index < 1) throw std::invalid_argument("SobolStream::point: index must be >= 1");
        return {raw_point(0, index) * 0x1p-32, raw_point(1, index) * 0x1p-32};
    }

    friend bool operator==(const SobolStream&, const SobolStream&) = default;

private:
    using Table = std::array<std::uint32_t, kBits>;

    static constexpr std::array<Table, 2> make_directions() {
        std::array<Table, 2> v{};
        for (int j = 1; j <= kBits; ++j) v[0][j - 1] = 1u << (kBits - j);
        std::array<std::uint32_t, kBits + 1> m{};
        m[1] = 1;
        m[2] = 3;
        for (int j = 3; j <= kBits; ++j) m[j] = (2u * m[j - 1]) ^ (4u * m[j - 2]) ^ m[j - 2];
        for (int j = 1; j <= kBits; ++j) v[1][j - 1] = m[j] << (kBits - j);
        return v;
    }

    static const std::array<Table, 2>& directions() {
        static constexpr std::array<Table, 2> tables = make_directions();
        return tables;
    }

    // XOR of direction integers over the set bits of the Gray code of n.
    static std::uint32_t raw_point(int dim, std::uint32_t n) {
        std::uint32_t g = n ^ (n >> 1);
        std::uint32_t x = 0;
        int j = 0;
        while (g) {
            if (g & 1u) x ^= directions()[dim][j];
            g >>= 1;
            ++j;
        }
        return x;
    }

    std::uint32_t state_[2] = {0, 0};
    std::uint64_t next_index_ = 1;
};

}  // namespace colebrook

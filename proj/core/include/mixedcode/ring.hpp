#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixedcode/errors.hpp"

namespace mixedcode {

using Residue = std::uint8_t;

/// Block of the mixed alphabet a coordinate belongs to.
enum class Block : std::uint8_t { Z2 = 0, Z4 = 1, Z8 = 2 };

constexpr unsigned modulus_of(Block b) noexcept { return 2u << static_cast<unsigned>(b); }
constexpr unsigned bits_of(Block b) noexcept { return 1u + static_cast<unsigned>(b); }

/// Number of Z2, Z4 and Z8 coordinates of the ambient group Z2^alpha x Z4^beta x Z8^theta.
class AlphabetSplit {
public:
    AlphabetSplit(std::size_t alpha, std::size_t beta, std::size_t theta);

    std::size_t alpha() const noexcept { return alpha_; }
    std::size_t beta() const noexcept { return beta_; }
    std::size_t theta() const noexcept { return theta_; }

    /// alpha + beta + theta
    std::size_t length() const noexcept { return alpha_ + beta_ + theta_; }
    /// Length of the Gray image, alpha + 2 beta + 4 theta.
    std::size_t binary_length() const noexcept { return alpha_ + 2 * beta_ + 4 * theta_; }
    /// log2 of the ambient group order, alpha + 2 beta + 3 theta.
    std::size_t ambient_log2() const noexcept { return alpha_ + 2 * beta_ + 3 * theta_; }

    Block block_of(std::size_t coord) const noexcept {
        if (coord < alpha_) return Block::Z2;
        if (coord < alpha_ + beta_) return Block::Z4;
        return Block::Z8;
    }
    unsigned modulus_at(std::size_t coord) const noexcept { return modulus_of(block_of(coord)); }

    /// First coordinate index of a block.
    std::size_t offset(Block b) const noexcept {
        switch (b) {
        case Block::Z2: return 0;
        case Block::Z4: return alpha_;
        case Block::Z8: return alpha_ + beta_;
        }
        return 0;
    }
    std::size_t size(Block b) const noexcept {
        switch (b) {
        case Block::Z2: return alpha_;
        case Block::Z4: return beta_;
        case Block::Z8: return theta_;
        }
        return 0;
    }

    std::string to_string() const;

    friend bool operator==(const AlphabetSplit&, const AlphabetSplit&) = default;

private:
    std::size_t alpha_, beta_, theta_;
};

/// One element (u | v | w) of Z2^alpha x Z4^beta x Z8^theta. Entries are kept reduced.
class MixedVector {
public:
    explicit MixedVector(const AlphabetSplit& split);
    /// Entries in coordinate order u, v, w; each is reduced into its block's range.
    MixedVector(const AlphabetSplit& split, std::span<const int> entries);
    MixedVector(const AlphabetSplit& split, std::initializer_list<int> entries);
    /// Rejects out-of-range entries instead of reducing them.
    static MixedVector from_exact(const AlphabetSplit& split, std::span<const int> entries);

    const AlphabetSplit& split() const noexcept { return split_; }
    std::size_t length() const noexcept { return entries_.size(); }

    Residue operator[](std::size_t i) const noexcept { return entries_[i]; }
    /// Stores value reduced modulo the coordinate's modulus.
    void set(std::size_t i, int value) noexcept;

    std::span<const Residue> entries() const noexcept { return entries_; }
    std::span<const Residue> u() const noexcept { return block(Block::Z2); }
    std::span<const Residue> v() const noexcept { return block(Block::Z4); }
    std::span<const Residue> w() const noexcept { return block(Block::Z8); }
    std::span<const Residue> block(Block b) const noexcept {
        return std::span<const Residue>(entries_).subspan(split_.offset(b), split_.size(b));
    }

    bool is_zero() const noexcept;
    /// Additive order: 1, 2, 4 or 8.
    unsigned order() const noexcept;

    MixedVector& operator+=(const MixedVector& other);
    MixedVector& operator-=(const MixedVector& other);

    /// Text form "u0 u1 | v0 v1 | w0 w1".
    std::string to_string() const;

    friend bool operator==(const MixedVector&, const MixedVector&) = default;
    friend auto operator<=>(const MixedVector& a, const MixedVector& b) { return a.entries_ <=> b.entries_; }

private:
    AlphabetSplit split_;
    std::vector<Residue> entries_;
};

/// Element of Z2^n, one bit per entry.
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t n) : bits_(n, 0) {}
    explicit BinaryVector(std::vector<std::uint8_t> bits);
    static BinaryVector from_string(std::string_view bits);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    void push_back(std::uint8_t bit) { bits_.push_back(bit & 1u); }

    BinaryVector& operator^=(const BinaryVector& other);
    std::string to_string() const;

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
    friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

MixedVector add(const MixedVector& x, const MixedVector& y);
MixedVector subtract(const MixedVector& x, const MixedVector& y);
MixedVector negate(const MixedVector& x);

/// Z8 action d.(u, v, w) = (du mod 2, dv mod 4, dw mod 8).
MixedVector scalar_mul(int d, const MixedVector& x);

/// <x, y> = 4 sum(u u') + 2 sum(v v') + sum(w w') mod 8.
Residue inner_product(const MixedVector& x, const MixedVector& y);

std::array<std::uint8_t, 2> gray_phi1(Residue v);
std::array<std::uint8_t, 4> gray_phi2(Residue w);

/// Phi(u, v, w) = u || phi1(v_0) .. phi1(v_{beta-1}) || phi2(w_0) .. phi2(w_{theta-1}).
BinaryVector gray_map(const MixedVector& x);

/// Inverse of the Gray map. Throws ParseError when a 4-bit group is not a phi2 image.
MixedVector gray_unmap(const AlphabetSplit& split, const BinaryVector& b);

std::size_t hamming_weight(const BinaryVector& b) noexcept;

/// Hamming weight of the Gray image, computed without materialising it.
std::size_t gray_weight(const MixedVector& x) noexcept;

/// Parses "1 0 | 0 0 2 | 0 0 0 4". Every block separator is required, even for empty blocks.
MixedVector parse_vector(const AlphabetSplit& split, std::string_view text);

} // namespace mixedcode

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixedcode/matrix.hpp"

namespace mixedcode {

/// Caps for exhaustive work. Sizes are counts, not exponents.
struct EnumerationBudget {
    std::uint64_t max_codewords = std::uint64_t{1} << 24;
    std::uint64_t max_ambient = std::uint64_t{1} << 20;

    /// Throws BudgetExceeded when 2^log2 exceeds the cap.
    void require_codewords(std::size_t log2, const std::string& what) const;
    void require_ambient(std::size_t log2, const std::string& what) const;
};

/// Bit-packed arithmetic on vectors of one split. Coordinate i occupies 1, 2 or 3 bits.
class Packer {
public:
    explicit Packer(const AlphabetSplit& split);

    const AlphabetSplit& split() const noexcept { return split_; }
    std::size_t bits() const noexcept { return bits_; }

    std::uint64_t pack(const MixedVector& x) const;
    MixedVector unpack(std::uint64_t key) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        return ((a & low_) + (b & low_)) ^ ((a ^ b) & high_);
    }
    std::uint64_t negate(std::uint64_t a) const noexcept { return add(a ^ full_, ones_); }
    std::uint64_t subtract(std::uint64_t a, std::uint64_t b) const noexcept { return add(a, negate(b)); }
    std::uint64_t scale(int d, std::uint64_t a) const noexcept;
    Residue inner_product(std::uint64_t a, std::uint64_t b) const noexcept;
    std::size_t gray_weight(std::uint64_t a) const noexcept;

private:
    AlphabetSplit split_;
    std::size_t bits_ = 0;
    std::uint64_t full_ = 0, high_ = 0, low_ = 0, ones_ = 0;
    std::vector<std::uint8_t> shift_, width_;
};

/// A set of vectors over one split, kept as sorted packed keys.
class CodewordSet {
public:
    explicit CodewordSet(const AlphabetSplit& split) : packer_(split) {}
    static CodewordSet from_keys(const AlphabetSplit& split, std::vector<std::uint64_t> keys);
    static CodewordSet from_vectors(const AlphabetSplit& split, const std::vector<MixedVector>& words);

    const AlphabetSplit& split() const noexcept { return packer_.split(); }
    const Packer& packer() const noexcept { return packer_; }
    std::size_t size() const noexcept { return keys_.size(); }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }

    bool contains_key(std::uint64_t key) const;
    bool contains(const MixedVector& x) const { return contains_key(packer_.pack(x)); }
    /// Vectors in lexicographic order of their entries.
    std::vector<MixedVector> vectors() const;

    friend bool operator==(const CodewordSet& a, const CodewordSet& b) {
        return a.split() == b.split() && a.keys_ == b.keys_;
    }

private:
    Packer packer_;
    std::vector<std::uint64_t> keys_;
};

/// All combinations of G_S rows with coefficients ranging over the row orders 2,4,2,8,4,2 of the
/// k0..k5 groups, in standard-form coordinates.
CodewordSet enumerate_codewords(const StandardFormBlocks& b, const EnumerationBudget& budget = {});
/// Same sweep, in the column order of the matrix the standard form was computed from.
CodewordSet enumerate_codewords(const StandardForm& form, const EnumerationBudget& budget = {});
CodewordSet enumerate_codewords(const MixedMatrix& g, const EnumerationBudget& budget = {});

/// Additive closure of the rows, computed without any structure theory.
CodewordSet span_closure(const MixedMatrix& g, const EnumerationBudget& budget = {});

struct SubgroupReport {
    bool ok = true;
    std::string witness; // empty when ok
};
/// Closure under addition and the Z8 action. Finite additive closure implies the latter.
SubgroupReport check_subgroup(const CodewordSet& s);

/// A set of rows whose span is the closure of s; rows are taken greedily from s in key order.
MixedMatrix generating_set(const CodewordSet& s);

/// {v : <v, c> = 0 for all c in C}, by sweeping the ambient space.
CodewordSet brute_force_dual(const CodewordSet& c, const EnumerationBudget& budget = {});

std::vector<BinaryVector> gray_image(const CodewordSet& c);

struct LinearityReport {
    bool linear = true;
    bool exhaustive = true;
    std::size_t pairs_checked = 0;
    std::string witness;
};
/// Pair closure of the Gray image: exhaustive when |C|^2 fits the codeword budget, otherwise
/// `samples` random pairs.
LinearityReport check_gray_linearity(const CodewordSet& c, const EnumerationBudget& budget = {},
                                     std::uint64_t seed = 0, std::size_t samples = 100000);
/// Sampled pair closure for a code given only by a standard form.
LinearityReport check_gray_linearity(const StandardForm& form, std::uint64_t seed = 0,
                                     std::size_t samples = 100000);

struct DistanceResult {
    std::size_t distance = 0; // 0 for the zero code
    bool exact = true;        // false: an upper bound from a search
    std::optional<MixedVector> witness;
};
/// Minimum Gray weight over the nonzero codewords. Phi is a Lee isometry, so this is the minimum
/// Hamming distance of the Gray image.
DistanceResult min_gray_distance(const CodewordSet& c);
/// Exhaustive when the code fits the budget, otherwise a search over the rows of g.
DistanceResult min_gray_distance(const MixedMatrix& g, const EnumerationBudget& budget = {},
                                 std::uint64_t seed = 0, std::size_t samples = 100000);
/// Best weight among all multiples of single rows, of row pairs, and of `samples` random
/// combinations. Always reported as an upper bound.
DistanceResult search_min_gray_distance(const MixedMatrix& g, std::uint64_t seed = 0, std::size_t samples = 100000);

} // namespace mixedcode

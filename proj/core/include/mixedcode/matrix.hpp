#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixedcode/ring.hpp"

namespace mixedcode {

/// Ordered rows over one alphabet split. Used for generator and parity-check matrices.
class MixedMatrix {
public:
    explicit MixedMatrix(const AlphabetSplit& split) : split_(split) {}
    MixedMatrix(const AlphabetSplit& split, std::vector<MixedVector> rows);
    /// Row-major integer entries, one initializer list per row.
    MixedMatrix(const AlphabetSplit& split, std::initializer_list<std::initializer_list<int>> rows);

    const AlphabetSplit& split() const noexcept { return split_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return split_.length(); }
    bool empty() const noexcept { return rows_.empty(); }

    const MixedVector& row(std::size_t i) const { return rows_.at(i); }
    MixedVector& row(std::size_t i) { return rows_.at(i); }
    const std::vector<MixedVector>& row_list() const noexcept { return rows_; }

    void append(MixedVector row);
    MixedMatrix without_row(std::size_t i) const;

    std::string to_string() const;

    friend bool operator==(const MixedMatrix&, const MixedMatrix&) = default;

private:
    AlphabetSplit split_;
    std::vector<MixedVector> rows_;
};

/// A power of two, printed in decimal on demand.
struct Cardinality {
    std::size_t log2 = 0;

    std::string to_string() const;
    friend bool operator==(const Cardinality&, const Cardinality&) = default;
    friend auto operator<=>(const Cardinality&, const Cardinality&) = default;
};

/// (alpha, beta, theta; k0; k1, k2; k3, k4, k5).
struct CodeType {
    std::size_t alpha = 0, beta = 0, theta = 0;
    std::array<std::size_t, 6> k{};

    bool valid() const noexcept {
        return k[0] <= alpha && k[1] + k[2] <= beta && k[3] + k[4] + k[5] <= theta;
    }
    std::string to_string() const;
    friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// 2^(k0 + 2k1 + k2 + 3k3 + 2k4 + k5)
Cardinality cardinality(const CodeType& t);

/// Type of the dual code: (alpha, beta, theta; alpha-k0; beta-k1-k2, k2; theta-k3-k4-k5, k5, k4).
CodeType dual_type(const CodeType& t);

/// Small dense integer matrix used for the named blocks of the standard form.
class IntBlock {
public:
    IntBlock() = default;
    IntBlock(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntBlock identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntBlock transpose() const;
    IntBlock operator*(const IntBlock& rhs) const;
    IntBlock operator+(const IntBlock& rhs) const;
    IntBlock operator-(const IntBlock& rhs) const;
    IntBlock operator-() const;
    IntBlock scaled(int factor) const;
    /// Entries reduced into [0, modulus).
    IntBlock reduced(int modulus) const;

    friend bool operator==(const IntBlock&, const IntBlock&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<int> data_;
};

/// Named submatrices of the standard form
///
///   [ I_k0  A01b |  0    0     2T1  |  0    0     0      4T2  ]
///   [ 0     S1b  |  I_k1 B01   B02  |  0    0     2T3    2T4  ]
///   [ 0     0    |  0    2I_k2 2B12 |  0    0     0      4T5  ]
///   [ 0     S2b  |  0    S01   S02  |  I_k3 A01   A02    A03  ]
///   [ 0     S3b  |  0    0     2S12 |  0    2I_k4 2A12   2A13 ]
///   [ 0     0    |  0    0     0    |  0    0     4I_k5  4A23 ]
///
/// Blocks printed with a multiplier store the quotient: T1 holds entries of 2T1 divided by
/// two, reduced mod 2, and so on. Column groups are (k0 | alpha-k0), (k1 | k2 | beta-k1-k2),
/// (k3 | k4 | k5 | theta-k3-k4-k5).
struct StandardFormBlocks {
    CodeType type;
    // entries mod 2
    IntBlock A01b, S1b, S2b, S3b;
    // Z4 block
    IntBlock B01, B02, S01, S02; // mod 4
    IntBlock T1, B12, S12;       // quotients mod 2
    // Z8 block
    IntBlock A01, A02, A03;      // mod 8
    IntBlock T3, T4, A12, A13;   // quotients mod 4
    IntBlock T2, T5, A23;        // quotients mod 2

    AlphabetSplit split() const { return {type.alpha, type.beta, type.theta}; }
    /// Rebuilds G_S row by row in the layout above.
    MixedMatrix assemble() const;
    /// Splits a matrix already laid out as above into blocks.
    static StandardFormBlocks from_matrix(const MixedMatrix& gs, const CodeType& type);
};

/// One permutation per alphabet block. position i of the permuted block holds original column
/// z2[i] (resp. z4[i], z8[i]), indices relative to the block.
struct ColumnPermutation {
    std::vector<std::size_t> z2, z4, z8;

    static ColumnPermutation identity(const AlphabetSplit& split);
    bool is_identity() const noexcept;

    /// Original coordinates -> permuted coordinates.
    MixedVector apply(const MixedVector& x) const;
    MixedMatrix apply(const MixedMatrix& m) const;
    /// Permuted coordinates -> original coordinates.
    MixedVector unapply(const MixedVector& x) const;
    MixedMatrix unapply(const MixedMatrix& m) const;
};

struct StandardForm {
    StandardFormBlocks blocks;
    ColumnPermutation permutation;
    /// G_S, in permuted coordinates.
    MixedMatrix matrix;

    const CodeType& type() const noexcept { return blocks.type; }
    /// Generator rows mapped back to the input's column order.
    MixedMatrix original_matrix() const { return permutation.unapply(matrix); }
    /// Membership test for a vector in the input's column order.
    bool contains(const MixedVector& x) const;
};

/// Row reduction to the standard form. Zero rows are dropped; an all-zero input yields a type
/// with every k_i = 0.
StandardForm standard_form(const MixedMatrix& g);

CodeType extract_type(const StandardFormBlocks& b);

/// Parity-check matrix in the standard-form column order. Throws ConstructionMismatch when the
/// assembled rows are not orthogonal to G_S.
MixedMatrix dual_matrix(const StandardFormBlocks& b);

/// First (G row, H row) pair with a nonzero inner product.
struct OrthogonalityWitness {
    std::size_t g_row, h_row;
    Residue value;
};
std::optional<OrthogonalityWitness> find_non_orthogonal(const MixedMatrix& g, const MixedMatrix& h);
bool verify_orthogonality(const MixedMatrix& g, const MixedMatrix& h);

/// Parity-check matrix for an arbitrary generator matrix, in the input's column order.
MixedMatrix parity_check_matrix(const MixedMatrix& g);

/// True when both matrices generate the same code.
bool same_code(const MixedMatrix& a, const MixedMatrix& b);

} // namespace mixedcode

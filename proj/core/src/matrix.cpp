#include "mixedcode/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace mixedcode {

MixedMatrix::MixedMatrix(const AlphabetSplit& split, std::vector<MixedVector> rows) : split_(split) {
    for (auto& r : rows) append(std::move(r));
}

MixedMatrix::MixedMatrix(const AlphabetSplit& split, std::initializer_list<std::initializer_list<int>> rows)
    : split_(split) {
    for (const auto& r : rows) append(MixedVector(split, r));
}

void MixedMatrix::append(MixedVector row) {
    if (!(row.split() == split_))
        throw DimensionError("row split " + row.split().to_string() + " does not match matrix split " +
                             split_.to_string());
    rows_.push_back(std::move(row));
}

MixedMatrix MixedMatrix::without_row(std::size_t i) const {
    MixedMatrix out(split_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (r != i) out.append(rows_[r]);
    return out;
}

std::string MixedMatrix::to_string() const {
    std::string out;
    for (const auto& r : rows_) out += r.to_string() + "\n";
    return out;
}

std::string Cardinality::to_string() const {
    // little-endian decimal digits of 2^log2
    std::vector<int> digits{1};
    for (std::size_t i = 0; i < log2; ++i) {
        int carry = 0;
        for (int& d : digits) {
            const int v = 2 * d + carry;
            d = v % 10;
            carry = v / 10;
        }
        if (carry) digits.push_back(carry);
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
    return s;
}

std::string CodeType::to_string() const {
    auto n = [](std::size_t v) { return std::to_string(v); };
    return "(" + n(alpha) + "," + n(beta) + "," + n(theta) + ";" + n(k[0]) + ";" + n(k[1]) + "," + n(k[2]) + ";" +
           n(k[3]) + "," + n(k[4]) + "," + n(k[5]) + ")";
}

Cardinality cardinality(const CodeType& t) {
    return {t.k[0] + 2 * t.k[1] + t.k[2] + 3 * t.k[3] + 2 * t.k[4] + t.k[5]};
}

CodeType dual_type(const CodeType& t) {
    CodeType d = t;
    d.k[0] = t.alpha - t.k[0];
    d.k[1] = t.beta - t.k[1] - t.k[2];
    d.k[2] = t.k[2];
    d.k[3] = t.theta - t.k[3] - t.k[4] - t.k[5];
    d.k[4] = t.k[5];
    d.k[5] = t.k[4];
    return d;
}

IntBlock IntBlock::identity(std::size_t n) {
    IntBlock b(n, n);
    for (std::size_t i = 0; i < n; ++i) b(i, i) = 1;
    return b;
}

IntBlock IntBlock::transpose() const {
    IntBlock t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntBlock IntBlock::operator*(const IntBlock& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionError("block product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                             std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    IntBlock p(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const int a = (*this)(r, k);
            if (!a) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) p(r, c) += a * rhs(k, c);
        }
    return p;
}

IntBlock IntBlock::operator+(const IntBlock& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("block sum of different shapes");
    IntBlock s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += rhs.data_[i];
    return s;
}

IntBlock IntBlock::operator-(const IntBlock& rhs) const { return *this + (-rhs); }

IntBlock IntBlock::operator-() const { return scaled(-1); }

IntBlock IntBlock::scaled(int factor) const {
    IntBlock s = *this;
    for (int& v : s.data_) v *= factor;
    return s;
}

IntBlock IntBlock::reduced(int modulus) const {
    IntBlock s = *this;
    for (int& v : s.data_) v = ((v % modulus) + modulus) % modulus;
    return s;
}

namespace {

// Column ranges of the standard-form layout, as absolute coordinates.
struct Layout {
    std::size_t z2, z4, z8;                 // block offsets
    std::size_t k0, f2, k1, k2, f4, k3, k4, k5, f8;

    explicit Layout(const CodeType& t)
        : z2(0), z4(t.alpha), z8(t.alpha + t.beta), k0(t.k[0]), f2(t.alpha - t.k[0]), k1(t.k[1]), k2(t.k[2]),
          f4(t.beta - t.k[1] - t.k[2]), k3(t.k[3]), k4(t.k[4]), k5(t.k[5]), f8(t.theta - t.k[3] - t.k[4] - t.k[5]) {}

    std::size_t c_k0() const { return z2; }
    std::size_t c_f2() const { return z2 + k0; }
    std::size_t c_k1() const { return z4; }
    std::size_t c_k2() const { return z4 + k1; }
    std::size_t c_f4() const { return z4 + k1 + k2; }
    std::size_t c_k3() const { return z8; }
    std::size_t c_k4() const { return z8 + k3; }
    std::size_t c_k5() const { return z8 + k3 + k4; }
    std::size_t c_f8() const { return z8 + k3 + k4 + k5; }

    std::size_t r_k0() const { return 0; }
    std::size_t r_k1() const { return k0; }
    std::size_t r_k2() const { return k0 + k1; }
    std::size_t r_k3() const { return k0 + k1 + k2; }
    std::size_t r_k4() const { return k0 + k1 + k2 + k3; }
    std::size_t r_k5() const { return k0 + k1 + k2 + k3 + k4; }
    std::size_t rows() const { return k0 + k1 + k2 + k3 + k4 + k5; }
};

void place(std::vector<std::vector<int>>& m, std::size_t row0, std::size_t col0, const IntBlock& b, int mult) {
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m[row0 + r][col0 + c] += mult * b(r, c);
}

IntBlock take(const MixedMatrix& g, std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols,
              int divisor, int modulus) {
    IntBlock b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (int(g.row(row0 + r)[col0 + c]) / divisor) % modulus;
    return b;
}

} // namespace

MixedMatrix StandardFormBlocks::assemble() const {
    const Layout L(type);
    const AlphabetSplit sp = split();
    std::vector<std::vector<int>> m(L.rows(), std::vector<int>(sp.length(), 0));

    place(m, L.r_k0(), L.c_k0(), IntBlock::identity(L.k0), 1);
    place(m, L.r_k0(), L.c_f2(), A01b, 1);
    place(m, L.r_k0(), L.c_f4(), T1, 2);
    place(m, L.r_k0(), L.c_f8(), T2, 4);

    place(m, L.r_k1(), L.c_f2(), S1b, 1);
    place(m, L.r_k1(), L.c_k1(), IntBlock::identity(L.k1), 1);
    place(m, L.r_k1(), L.c_k2(), B01, 1);
    place(m, L.r_k1(), L.c_f4(), B02, 1);
    place(m, L.r_k1(), L.c_k5(), T3, 2);
    place(m, L.r_k1(), L.c_f8(), T4, 2);

    place(m, L.r_k2(), L.c_k2(), IntBlock::identity(L.k2), 2);
    place(m, L.r_k2(), L.c_f4(), B12, 2);
    place(m, L.r_k2(), L.c_f8(), T5, 4);

    place(m, L.r_k3(), L.c_f2(), S2b, 1);
    place(m, L.r_k3(), L.c_k2(), S01, 1);
    place(m, L.r_k3(), L.c_f4(), S02, 1);
    place(m, L.r_k3(), L.c_k3(), IntBlock::identity(L.k3), 1);
    place(m, L.r_k3(), L.c_k4(), A01, 1);
    place(m, L.r_k3(), L.c_k5(), A02, 1);
    place(m, L.r_k3(), L.c_f8(), A03, 1);

    place(m, L.r_k4(), L.c_f2(), S3b, 1);
    place(m, L.r_k4(), L.c_f4(), S12, 2);
    place(m, L.r_k4(), L.c_k4(), IntBlock::identity(L.k4), 2);
    place(m, L.r_k4(), L.c_k5(), A12, 2);
    place(m, L.r_k4(), L.c_f8(), A13, 2);

    place(m, L.r_k5(), L.c_k5(), IntBlock::identity(L.k5), 4);
    place(m, L.r_k5(), L.c_f8(), A23, 4);

    MixedMatrix out(sp);
    for (const auto& r : m) out.append(MixedVector(sp, r));
    return out;
}

StandardFormBlocks StandardFormBlocks::from_matrix(const MixedMatrix& gs, const CodeType& type) {
    const Layout L(type);
    if (gs.rows() != L.rows()) throw DimensionError("matrix row count does not match its type");
    StandardFormBlocks b;
    b.type = type;
    b.A01b = take(gs, L.r_k0(), L.k0, L.c_f2(), L.f2, 1, 2);
    b.T1 = take(gs, L.r_k0(), L.k0, L.c_f4(), L.f4, 2, 2);
    b.T2 = take(gs, L.r_k0(), L.k0, L.c_f8(), L.f8, 4, 2);

    b.S1b = take(gs, L.r_k1(), L.k1, L.c_f2(), L.f2, 1, 2);
    b.B01 = take(gs, L.r_k1(), L.k1, L.c_k2(), L.k2, 1, 4);
    b.B02 = take(gs, L.r_k1(), L.k1, L.c_f4(), L.f4, 1, 4);
    b.T3 = take(gs, L.r_k1(), L.k1, L.c_k5(), L.k5, 2, 4);
    b.T4 = take(gs, L.r_k1(), L.k1, L.c_f8(), L.f8, 2, 4);

    b.B12 = take(gs, L.r_k2(), L.k2, L.c_f4(), L.f4, 2, 2);
    b.T5 = take(gs, L.r_k2(), L.k2, L.c_f8(), L.f8, 4, 2);

    b.S2b = take(gs, L.r_k3(), L.k3, L.c_f2(), L.f2, 1, 2);
    b.S01 = take(gs, L.r_k3(), L.k3, L.c_k2(), L.k2, 1, 4);
    b.S02 = take(gs, L.r_k3(), L.k3, L.c_f4(), L.f4, 1, 4);
    b.A01 = take(gs, L.r_k3(), L.k3, L.c_k4(), L.k4, 1, 8);
    b.A02 = take(gs, L.r_k3(), L.k3, L.c_k5(), L.k5, 1, 8);
    b.A03 = take(gs, L.r_k3(), L.k3, L.c_f8(), L.f8, 1, 8);

    b.S3b = take(gs, L.r_k4(), L.k4, L.c_f2(), L.f2, 1, 2);
    b.S12 = take(gs, L.r_k4(), L.k4, L.c_f4(), L.f4, 2, 2);
    b.A12 = take(gs, L.r_k4(), L.k4, L.c_k5(), L.k5, 2, 4);
    b.A13 = take(gs, L.r_k4(), L.k4, L.c_f8(), L.f8, 2, 4);

    b.A23 = take(gs, L.r_k5(), L.k5, L.c_f8(), L.f8, 4, 2);
    return b;
}

CodeType extract_type(const StandardFormBlocks& b) { return b.type; }

ColumnPermutation ColumnPermutation::identity(const AlphabetSplit& split) {
    ColumnPermutation p;
    p.z2.resize(split.alpha());
    p.z4.resize(split.beta());
    p.z8.resize(split.theta());
    std::iota(p.z2.begin(), p.z2.end(), 0);
    std::iota(p.z4.begin(), p.z4.end(), 0);
    std::iota(p.z8.begin(), p.z8.end(), 0);
    return p;
}

bool ColumnPermutation::is_identity() const noexcept {
    auto id = [](const std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != i) return false;
        return true;
    };
    return id(z2) && id(z4) && id(z8);
}

MixedVector ColumnPermutation::apply(const MixedVector& x) const {
    const auto& s = x.split();
    if (z2.size() != s.alpha() || z4.size() != s.beta() || z8.size() != s.theta())
        throw DimensionError("permutation does not match split " + s.to_string());
    MixedVector out(s);
    const std::vector<std::size_t>* perms[] = {&z2, &z4, &z8};
    const Block blocks[] = {Block::Z2, Block::Z4, Block::Z8};
    for (int b = 0; b < 3; ++b) {
        const std::size_t off = s.offset(blocks[b]);
        for (std::size_t i = 0; i < perms[b]->size(); ++i) out.set(off + i, x[off + (*perms[b])[i]]);
    }
    return out;
}

MixedVector ColumnPermutation::unapply(const MixedVector& x) const {
    const auto& s = x.split();
    if (z2.size() != s.alpha() || z4.size() != s.beta() || z8.size() != s.theta())
        throw DimensionError("permutation does not match split " + s.to_string());
    MixedVector out(s);
    const std::vector<std::size_t>* perms[] = {&z2, &z4, &z8};
    const Block blocks[] = {Block::Z2, Block::Z4, Block::Z8};
    for (int b = 0; b < 3; ++b) {
        const std::size_t off = s.offset(blocks[b]);
        for (std::size_t i = 0; i < perms[b]->size(); ++i) out.set(off + (*perms[b])[i], x[off + i]);
    }
    return out;
}

MixedMatrix ColumnPermutation::apply(const MixedMatrix& m) const {
    MixedMatrix out(m.split());
    for (const auto& r : m.row_list()) out.append(apply(r));
    return out;
}

MixedMatrix ColumnPermutation::unapply(const MixedMatrix& m) const {
    MixedMatrix out(m.split());
    for (const auto& r : m.row_list()) out.append(unapply(r));
    return out;
}

std::optional<OrthogonalityWitness> find_non_orthogonal(const MixedMatrix& g, const MixedMatrix& h) {
    if (!(g.split() == h.split()))
        throw DimensionError("verify_orthogonality: split mismatch " + g.split().to_string() + " vs " +
                             h.split().to_string());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < h.rows(); ++j) {
            const Residue v = inner_product(g.row(i), h.row(j));
            if (v != 0) return OrthogonalityWitness{i, j, v};
        }
    return std::nullopt;
}

bool verify_orthogonality(const MixedMatrix& g, const MixedMatrix& h) { return !find_non_orthogonal(g, h); }

MixedMatrix parity_check_matrix(const MixedMatrix& g) {
    const StandardForm sf = standard_form(g);
    return sf.permutation.unapply(dual_matrix(sf.blocks));
}

bool same_code(const MixedMatrix& a, const MixedMatrix& b) {
    if (!(a.split() == b.split())) return false;
    const StandardForm sa = standard_form(a);
    const StandardForm sb = standard_form(b);
    if (!(sa.type() == sb.type())) return false;
    return std::all_of(b.row_list().begin(), b.row_list().end(), [&](const MixedVector& r) { return sa.contains(r); });
}

} // namespace mixedcode

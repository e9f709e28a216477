#include "mixedcode/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mixedcode {

namespace {

constexpr std::array<std::array<std::uint8_t, 2>, 4> kPhi1{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
constexpr std::array<std::array<std::uint8_t, 4>, 8> kPhi2{{
    {0, 0, 0, 0},
    {0, 0, 0, 1},
    {0, 0, 1, 1},
    {0, 1, 1, 1},
    {1, 1, 1, 1},
    {1, 1, 1, 0},
    {1, 1, 0, 0},
    {1, 0, 0, 0},
}};

// Lee weights, equal to the Hamming weights of the table rows above.
constexpr std::array<std::uint8_t, 4> kWeight4{0, 1, 2, 1};
constexpr std::array<std::uint8_t, 8> kWeight8{0, 1, 2, 3, 4, 3, 2, 1};

Residue reduce(int value, unsigned modulus) noexcept {
    const int m = static_cast<int>(modulus);
    return static_cast<Residue>(((value % m) + m) % m);
}

void require_same_split(const MixedVector& x, const MixedVector& y, const char* op) {
    if (!(x.split() == y.split()))
        throw DimensionError(std::string(op) + ": split mismatch " + x.split().to_string() + " vs " +
                             y.split().to_string());
}

} // namespace

AlphabetSplit::AlphabetSplit(std::size_t alpha, std::size_t beta, std::size_t theta)
    : alpha_(alpha), beta_(beta), theta_(theta) {
    if (alpha + beta + theta == 0) throw DimensionError("alphabet split must have at least one coordinate");
}

std::string AlphabetSplit::to_string() const {
    return "(" + std::to_string(alpha_) + "," + std::to_string(beta_) + "," + std::to_string(theta_) + ")";
}

MixedVector::MixedVector(const AlphabetSplit& split) : split_(split), entries_(split.length(), 0) {}

MixedVector::MixedVector(const AlphabetSplit& split, std::span<const int> entries) : MixedVector(split) {
    if (entries.size() != split.length())
        throw DimensionError("vector has " + std::to_string(entries.size()) + " entries, split " +
                             split.to_string() + " needs " + std::to_string(split.length()));
    for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

MixedVector::MixedVector(const AlphabetSplit& split, std::initializer_list<int> entries)
    : MixedVector(split, std::span<const int>(entries.begin(), entries.size())) {}

MixedVector MixedVector::from_exact(const AlphabetSplit& split, std::span<const int> entries) {
    if (entries.size() != split.length())
        throw ParseError("expected " + std::to_string(split.length()) + " entries, got " +
                         std::to_string(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const unsigned m = split.modulus_at(i);
        if (entries[i] < 0 || entries[i] >= static_cast<int>(m))
            throw ParseError("entry " + std::to_string(entries[i]) + " at coordinate " + std::to_string(i) +
                             " is outside Z" + std::to_string(m));
    }
    return MixedVector(split, entries);
}

void MixedVector::set(std::size_t i, int value) noexcept { entries_[i] = reduce(value, split_.modulus_at(i)); }

bool MixedVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Residue r) { return r == 0; });
}

unsigned MixedVector::order() const noexcept {
    unsigned ord = 1;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const unsigned m = split_.modulus_at(i);
        if (entries_[i] == 0) continue;
        // order of r in Z_m is m / gcd(r, m)
        ord = std::max(ord, m / std::gcd(static_cast<unsigned>(entries_[i]), m));
    }
    return ord;
}

MixedVector& MixedVector::operator+=(const MixedVector& other) {
    require_same_split(*this, other, "add");
    for (std::size_t i = 0; i < entries_.size(); ++i) set(i, entries_[i] + other.entries_[i]);
    return *this;
}

MixedVector& MixedVector::operator-=(const MixedVector& other) {
    require_same_split(*this, other, "subtract");
    for (std::size_t i = 0; i < entries_.size(); ++i) set(i, entries_[i] - other.entries_[i]);
    return *this;
}

std::string MixedVector::to_string() const {
    std::vector<std::string> tokens;
    for (Block b : {Block::Z2, Block::Z4, Block::Z8}) {
        if (b != Block::Z2) tokens.emplace_back("|");
        for (Residue r : block(b)) tokens.push_back(std::to_string(int(r)));
    }
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

BinaryVector::BinaryVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b &= 1u;
}

BinaryVector BinaryVector::from_string(std::string_view bits) {
    BinaryVector out;
    for (char c : bits) {
        if (c == '0' || c == '1')
            out.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (c != ' ')
            throw ParseError(std::string("invalid bit character '") + c + "'");
    }
    return out;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
    if (other.size() != size()) throw DimensionError("binary vectors of different length");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
    return *this;
}

std::string BinaryVector::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
}

MixedVector add(const MixedVector& x, const MixedVector& y) {
    MixedVector r = x;
    r += y;
    return r;
}

MixedVector subtract(const MixedVector& x, const MixedVector& y) {
    MixedVector r = x;
    r -= y;
    return r;
}

MixedVector negate(const MixedVector& x) { return scalar_mul(-1, x); }

MixedVector scalar_mul(int d, const MixedVector& x) {
    MixedVector r(x.split());
    for (std::size_t i = 0; i < x.length(); ++i) r.set(i, d * int(x[i]));
    return r;
}

Residue inner_product(const MixedVector& x, const MixedVector& y) {
    require_same_split(x, y, "inner_product");
    const auto& s = x.split();
    unsigned acc = 0;
    for (std::size_t i = 0; i < x.length(); ++i) {
        const unsigned weight = 8u / s.modulus_at(i);
        acc += weight * x[i] * y[i];
    }
    return static_cast<Residue>(acc % 8u);
}

std::array<std::uint8_t, 2> gray_phi1(Residue v) { return kPhi1[v & 3u]; }
std::array<std::uint8_t, 4> gray_phi2(Residue w) { return kPhi2[w & 7u]; }

BinaryVector gray_map(const MixedVector& x) {
    std::vector<std::uint8_t> bits;
    bits.reserve(x.split().binary_length());
    for (Residue r : x.u()) bits.push_back(r);
    for (Residue r : x.v())
        for (auto b : gray_phi1(r)) bits.push_back(b);
    for (Residue r : x.w())
        for (auto b : gray_phi2(r)) bits.push_back(b);
    return BinaryVector(std::move(bits));
}

MixedVector gray_unmap(const AlphabetSplit& split, const BinaryVector& b) {
    if (b.size() != split.binary_length())
        throw DimensionError("binary vector of length " + std::to_string(b.size()) + ", expected " +
                             std::to_string(split.binary_length()));
    MixedVector out(split);
    std::size_t pos = 0, coord = 0;
    for (std::size_t i = 0; i < split.alpha(); ++i) out.set(coord++, b[pos++]);
    for (std::size_t i = 0; i < split.beta(); ++i, pos += 2) {
        const std::array<std::uint8_t, 2> pat{b[pos], b[pos + 1]};
        const auto it = std::find(kPhi1.begin(), kPhi1.end(), pat);
        out.set(coord++, static_cast<int>(it - kPhi1.begin()));
    }
    for (std::size_t i = 0; i < split.theta(); ++i, pos += 4) {
        const std::array<std::uint8_t, 4> pat{b[pos], b[pos + 1], b[pos + 2], b[pos + 3]};
        const auto it = std::find(kPhi2.begin(), kPhi2.end(), pat);
        if (it == kPhi2.end()) throw ParseError("bit group at offset " + std::to_string(pos) + " is not a phi2 image");
        out.set(coord++, static_cast<int>(it - kPhi2.begin()));
    }
    return out;
}

std::size_t hamming_weight(const BinaryVector& b) noexcept {
    return static_cast<std::size_t>(std::count(b.bits().begin(), b.bits().end(), std::uint8_t{1}));
}

std::size_t gray_weight(const MixedVector& x) noexcept {
    std::size_t w = 0;
    for (Residue r : x.u()) w += r;
    for (Residue r : x.v()) w += kWeight4[r];
    for (Residue r : x.w()) w += kWeight8[r];
    return w;
}

MixedVector parse_vector(const AlphabetSplit& split, std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '|') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 3)
        throw ParseError("expected 3 '|'-separated blocks, found " + std::to_string(parts.size()));

    const std::size_t sizes[] = {split.alpha(), split.beta(), split.theta()};
    const char* names[] = {"Z2", "Z4", "Z8"};
    std::vector<int> entries;
    for (int b = 0; b < 3; ++b) {
        std::istringstream is{std::string(parts[b])};
        std::string tok;
        std::size_t count = 0;
        while (is >> tok) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw ParseError("invalid entry '" + tok + "'");
            entries.push_back(value);
            ++count;
        }
        if (count != sizes[b])
            throw ParseError(std::string(names[b]) + " block has " + std::to_string(count) + " entries, expected " +
                             std::to_string(sizes[b]));
    }
    return MixedVector::from_exact(split, entries);
}

} // namespace mixedcode

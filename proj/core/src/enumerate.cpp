#include "mixedcode/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

namespace mixedcode {

namespace {

constexpr std::uint8_t kWeightByWidth[4][8] = {
    {},
    {0, 1},
    {0, 1, 2, 1},
    {0, 1, 2, 3, 4, 3, 2, 1},
};

std::vector<unsigned> row_orders(const CodeType& t) {
    static constexpr unsigned kOrder[6] = {2, 4, 2, 8, 4, 2};
    std::vector<unsigned> out;
    for (std::size_t g = 0; g < 6; ++g) out.insert(out.end(), t.k[g], kOrder[g]);
    return out;
}

// Every coefficient vector of the mixed-radix counter, visited by adding one row per digit step.
// Wrapping digit i adds row i for the ord_i-th time, which returns its contribution to zero.
CodewordSet sweep(const MixedMatrix& rows, const std::vector<unsigned>& orders) {
    const Packer p(rows.split());
    std::vector<std::uint64_t> packed;
    for (const auto& r : rows.row_list()) packed.push_back(p.pack(r));

    std::size_t total = 1;
    for (unsigned o : orders) total *= o;
    std::vector<std::uint64_t> keys;
    keys.reserve(total);

    std::vector<unsigned> digit(orders.size(), 0);
    std::uint64_t cur = 0;
    keys.push_back(cur);
    for (;;) {
        std::size_t i = 0;
        for (; i < orders.size(); ++i) {
            cur = p.add(cur, packed[i]);
            if (++digit[i] < orders[i]) break;
            digit[i] = 0;
        }
        if (i == orders.size()) break;
        keys.push_back(cur);
    }
    return CodewordSet::from_keys(rows.split(), std::move(keys));
}

// Closed subgroup kept as a list plus a hash set.
struct Span {
    std::vector<std::uint64_t> elems{0};
    std::unordered_set<std::uint64_t> index{0};

    // Smallest j > 0 with j*g already in the span.
    std::size_t index_of(const Packer& p, std::uint64_t g) const {
        std::size_t j = 1;
        for (std::uint64_t m = g; !index.count(m); m = p.add(m, g)) ++j;
        return j;
    }

    // Adjoins g: the new span is the union of the cosets H + c*g, c < j.
    void extend(const Packer& p, std::uint64_t g) {
        const std::size_t base = elems.size();
        std::uint64_t m = g;
        while (!index.count(m)) {
            for (std::size_t i = 0; i < base; ++i) {
                const std::uint64_t x = p.add(elems[i], m);
                elems.push_back(x);
                index.insert(x);
            }
            m = p.add(m, g);
        }
    }
};

} // namespace

void EnumerationBudget::require_codewords(std::size_t log2, const std::string& what) const {
    if (log2 >= 63 || (std::uint64_t{1} << log2) > max_codewords)
        throw BudgetExceeded(what + " needs 2^" + std::to_string(log2) + " codewords, budget is " +
                                 std::to_string(max_codewords),
                             static_cast<double>(log2));
}

void EnumerationBudget::require_ambient(std::size_t log2, const std::string& what) const {
    if (log2 >= 63 || (std::uint64_t{1} << log2) > max_ambient)
        throw BudgetExceeded(what + " sweeps an ambient space of 2^" + std::to_string(log2) +
                                 " vectors, budget is " + std::to_string(max_ambient),
                             static_cast<double>(log2));
}

Packer::Packer(const AlphabetSplit& split) : split_(split) {
    bits_ = split.ambient_log2();
    if (bits_ > 64) throw DimensionError("split " + split.to_string() + " does not fit a 64-bit key");
    std::size_t pos = 0;
    for (std::size_t i = 0; i < split.length(); ++i) {
        const std::size_t w = bits_of(split.block_of(i));
        shift_.push_back(static_cast<std::uint8_t>(pos));
        width_.push_back(static_cast<std::uint8_t>(w));
        high_ |= std::uint64_t{1} << (pos + w - 1);
        ones_ |= std::uint64_t{1} << pos;
        pos += w;
    }
    full_ = bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
    low_ = full_ & ~high_;
}

std::uint64_t Packer::pack(const MixedVector& x) const {
    if (!(x.split() == split_)) throw DimensionError("pack: split mismatch");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < x.length(); ++i) key |= std::uint64_t{x[i]} << shift_[i];
    return key;
}

MixedVector Packer::unpack(std::uint64_t key) const {
    MixedVector x(split_);
    for (std::size_t i = 0; i < shift_.size(); ++i)
        x.set(i, static_cast<int>((key >> shift_[i]) & ((1u << width_[i]) - 1)));
    return x;
}

std::uint64_t Packer::scale(int d, std::uint64_t a) const noexcept {
    unsigned n = static_cast<unsigned>(((d % 8) + 8) % 8);
    std::uint64_t acc = 0;
    for (; n; n >>= 1, a = add(a, a))
        if (n & 1u) acc = add(acc, a);
    return acc;
}

Residue Packer::inner_product(std::uint64_t a, std::uint64_t b) const noexcept {
    unsigned acc = 0;
    for (std::size_t i = 0; i < shift_.size(); ++i) {
        const unsigned mask = (1u << width_[i]) - 1;
        const unsigned x = (a >> shift_[i]) & mask, y = (b >> shift_[i]) & mask;
        acc += (8u >> width_[i]) * x * y;
    }
    return static_cast<Residue>(acc & 7u);
}

std::size_t Packer::gray_weight(std::uint64_t a) const noexcept {
    std::size_t w = 0;
    for (std::size_t i = 0; i < shift_.size(); ++i)
        w += kWeightByWidth[width_[i]][(a >> shift_[i]) & ((1u << width_[i]) - 1)];
    return w;
}

CodewordSet CodewordSet::from_keys(const AlphabetSplit& split, std::vector<std::uint64_t> keys) {
    CodewordSet s(split);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    s.keys_ = std::move(keys);
    return s;
}

CodewordSet CodewordSet::from_vectors(const AlphabetSplit& split, const std::vector<MixedVector>& words) {
    const Packer p(split);
    std::vector<std::uint64_t> keys;
    keys.reserve(words.size());
    for (const auto& w : words) keys.push_back(p.pack(w));
    return from_keys(split, std::move(keys));
}

bool CodewordSet::contains_key(std::uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
}

std::vector<MixedVector> CodewordSet::vectors() const {
    std::vector<MixedVector> out;
    out.reserve(keys_.size());
    for (auto k : keys_) out.push_back(packer_.unpack(k));
    std::sort(out.begin(), out.end());
    return out;
}

CodewordSet enumerate_codewords(const StandardFormBlocks& b, const EnumerationBudget& budget) {
    budget.require_codewords(cardinality(b.type).log2, "enumeration");
    return sweep(b.assemble(), row_orders(b.type));
}

CodewordSet enumerate_codewords(const StandardForm& form, const EnumerationBudget& budget) {
    budget.require_codewords(cardinality(form.type()).log2, "enumeration");
    return sweep(form.original_matrix(), row_orders(form.type()));
}

CodewordSet enumerate_codewords(const MixedMatrix& g, const EnumerationBudget& budget) {
    return enumerate_codewords(standard_form(g), budget);
}

CodewordSet span_closure(const MixedMatrix& g, const EnumerationBudget& budget) {
    const Packer p(g.split());
    Span span;
    for (const auto& row : g.row_list()) {
        const std::uint64_t key = p.pack(row);
        const std::size_t j = span.index_of(p, key);
        if (j == 1) continue;
        const std::size_t grown = span.elems.size() * j;
        if (grown > budget.max_codewords)
            throw BudgetExceeded("span closure grew past " + std::to_string(budget.max_codewords) + " codewords",
                                 std::log2(static_cast<double>(grown)));
        span.extend(p, key);
    }
    return CodewordSet::from_keys(g.split(), std::move(span.elems));
}

SubgroupReport check_subgroup(const CodewordSet& s) {
    const Packer& p = s.packer();
    if (!s.contains_key(0)) return {false, "zero vector missing"};
    Span span;
    for (std::uint64_t g : s.keys()) {
        if (span.index.count(g)) continue;
        const std::size_t base = span.elems.size();
        std::uint64_t prev = 0, m = g;
        while (!span.index.count(m)) {
            for (std::size_t i = 0; i < base; ++i) {
                const std::uint64_t x = p.add(span.elems[i], m);
                if (!s.contains_key(x)) {
                    const std::uint64_t y = p.add(span.elems[i], prev);
                    return {false, p.unpack(y).to_string() + " + " + p.unpack(g).to_string() + " = " +
                                       p.unpack(x).to_string() + " is not in the set"};
                }
                span.elems.push_back(x);
                span.index.insert(x);
            }
            prev = m;
            m = p.add(m, g);
        }
    }
    return {};
}

MixedMatrix generating_set(const CodewordSet& s) {
    const Packer& p = s.packer();
    MixedMatrix out(s.split());
    Span span;
    for (std::uint64_t g : s.keys()) {
        if (span.index.count(g)) continue;
        span.extend(p, g);
        out.append(p.unpack(g));
    }
    return out;
}

CodewordSet brute_force_dual(const CodewordSet& c, const EnumerationBudget& budget) {
    const Packer& p = c.packer();
    budget.require_ambient(p.bits(), "brute-force dual");
    std::vector<std::uint64_t> gens;
    const MixedMatrix basis = generating_set(c);
    for (const auto& r : basis.row_list()) gens.push_back(p.pack(r));

    std::vector<std::uint64_t> keys;
    const std::uint64_t end = std::uint64_t{1} << p.bits();
    for (std::uint64_t v = 0; v < end; ++v) {
        bool orthogonal = true;
        for (std::uint64_t g : gens)
            if (p.inner_product(v, g)) {
                orthogonal = false;
                break;
            }
        if (orthogonal) keys.push_back(v);
    }
    return CodewordSet::from_keys(c.split(), std::move(keys));
}

std::vector<BinaryVector> gray_image(const CodewordSet& c) {
    std::vector<BinaryVector> out;
    out.reserve(c.size());
    for (const auto& w : c.vectors()) out.push_back(gray_map(w));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Checks that Phi(a) xor Phi(b) is again the image of a member.
template <class Member>
bool gray_pair_closed(const AlphabetSplit& split, const MixedVector& a, const MixedVector& b, Member&& member,
                      std::string& witness) {
    BinaryVector sum = gray_map(a);
    sum ^= gray_map(b);
    try {
        if (member(gray_unmap(split, sum))) return true;
    } catch (const ParseError&) {
    }
    witness = "Phi(" + a.to_string() + ") xor Phi(" + b.to_string() + ") = " + sum.to_string() +
              " is not in the Gray image";
    return false;
}

} // namespace

LinearityReport check_gray_linearity(const CodewordSet& c, const EnumerationBudget& budget, std::uint64_t seed,
                                     std::size_t samples) {
    LinearityReport rep;
    const auto words = c.vectors();
    const auto member = [&](const MixedVector& x) { return c.contains(x); };
    const std::uint64_t n = words.size();
    if (n * n <= budget.max_codewords) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                ++rep.pairs_checked;
                if (!gray_pair_closed(c.split(), words[i], words[j], member, rep.witness)) {
                    rep.linear = false;
                    return rep;
                }
            }
        return rep;
    }
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        ++rep.pairs_checked;
        if (!gray_pair_closed(c.split(), words[pick(rng)], words[pick(rng)], member, rep.witness)) {
            rep.linear = false;
            return rep;
        }
    }
    return rep;
}

LinearityReport check_gray_linearity(const StandardForm& form, std::uint64_t seed, std::size_t samples) {
    LinearityReport rep;
    rep.exhaustive = false;
    const MixedMatrix rows = form.original_matrix();
    const auto orders = row_orders(form.type());
    std::mt19937_64 rng(seed);
    auto random_word = [&] {
        MixedVector x(rows.split());
        for (std::size_t i = 0; i < rows.rows(); ++i)
            x += scalar_mul(static_cast<int>(rng() % orders[i]), rows.row(i));
        return x;
    };
    const auto member = [&](const MixedVector& x) { return form.contains(x); };
    for (std::size_t s = 0; s < samples; ++s) {
        ++rep.pairs_checked;
        const MixedVector a = random_word(), b = random_word();
        if (!gray_pair_closed(rows.split(), a, b, member, rep.witness)) {
            rep.linear = false;
            return rep;
        }
    }
    return rep;
}

DistanceResult min_gray_distance(const CodewordSet& c) {
    const Packer& p = c.packer();
    DistanceResult res;
    for (std::uint64_t k : c.keys()) {
        if (!k) continue;
        const std::size_t w = p.gray_weight(k);
        if (!res.witness || w < res.distance) {
            res.distance = w;
            res.witness = p.unpack(k);
        }
    }
    return res;
}

DistanceResult min_gray_distance(const MixedMatrix& g, const EnumerationBudget& budget, std::uint64_t seed,
                                 std::size_t samples) {
    const StandardForm form = standard_form(g);
    const std::size_t log2 = cardinality(form.type()).log2;
    if (log2 < 63 && (std::uint64_t{1} << log2) <= budget.max_codewords)
        return min_gray_distance(enumerate_codewords(form, budget));
    return search_min_gray_distance(g, seed, samples);
}

DistanceResult search_min_gray_distance(const MixedMatrix& g, std::uint64_t seed, std::size_t samples) {
    const Packer p(g.split());
    std::vector<std::uint64_t> rows;
    std::vector<unsigned> ord;
    for (const auto& r : g.row_list())
        if (!r.is_zero()) {
            rows.push_back(p.pack(r));
            ord.push_back(r.order());
        }

    DistanceResult res;
    res.exact = false;
    std::uint64_t best = 0;
    auto consider = [&](std::uint64_t k) {
        if (!k) return;
        const std::size_t w = p.gray_weight(k);
        if (!best || w < res.distance) {
            best = k;
            res.distance = w;
        }
    };

    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t a = 0;
        for (unsigned ci = 1; ci < ord[i]; ++ci) {
            a = p.add(a, rows[i]);
            consider(a);
            for (std::size_t j = i + 1; j < n; ++j) {
                std::uint64_t b = a;
                for (unsigned cj = 1; cj < ord[j]; ++cj) {
                    b = p.add(b, rows[j]);
                    consider(b);
                }
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples && n; ++s) {
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < n; ++i) x = p.add(x, p.scale(static_cast<int>(rng() % ord[i]), rows[i]));
        consider(x);
    }
    if (best) res.witness = p.unpack(best);
    return res;
}

} // namespace mixedcode

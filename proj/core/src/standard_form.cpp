#include "mixedcode/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixedcode {

namespace {

// Reduction phases in the order they run, with the pivot value each one installs.
// Units of Z8 first, then units of Z4, then the 2-multiples of Z8, and so on down to 4 in Z8.
// Order-4 rows carrying a Z4 unit must become k1 rows, which is why Z4 units precede the
// valuation-1 Z8 pivots.
struct Phase {
    Block block;
    int pivot;    // 1, 2 or 4
    std::size_t group; // index into k0..k5
};
constexpr Phase kPhases[] = {
    {Block::Z8, 1, 3}, {Block::Z4, 1, 1}, {Block::Z8, 2, 4},
    {Block::Z2, 1, 0}, {Block::Z4, 2, 2}, {Block::Z8, 4, 5},
};

int odd_part(int value) {
    while (value && value % 2 == 0) value /= 2;
    return value;
}

// 2-adic valuation of a nonzero residue, read in its own modulus.
int valuation(int value) {
    int v = 0;
    while (value % 2 == 0) {
        value /= 2;
        ++v;
    }
    return v;
}

struct Pivot {
    std::size_t row; // index into work
    std::size_t col; // absolute coordinate
};

class Reducer {
public:
    explicit Reducer(const MixedMatrix& g) : split_(g.split()) {
        for (const auto& r : g.row_list())
            if (!r.is_zero()) work_.push_back(r);
        remaining_.resize(work_.size());
        for (std::size_t i = 0; i < work_.size(); ++i) remaining_[i] = i;
        used_.assign(split_.length(), false);
    }

    void run() {
        for (const Phase& ph : kPhases) run_phase(ph);
        for (std::size_t r : remaining_)
            if (!work_[r].is_zero())
                throw std::logic_error("standard_form: row " + work_[r].to_string() + " survived reduction");
    }

    StandardForm result() const {
        CodeType t{split_.alpha(), split_.beta(), split_.theta(), {}};
        for (std::size_t g = 0; g < 6; ++g) t.k[g] = groups_[g].size();

        ColumnPermutation perm;
        auto block_perm = [&](Block b, std::initializer_list<std::size_t> group_order) {
            std::vector<std::size_t> p;
            const std::size_t off = split_.offset(b);
            for (std::size_t g : group_order)
                for (const Pivot& pv : groups_[g]) p.push_back(pv.col - off);
            for (std::size_t c = 0; c < split_.size(b); ++c)
                if (!used_[off + c]) p.push_back(c);
            return p;
        };
        perm.z2 = block_perm(Block::Z2, {0});
        perm.z4 = block_perm(Block::Z4, {1, 2});
        perm.z8 = block_perm(Block::Z8, {3, 4, 5});

        MixedMatrix ordered(split_);
        for (const auto& grp : groups_)
            for (const Pivot& pv : grp) ordered.append(work_[pv.row]);
        MixedMatrix gs = perm.apply(ordered);

        StandardFormBlocks blocks = StandardFormBlocks::from_matrix(gs, t);
        if (!(blocks.assemble() == gs))
            throw std::logic_error("standard_form: reduced matrix does not match the block layout");
        return StandardForm{std::move(blocks), std::move(perm), std::move(gs)};
    }

private:
    void run_phase(const Phase& ph) {
        const std::size_t off = split_.offset(ph.block);
        const std::size_t len = split_.size(ph.block);
        const int want = valuation(ph.pivot);
        for (;;) {
            bool found = false;
            Pivot pv{};
            for (std::size_t c = off; c < off + len && !found; ++c) {
                if (used_[c]) continue;
                for (std::size_t r : remaining_) {
                    const int e = work_[r][c];
                    if (e != 0 && valuation(e) == want) {
                        pv = {r, c};
                        found = true;
                        break;
                    }
                }
            }
            if (!found) return;

            // odd units are self-inverse mod 8, so scaling by the odd part normalises the pivot
            work_[pv.row] = scalar_mul(odd_part(work_[pv.row][pv.col]), work_[pv.row]);
            for (std::size_t r = 0; r < work_.size(); ++r) {
                if (r == pv.row) continue;
                const int c = work_[r][pv.col] / ph.pivot;
                if (c) work_[r] -= scalar_mul(c, work_[pv.row]);
            }
            used_[pv.col] = true;
            groups_[ph.group].push_back(pv);
            remaining_.erase(std::find(remaining_.begin(), remaining_.end(), pv.row));
        }
    }

    AlphabetSplit split_;
    std::vector<MixedVector> work_;
    std::vector<std::size_t> remaining_;
    std::vector<bool> used_;
    std::array<std::vector<Pivot>, 6> groups_;
};

} // namespace

StandardForm standard_form(const MixedMatrix& g) {
    Reducer red(g);
    red.run();
    return red.result();
}

bool StandardForm::contains(const MixedVector& x) const {
    if (!(x.split() == matrix.split())) throw DimensionError("contains: split mismatch");
    const CodeType& t = type();
    const auto& sp = matrix.split();
    MixedVector y = permutation.apply(x);

    std::array<std::size_t, 6> row0{};
    for (std::size_t g = 1; g < 6; ++g) row0[g] = row0[g - 1] + t.k[g - 1];
    const std::array<std::size_t, 6> col0{
        sp.offset(Block::Z2),
        sp.offset(Block::Z4),
        sp.offset(Block::Z4) + t.k[1],
        sp.offset(Block::Z8),
        sp.offset(Block::Z8) + t.k[3],
        sp.offset(Block::Z8) + t.k[3] + t.k[4],
    };

    // pivot columns of a group are zero in every row of later groups in this order
    for (const Phase& ph : kPhases) {
        const std::size_t g = ph.group;
        for (std::size_t i = 0; i < t.k[g]; ++i) {
            const int e = y[col0[g] + i];
            if (e % ph.pivot) return false;
            if (e) y -= scalar_mul(e / ph.pivot, matrix.row(row0[g] + i));
        }
    }
    return y.is_zero();
}

} // namespace mixedcode

#include "mixedcode/matrix.hpp"

namespace mixedcode {

namespace {

// One horizontal band of H, split along the standard-form column groups
// (k0 | alpha-k0 | k1 | k2 | beta-k1-k2 | k3 | k4 | k5 | theta-k3-k4-k5).
struct Band {
    IntBlock x0, x1, y1, y2, y3, z3, z4, z5, z6;
};

Band zero_band(std::size_t rows, const CodeType& t) {
    const std::size_t f2 = t.alpha - t.k[0], f4 = t.beta - t.k[1] - t.k[2];
    const std::size_t f8 = t.theta - t.k[3] - t.k[4] - t.k[5];
    return Band{IntBlock(rows, t.k[0]), IntBlock(rows, f2),   IntBlock(rows, t.k[1]),
                IntBlock(rows, t.k[2]), IntBlock(rows, f4),   IntBlock(rows, t.k[3]),
                IntBlock(rows, t.k[4]), IntBlock(rows, t.k[5]), IntBlock(rows, f8)};
}

void emit(MixedMatrix& h, const Band& band) {
    const AlphabetSplit sp = h.split();
    const IntBlock* parts[] = {&band.x0, &band.x1, &band.y1, &band.y2, &band.y3,
                               &band.z3, &band.z4, &band.z5, &band.z6};
    for (std::size_t r = 0; r < band.x1.rows(); ++r) {
        std::vector<int> entries;
        entries.reserve(sp.length());
        for (const IntBlock* p : parts)
            for (std::size_t c = 0; c < p->cols(); ++c) entries.push_back((*p)(r, c));
        h.append(MixedVector(sp, entries));
    }
}

} // namespace

// Bands follow the printed parity-check layout: identity on the free Z2 columns, identity on the
// free Z4 columns, 2I on the k2 columns, identity on the free Z8 columns, 2I on the k5 columns,
// 4I on the k4 columns. Every remaining block solves G_S H^t = 0 for that band.
MixedMatrix dual_matrix(const StandardFormBlocks& b) {
    const CodeType& t = b.type;
    const std::size_t k2 = t.k[2], k4 = t.k[4], k5 = t.k[5];
    const std::size_t f2 = t.alpha - t.k[0], f4 = t.beta - t.k[1] - t.k[2];
    const std::size_t f8 = t.theta - t.k[3] - t.k[4] - t.k[5];

    const IntBlock A01bT = b.A01b.transpose(), S1bT = b.S1b.transpose(), S2bT = b.S2b.transpose(),
                   S3bT = b.S3b.transpose();
    const IntBlock B01T = b.B01.transpose(), B02T = b.B02.transpose(), B12T = b.B12.transpose(),
                   S01T = b.S01.transpose(), S02T = b.S02.transpose(), S12T = b.S12.transpose();
    const IntBlock T1T = b.T1.transpose(), T2T = b.T2.transpose(), T3T = b.T3.transpose(),
                   T4T = b.T4.transpose(), T5T = b.T5.transpose();
    const IntBlock A01T = b.A01.transpose(), A02T = b.A02.transpose(), A03T = b.A03.transpose(),
                   A12T = b.A12.transpose(), A13T = b.A13.transpose(), A23T = b.A23.transpose();

    MixedMatrix h(b.split());

    Band free2 = zero_band(f2, t);
    free2.x0 = -A01bT;
    free2.x1 = IntBlock::identity(f2);
    free2.y1 = S1bT.scaled(-2);
    free2.z3 = S2bT.scaled(-4) + (S3bT * A01T).scaled(2);
    free2.z4 = S3bT.scaled(-2);
    emit(h, free2);

    Band free4 = zero_band(f4, t);
    free4.x0 = -T1T;
    free4.y1 = -B02T - B12T * B01T;
    free4.y2 = B12T;
    free4.y3 = IntBlock::identity(f4);
    free4.z3 = (B12T * S01T).scaled(-2) - S02T.scaled(2) + (S12T * A01T).scaled(2);
    free4.z4 = S12T.scaled(-2);
    emit(h, free4);

    Band two_k2 = zero_band(k2, t);
    two_k2.y1 = B01T.scaled(-2);
    two_k2.y2 = IntBlock::identity(k2).scaled(2);
    two_k2.z3 = S01T.scaled(-4);
    emit(h, two_k2);

    Band free8 = zero_band(f8, t);
    free8.x0 = -T2T;
    free8.y1 = -T4T + A23T * T3T + T5T * B01T;
    free8.y2 = -T5T;
    free8.z3 = -A03T + A13T * A01T + A23T * A02T - A23T * A12T * A01T + (T5T * S01T).scaled(2);
    free8.z4 = -A13T + A23T * A12T;
    free8.z5 = -A23T;
    free8.z6 = IntBlock::identity(f8);
    emit(h, free8);

    Band two_k5 = zero_band(k5, t);
    two_k5.y1 = T3T.scaled(-2);
    two_k5.z3 = A02T.scaled(-2) + (A12T * A01T).scaled(2);
    two_k5.z4 = A12T.scaled(-2);
    two_k5.z5 = IntBlock::identity(k5).scaled(2);
    emit(h, two_k5);

    Band four_k4 = zero_band(k4, t);
    four_k4.z3 = A01T.scaled(-4);
    four_k4.z4 = IntBlock::identity(k4).scaled(4);
    emit(h, four_k4);

    if (auto w = find_non_orthogonal(b.assemble(), h))
        throw ConstructionMismatch("parity-check row " + std::to_string(w->h_row) + " has inner product " +
                                       std::to_string(int(w->value)) + " with generator row " +
                                       std::to_string(w->g_row),
                                   w->g_row, w->h_row, w->value);
    return h;
}

} // namespace mixedcode

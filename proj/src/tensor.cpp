#include "pms/tensor.hpp"

#include <stdexcept>

namespace pms {

namespace {

void check_letter(const FinitePointedSpace& x, TensorPoint p) {
    if (p.letter >= static_cast<Letter>(letter_count(x.arity)))
        throw std::invalid_argument("tensor letter does not match space arity");
    if (p.point < 0 || p.point >= x.size())
        throw std::invalid_argument("tensor point index out of range");
}

}  // namespace

Dyadic tensor_dist_2(const FinitePointedSpace& x, TensorPoint p, TensorPoint q) {
    if (x.arity != Arity::Two)
        throw std::invalid_argument("tensor_dist_2 needs a bi-pointed space");
    check_letter(x, p);
    check_letter(x, q);
    if (p.letter == q.letter) return x.d(p.point, q.point).half();
    if (p.letter != 0) std::swap(p, q);  // orient: p in the l copy, q in the r copy
    int bot = x.distinguished[0], top = x.distinguished[1];
    return (x.d(p.point, top) + x.d(bot, q.point)).half();
}

Dyadic tensor_dist_3(const FinitePointedSpace& x, TensorPoint p, TensorPoint q) {
    if (x.arity != Arity::Three)
        throw std::invalid_argument("tensor_dist_3 needs a tri-pointed space");
    check_letter(x, p);
    check_letter(x, q);
    Letter m = p.letter, n = q.letter;
    if (m == n) return x.d(p.point, q.point).half();
    Letter third = static_cast<Letter>(3 - m - n);
    auto [u, v] = GluingTable::shared_vertex(m, n);
    auto [u2, unused1] = GluingTable::shared_vertex(m, third);
    auto [v2, unused2] = GluingTable::shared_vertex(n, third);
    (void)unused1;
    (void)unused2;
    Dyadic direct = x.d(p.point, x.distinguished[u]) + x.d(x.distinguished[v], q.point);
    Dyadic detour = x.d(p.point, x.distinguished[u2]) + Dyadic{1} +
                    x.d(q.point, x.distinguished[v2]);
    return min(direct, detour).half();
}

Dyadic tensor_dist(const FinitePointedSpace& x, TensorPoint p, TensorPoint q) {
    return x.arity == Arity::Two ? tensor_dist_2(x, p, q) : tensor_dist_3(x, p, q);
}

void PointedMap::check_pointed() const {
    if (!from || !to || static_cast<int>(image.size()) != from->size())
        throw std::invalid_argument("malformed pointed map");
    if (from->arity != to->arity)
        throw std::invalid_argument("pointed map across arities");
    for (std::size_t k = 0; k < from->distinguished.size(); ++k)
        if (image[from->distinguished[k]] != to->distinguished[k])
            throw std::invalid_argument("map does not preserve distinguished points");
}

TensorPoint functor_apply(const PointedMap& f, TensorPoint p) {
    f.check_pointed();
    check_letter(*f.from, p);
    return {p.letter, f.apply(p.point)};
}

namespace {

struct PairScan {
    bool holds = true;
    std::optional<DyadicRatio> best;
    std::optional<std::pair<TensorPoint, TensorPoint>> witness;
};

/// Scans all pairs (i, j) with the given distance functions and updates the
/// property verdict plus the best Lipschitz constant seen so far.
template <typename DistA, typename DistB, typename Pt>
PairScan scan_pairs(const std::vector<Pt>& pts, DistA da, DistB db, MapProperty prop) {
    PairScan s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Dyadic din = da(pts[i], pts[j]);
            Dyadic dout = db(pts[i], pts[j]);
            bool pair_ok = true;
            switch (prop) {
                case MapProperty::Short:
                    pair_ok = dout <= din;
                    break;
                case MapProperty::IsometricEmbedding:
                    pair_ok = dout == din;
                    break;
                case MapProperty::Lipschitz:
                    break;  // always "holds"; the constant is the answer
            }
            if (!din.is_zero()) {
                auto r = DyadicRatio::of(dout, din);
                if (!s.best || *s.best < r) s.best = r;
            } else if (!dout.is_zero() && prop == MapProperty::Lipschitz) {
                pair_ok = false;  // zero distance blown up: no constant exists
            }
            if (!pair_ok && s.holds) {
                s.holds = false;
                if constexpr (std::is_same_v<Pt, TensorPoint>)
                    s.witness = std::make_pair(pts[i], pts[j]);
            }
        }
    }
    return s;
}

}  // namespace

MapPropertyReport check_map_property(const PointedMap& f, MapProperty prop) {
    f.check_pointed();
    const FinitePointedSpace& X = *f.from;
    const FinitePointedSpace& Y = *f.to;

    std::vector<int> base_pts(X.size());
    for (int i = 0; i < X.size(); ++i) base_pts[i] = i;
    PairScan base = scan_pairs(
        base_pts, [&](int i, int j) { return X.d(i, j); },
        [&](int i, int j) { return Y.d(f.apply(i), f.apply(j)); }, prop);

    std::vector<TensorPoint> tpts;
    for (Letter m = 0; m < letter_count(X.arity); ++m)
        for (int i = 0; i < X.size(); ++i) tpts.push_back({m, i});
    PairScan tens = scan_pairs(
        tpts, [&](TensorPoint p, TensorPoint q) { return tensor_dist(X, p, q); },
        [&](TensorPoint p, TensorPoint q) {
            return tensor_dist(Y, functor_apply(f, p), functor_apply(f, q));
        },
        prop);

    MapPropertyReport rep;
    rep.base_holds = base.holds;
    rep.tensor_holds = tens.holds;
    rep.base_constant = base.best;
    rep.tensor_constant = tens.best;
    rep.tensor_witness = tens.witness;
    return rep;
}

}  // namespace pms

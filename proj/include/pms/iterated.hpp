#pragma once

#include "pms/space.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace pms {

/// Distance in Mᵖ⊗X for an arbitrary carrier X, given its metric and its
/// distinguished points: the same recursion as the word metric, with the
/// base case delegated to X. Used to check that replacing base symbols by
/// carrier points is an isometric embedding and to compare iterate words
/// against their unbarred carrier residues.
template <typename Pt>
class IteratedTensorMetric {
public:
    using DistFn = std::function<Dyadic(const Pt&, const Pt&)>;

    IteratedTensorMetric(Arity arity, DistFn dist, std::vector<Pt> distinguished)
        : arity_(arity), dist_(std::move(dist)), distinguished_(std::move(distinguished)) {}

    Dyadic operator()(std::span<const Letter> wl, const Pt& wx,
                      std::span<const Letter> vl, const Pt& vx) const {
        if (wl.size() != vl.size())
            throw std::invalid_argument("iterated tensor distance needs equal depths");
        return rec(wl, wx, vl, vx);
    }

private:
    Dyadic rec(std::span<const Letter> wl, const Pt& wx, std::span<const Letter> vl,
               const Pt& vx) const {
        if (wl.empty()) return dist_(wx, vx);
        Letter m = wl.front(), n = vl.front();
        if (m == n) return rec(wl.subspan(1), wx, vl.subspan(1), vx).half();
        if (arity_ == Arity::Two) {
            if (m != 0) return rec(vl, vx, wl, wx);
            return (to_vertex(wl.subspan(1), wx, 1) + to_vertex(vl.subspan(1), vx, 0))
                .half();
        }
        Letter third = static_cast<Letter>(3 - m - n);
        auto [u, v] = GluingTable::shared_vertex(m, n);
        auto [u2, x1] = GluingTable::shared_vertex(m, third);
        auto [v2, x2] = GluingTable::shared_vertex(n, third);
        (void)x1;
        (void)x2;
        Dyadic direct = to_vertex(wl.subspan(1), wx, u) + to_vertex(vl.subspan(1), vx, v);
        Dyadic detour = to_vertex(wl.subspan(1), wx, u2) + Dyadic{1} +
                        to_vertex(vl.subspan(1), vx, v2);
        return min(direct, detour).half();
    }

    /// Distance to the distinguished point d realized at this depth (whose
    /// address repeats d's extension letter).
    Dyadic to_vertex(std::span<const Letter> wl, const Pt& wx, BaseSymbol d) const {
        std::vector<Letter> letters(wl.size(), static_cast<Letter>(d));
        return rec(wl, wx, letters, distinguished_[d]);
    }

    Arity arity_;
    DistFn dist_;
    std::vector<Pt> distinguished_;
};

}  // namespace pms

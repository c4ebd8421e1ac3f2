#pragma once

#include "pms/space.hpp"

#include <optional>
#include <vector>

namespace pms {

/// A point m⊗x of M⊗X, before quotienting: letter plus point index in X.
struct TensorPoint {
    Letter letter;
    int point;
    bool operator==(const TensorPoint&) const = default;
};

/// Quotient-metric distance on M₂⊗X.
Dyadic tensor_dist_2(const FinitePointedSpace& x, TensorPoint p, TensorPoint q);

/// Quotient-metric distance on M₃⊗X: same copy halves, different copies take
/// the min of the direct route through the shared vertex and the detour
/// through the third copy (crossing it costs its two glued vertices plus 1).
Dyadic tensor_dist_3(const FinitePointedSpace& x, TensorPoint p, TensorPoint q);

/// Dispatch on arity.
Dyadic tensor_dist(const FinitePointedSpace& x, TensorPoint p, TensorPoint q);

/// A distinguished-point-preserving map between finite pointed spaces,
/// given pointwise.
struct PointedMap {
    const FinitePointedSpace* from = nullptr;
    const FinitePointedSpace* to = nullptr;
    std::vector<int> image;  // image[i] = index in *to of the image of point i

    int apply(int i) const { return image[i]; }
    /// Throws if a distinguished point of `from` does not land on the
    /// corresponding distinguished point of `to`.
    void check_pointed() const;
};

/// F_i f: m⊗x ↦ m⊗f(x). Throws if f is not distinguished-preserving.
TensorPoint functor_apply(const PointedMap& f, TensorPoint p);

enum class MapProperty { Short, Lipschitz, IsometricEmbedding };

struct MapPropertyReport {
    bool base_holds = false;     // property for f itself
    bool tensor_holds = false;   // property for F_i f
    /// Best (smallest) Lipschitz constants, present when some pair has
    /// positive distance; absent for single-point degenerate cases.
    std::optional<DyadicRatio> base_constant;
    std::optional<DyadicRatio> tensor_constant;
    /// Witness pair for the first failure, as raw tensor points.
    std::optional<std::pair<TensorPoint, TensorPoint>> tensor_witness;
};

/// Exhaustively checks `prop` for f over all pairs of X, then for F_i f over
/// all raw pairs of M⊗X using tensor_dist. For Lipschitz the reported
/// constants are the exact best ones of each map.
MapPropertyReport check_map_property(const PointedMap& f, MapProperty prop);

}  // namespace pms

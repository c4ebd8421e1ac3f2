#pragma once

#include "pms/stream.hpp"
#include "pms/tensor.hpp"
#include "pms/word.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace pms {

/// A point of the triangle carrier △: the apex or a bottom-edge point (x, 0).
struct TrianglePoint {
    bool apex = false;
    Dyadic x;  // ignored when apex
    bool operator==(const TrianglePoint& o) const {
        return apex == o.apex && (apex || x == o.x);
    }
};

/// Exact carrier points for the builtin (co)algebras: a dyadic in [0,1],
/// a triangle point, or a label in a finite space.
using CarrierPoint = std::variant<Dyadic, TrianglePoint, std::string>;

std::string carrier_str(const CarrierPoint& p);

/// An executable coalgebra e : X → M⊗X. `branches` returns every applicable
/// branch in declaration order; `step` takes the first (the choice is
/// immaterial for the limit, and the test suites verify that).
struct CoalgebraSpec {
    std::string name;
    Arity arity;
    std::function<std::vector<std::pair<Letter, CarrierPoint>>(const CarrierPoint&)>
        branches;
    std::function<CarrierPoint(const std::string&)> parse_point;

    std::pair<Letter, CarrierPoint> step(const CarrierPoint& x) const;
};

/// An executable algebra e : M⊗X → X over a finite carrier, as a per-letter
/// point table. Must agree on glued tensor points.
struct AlgebraSpec {
    std::string name;
    FinitePointedSpace carrier;
    std::vector<std::vector<int>> op;  // op[letter][point] -> point

    int apply(Letter m, int point) const { return op[m][point]; }
    /// Throws naming the violated glued pair if op disagrees on a gluing.
    void check_gluing() const;
};

/// Runs the coalgebra p times from x, collecting letters, and closes with the
/// base symbol matched by the last letter (the x̄ rule).
AddressWord coalgebra_iterate(const CoalgebraSpec& c, const CarrierPoint& x, int p);

/// As coalgebra_iterate but taking the given branch index at the first step.
AddressWord coalgebra_iterate_branch(const CoalgebraSpec& c, const CarrierPoint& x,
                                     int branch, int p);

/// The unique map into the final coalgebra, as a coalgebra-generated stream:
/// its depth-p truncation is coalgebra_iterate(c, x, p).
CompletionPoint mediating_final(const CoalgebraSpec& c, const CarrierPoint& x);

/// Word distance between the two composites (M⊗f)∘e and ψ∘f at truncation
/// depth p. Bounded by 2/2^(p-1).
Dyadic check_coalgebra_square(const CoalgebraSpec& c, const CarrierPoint& x, int p);

/// The unique map out of the colimit: right fold of the word, starting from
/// the carrier's distinguished point named by the base symbol.
int algebra_fold(const AlgebraSpec& a, const AddressWord& w);

/// True iff algebra_fold(a, m·w) = op(m, algebra_fold(a, w)).
bool check_algebra_square(const AlgebraSpec& a, Letter m, const AddressWord& w);

/// Builtin registries; names: "interval-e", "triangle-e", "freyd-i" and
/// "bip-alg", "trip-alg". Throws std::invalid_argument on unknown names.
const CoalgebraSpec& builtin_coalgebra(const std::string& name);
const AlgebraSpec& builtin_algebra(const std::string& name);
std::vector<std::string> builtin_coalgebra_names();
std::vector<std::string> builtin_algebra_names();

}  // namespace pms

#pragma once

#include "pms/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pms {

/// A point of Mᵏ⊗I: finite letter sequence m₁…m_k plus a base symbol.
/// k = 0 is a point of the initial object itself.
struct AddressWord {
    Arity arity = Arity::Two;
    std::vector<Letter> letters;
    BaseSymbol base = 0;

    int depth() const { return static_cast<int>(letters.size()); }
    bool operator==(const AddressWord&) const = default;

    /// Text form: letters, ".", base — "llr.T", ".B". Rejects mixed alphabets.
    /// A bare ".T" is ambiguous; `expected` resolves it (defaults to tri).
    static AddressWord parse(const std::string& text,
                             std::optional<Arity> expected = std::nullopt);
    std::string str() const;

    /// The distinguished symbol d realized at this depth: d's extension letter
    /// is the letter whose tensor-distinguished point realizes it.
    static AddressWord vertex(Arity a, BaseSymbol d, int depth);
};

/// Exact quotient-metric distance in Mᵏ⊗I by structural recursion on the
/// tensor-metric formulas; words of unequal depth are first chain-embedded
/// to the common depth. Memoized per thread; depth is capped at 28.
Dyadic word_distance(const AddressWord& w, const AddressWord& v);

/// Canonical chain embedding: append the base symbol's extension letter
/// (⊥ extends by l, ⊤ by r; T by a, L by b, R by c) up to `depth`.
AddressWord embed(const AddressWord& w, int depth);

/// True iff the words denote the same colimit point: distance zero after
/// embedding to common depth.
bool words_equivalent(const AddressWord& w, const AddressWord& v);

/// The isometry c_k onto the depth-k dyadics: ⊥ ↦ 0, ⊤ ↦ 1, letter l halves,
/// letter r halves and shifts up. Bi-pointed words only.
Dyadic fold_dyadic(const AddressWord& w);

/// Independent bottom-up model of the quotient metric: at each level the
/// glued raw pairs are identified and the full distance table is closed by
/// all-pairs shortest path with exact dyadic weights.
class OracleTable {
public:
    /// depth caps: 10 (bi-pointed), 5 (tri-pointed).
    static OracleTable build(Arity arity, int depth);

    Arity arity() const { return arity_; }
    int depth() const { return depth_; }
    int size() const { return static_cast<int>(dist_.size()); }
    const Dyadic& d(int c1, int c2) const { return dist_[c1][c2]; }

    /// Quotient class of a word of exactly this depth.
    int class_of(const AddressWord& w) const;
    /// Some word representing the given class.
    const AddressWord& representative(int c) const { return reps_[c]; }
    /// Class indices of the distinguished points, in tag order.
    const std::vector<int>& distinguished() const { return distinguished_; }

private:
    Arity arity_ = Arity::Two;
    int depth_ = 0;
    std::vector<std::vector<Dyadic>> dist_;
    std::vector<AddressWord> reps_;
    std::vector<int> distinguished_;
    // raw_class_[level][letter * classes(level-1) + subclass] -> class at level
    std::vector<std::vector<int>> raw_class_;
    std::vector<int> level_sizes_;  // classes at each level 0..depth
};

/// Planar position under the standard half-scale gasket contractions toward
/// T=(1/2, √3/2), L=(0,0), R=(1,0). The y coordinate is kept exact as a
/// dyadic multiple of √3/2. Display only; no metric claim attached.
struct GasketCoords {
    Dyadic x;
    Dyadic y_scale;  // y = y_scale * √3/2
    std::string str() const;
};

GasketCoords gasket_coords(const AddressWord& w);

}  // namespace pms

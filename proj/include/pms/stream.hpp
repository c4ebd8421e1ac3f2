#pragma once

#include "pms/word.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace pms {

/// A point of the final-coalgebra carrier S: a total letter stream with
/// canonical-base truncations. Streams are immutable views; generated
/// streams cache their prefix so letter_at is pure and repeatable.
class CompletionPoint {
public:
    /// Finite prefix followed by a constant tail letter.
    static CompletionPoint eventually_constant(Arity arity,
                                               std::vector<Letter> prefix,
                                               Letter tail);
    /// Stream produced one letter at a time by `next` (stateful generator).
    static CompletionPoint generated(Arity arity, std::function<Letter()> next,
                                     std::string provenance);

    Arity arity() const;
    const std::string& provenance() const;

    /// 1-based letter access.
    Letter letter_at(int index) const;

    /// The stream with its head letter removed.
    CompletionPoint shifted() const;

    /// Parses "llr(r)*" style literals: finite prefix, then "(m)*" tail.
    static CompletionPoint parse(const std::string& text,
                                 std::optional<Arity> expected = std::nullopt);

private:
    struct State;
    std::shared_ptr<State> state_;
    int offset_ = 0;
};

/// θ_p: the depth-p word whose base is the distinguished symbol matched by
/// letter p (l→⊥, r→⊤; a→T, b→L, c→R). p = 0 is rejected: there is no
/// canonical base without a letter to read.
AddressWord truncate(const CompletionPoint& s, int p);

/// The final-coalgebra structure map: head letter plus the shifted stream.
std::pair<Letter, CompletionPoint> psi(const CompletionPoint& s);

/// Certified enclosure of a distance between completion points.
struct DistanceInterval {
    Dyadic lo;
    Dyadic hi;
    Dyadic width() const { return hi - lo; }
    bool contains(const Dyadic& v) const { return lo <= v && v <= hi; }
};

/// Distance between truncations at depth p, widened by the two Cauchy tails
/// (radius 2/2ᵖ) and clamped to [0, 1].
DistanceInterval completion_distance(const CompletionPoint& s,
                                     const CompletionPoint& t, int p);

}  // namespace pms

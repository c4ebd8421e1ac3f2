#pragma once

#include "pms/dyadic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pms {

/// The two fixed alphabets: {l, r} (bi-pointed) and {a, b, c} (tri-pointed).
enum class Arity : std::uint8_t { Two = 2, Three = 3 };

/// Letter index within the alphabet: l=0, r=1 or a=0, b=1, c=2.
using Letter = std::uint8_t;

/// Base / distinguished symbol index: Bot=0, Top=1 or T=0, L=1, R=2.
/// Letter i's distinguished tensor point carries base symbol i
/// (l⊗⊥ is ⊥, r⊗⊤ is ⊤; a⊗T is T, b⊗L is L, c⊗R is R).
using BaseSymbol = std::uint8_t;

inline int letter_count(Arity a) { return static_cast<int>(a); }

char letter_name(Arity a, Letter m);
char base_name(Arity a, BaseSymbol d);

/// Letter from its display name, -1 if not in the alphabet.
int letter_index(Arity a, char c);
int base_index(Arity a, char c);

/// The tri-pointed gluing relations, as seen from each copy:
/// a⊗L = b⊗T, a⊗R = c⊗T, c⊗L = b⊗R.
struct GluingTable {
    /// Shared vertex of copies m != n: first as seen in copy m, second in copy n.
    static std::pair<BaseSymbol, BaseSymbol> shared_vertex(Letter m, Letter n);
};

struct MetricViolation {
    enum class Kind {
        Structural,            // table shape broken
        NegativeDistance,
        IdentityFailure,       // d(x,x) != 0 or d(x,y) == 0 for x != y
        SymmetryFailure,
        TriangleFailure,
        OneBoundFailure,
        DistinguishedDistance  // distinct distinguished points not at distance 1
    };
    Kind kind;
    int i = -1, j = -1, k = -1;
    std::string describe() const;
};

struct ValidationReport {
    std::vector<MetricViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// A finite i-pointed metric space with an exact symmetric distance table.
struct FinitePointedSpace {
    Arity arity = Arity::Two;
    std::vector<std::string> labels;
    std::vector<int> distinguished;  // 2 or 3 point indices, in tag order
    std::vector<std::vector<Dyadic>> dist;

    int size() const { return static_cast<int>(labels.size()); }
    const Dyadic& d(int i, int j) const { return dist[i][j]; }

    int index_of(const std::string& label) const;

    /// The canonical bi-pointed two-point space {⊥,⊤} of Example 3.1.
    static FinitePointedSpace bipointed_x0();
    /// The canonical tri-pointed three-point space {T,L,R} of Example 3.2.
    static FinitePointedSpace tripointed_y0();
};

/// Brute-force check of every metric axiom instance plus the pointed-space
/// conditions (one-bound, distinguished pairs at distance 1).
ValidationReport validate_pointed_space(const FinitePointedSpace& s);

}  // namespace pms

#include "pms/space.hpp"

#include <stdexcept>

namespace pms {

char letter_name(Arity a, Letter m) {
    static constexpr char bi[] = {'l', 'r'};
    static constexpr char tri[] = {'a', 'b', 'c'};
    if (m >= static_cast<Letter>(letter_count(a)))
        throw std::invalid_argument("letter index out of range");
    return a == Arity::Two ? bi[m] : tri[m];
}

char base_name(Arity a, BaseSymbol d) {
    static constexpr char bi[] = {'B', 'T'};
    static constexpr char tri[] = {'T', 'L', 'R'};
    if (d >= static_cast<BaseSymbol>(letter_count(a)))
        throw std::invalid_argument("base symbol index out of range");
    return a == Arity::Two ? bi[d] : tri[d];
}

int letter_index(Arity a, char c) {
    for (int m = 0; m < letter_count(a); ++m)
        if (letter_name(a, static_cast<Letter>(m)) == c) return m;
    return -1;
}

int base_index(Arity a, char c) {
    for (int d = 0; d < letter_count(a); ++d)
        if (base_name(a, static_cast<BaseSymbol>(d)) == c) return d;
    return -1;
}

std::pair<BaseSymbol, BaseSymbol> GluingTable::shared_vertex(Letter m, Letter n) {
    if (m == n) throw std::invalid_argument("no shared vertex within one copy");
    if (m > n) {
        auto [v, u] = shared_vertex(n, m);
        return {u, v};
    }
    // a⊗L = b⊗T, a⊗R = c⊗T, c⊗L = b⊗R; T=0, L=1, R=2
    if (m == 0 && n == 1) return {1, 0};
    if (m == 0 && n == 2) return {2, 0};
    return {2, 1};  // (b, c)
}

std::string MetricViolation::describe() const {
    auto pts = [this] {
        std::string s = " (" + std::to_string(i);
        if (j >= 0) s += ", " + std::to_string(j);
        if (k >= 0) s += ", " + std::to_string(k);
        return s + ")";
    };
    switch (kind) {
        case Kind::Structural: return "table shape does not match point count";
        case Kind::NegativeDistance: return "negative distance" + pts();
        case Kind::IdentityFailure: return "identity of indiscernibles fails" + pts();
        case Kind::SymmetryFailure: return "symmetry fails" + pts();
        case Kind::TriangleFailure: return "triangle inequality fails" + pts();
        case Kind::OneBoundFailure: return "distance exceeds 1" + pts();
        case Kind::DistinguishedDistance:
            return "distinguished pair not at distance 1" + pts();
    }
    return "unknown";
}

int FinitePointedSpace::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) return i;
    throw std::invalid_argument("no such point: " + label);
}

FinitePointedSpace FinitePointedSpace::bipointed_x0() {
    FinitePointedSpace s;
    s.arity = Arity::Two;
    s.labels = {"0", "1"};
    s.distinguished = {0, 1};
    s.dist = {{Dyadic{0}, Dyadic{1}}, {Dyadic{1}, Dyadic{0}}};
    return s;
}

FinitePointedSpace FinitePointedSpace::tripointed_y0() {
    FinitePointedSpace s;
    s.arity = Arity::Three;
    s.labels = {"T", "L", "R"};
    s.distinguished = {0, 1, 2};
    s.dist.assign(3, std::vector<Dyadic>(3, Dyadic{1}));
    for (int i = 0; i < 3; ++i) s.dist[i][i] = Dyadic{0};
    return s;
}

ValidationReport validate_pointed_space(const FinitePointedSpace& s) {
    ValidationReport r;
    const int n = s.size();
    using K = MetricViolation::Kind;

    bool shape_ok = static_cast<int>(s.dist.size()) == n &&
                    static_cast<int>(s.distinguished.size()) == letter_count(s.arity);
    for (const auto& row : s.dist)
        shape_ok = shape_ok && static_cast<int>(row.size()) == n;
    for (int p : s.distinguished) shape_ok = shape_ok && p >= 0 && p < n;
    if (!shape_ok) {
        r.violations.push_back({K::Structural});
        return r;
    }

    for (int i = 0; i < n; ++i) {
        if (!s.d(i, i).is_zero())
            r.violations.push_back({K::IdentityFailure, i, i});
        for (int j = 0; j < n; ++j) {
            if (s.d(i, j).is_negative())
                r.violations.push_back({K::NegativeDistance, i, j});
            if (i != j && s.d(i, j).is_zero())
                r.violations.push_back({K::IdentityFailure, i, j});
            if (s.d(i, j) > Dyadic{1})
                r.violations.push_back({K::OneBoundFailure, i, j});
            if (i < j && s.d(i, j) != s.d(j, i))
                r.violations.push_back({K::SymmetryFailure, i, j});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (s.d(i, k) > s.d(i, j) + s.d(j, k))
                    r.violations.push_back({K::TriangleFailure, i, j, k});
    const auto& dp = s.distinguished;
    for (std::size_t i = 0; i < dp.size(); ++i)
        for (std::size_t j = i + 1; j < dp.size(); ++j)
            if (s.d(dp[i], dp[j]) != Dyadic{1})
                r.violations.push_back({K::DistinguishedDistance, dp[i], dp[j]});
    return r;
}

}  // namespace pms

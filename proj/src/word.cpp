#include "pms/word.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace pms {

namespace {

constexpr int kMaxMemoDepth = 28;  // 5 depth bits + 2 base bits + 2 per letter

/// Lightweight non-owning view of a word suffix.
struct WordView {
    Arity arity;
    const Letter* letters;
    int depth;
    BaseSymbol base;

    WordView tail() const { return {arity, letters + 1, depth - 1, base}; }
    Letter head() const { return letters[0]; }
};

WordView view_of(const AddressWord& w) {
    return {w.arity, w.letters.data(), w.depth(), w.base};
}

/// Vertex words have all letters equal to the symbol index, so their letter
/// storage can be shared.
const Letter* uniform_letters(Letter m) {
    static const std::array<std::array<Letter, kMaxMemoDepth>, 3> rows = [] {
        std::array<std::array<Letter, kMaxMemoDepth>, 3> r{};
        for (Letter m = 0; m < 3; ++m) r[m].fill(m);
        return r;
    }();
    return rows[m].data();
}

WordView vertex_view(Arity a, BaseSymbol d, int depth) {
    return {a, uniform_letters(d), depth, d};
}

std::uint64_t encode(const WordView& w) {
    if (w.depth > kMaxMemoDepth)
        throw std::invalid_argument("word depth exceeds supported maximum (28)");
    std::uint64_t e = static_cast<std::uint64_t>(w.depth) |
                      (static_cast<std::uint64_t>(w.base) << 5);
    for (int i = 0; i < w.depth; ++i)
        e |= static_cast<std::uint64_t>(w.letters[i]) << (7 + 2 * i);
    return e;
}

struct PairKey {
    std::uint64_t a, b;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        std::uint64_t h = k.a * 0x9e3779b97f4a7c15ull;
        h ^= k.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using Memo = std::unordered_map<PairKey, Dyadic, PairKeyHash>;

Dyadic dist_rec(const WordView& a, const WordView& b, Memo& memo) {
    if (a.depth == 0) return a.base == b.base ? Dyadic{0} : Dyadic{1};

    std::uint64_t ea = encode(a), eb = encode(b);
    PairKey key = ea <= eb ? PairKey{ea, eb} : PairKey{eb, ea};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Letter m = a.head(), n = b.head();
    Dyadic result;
    if (m == n) {
        result = dist_rec(a.tail(), b.tail(), memo).half();
    } else if (a.arity == Arity::Two) {
        const WordView& lhs = (m == 0) ? a : b;  // the copy glued at ⊤
        const WordView& rhs = (m == 0) ? b : a;
        int d = a.depth - 1;
        result = (dist_rec(lhs.tail(), vertex_view(a.arity, 1, d), memo) +
                  dist_rec(vertex_view(a.arity, 0, d), rhs.tail(), memo))
                     .half();
    } else {
        Letter third = static_cast<Letter>(3 - m - n);
        auto [u, v] = GluingTable::shared_vertex(m, n);
        auto [u2, mv] = GluingTable::shared_vertex(m, third);
        auto [v2, nv] = GluingTable::shared_vertex(n, third);
        (void)mv;
        (void)nv;
        int d = a.depth - 1;
        Dyadic direct = dist_rec(a.tail(), vertex_view(a.arity, u, d), memo) +
                        dist_rec(vertex_view(a.arity, v, d), b.tail(), memo);
        Dyadic detour = dist_rec(a.tail(), vertex_view(a.arity, u2, d), memo) +
                        Dyadic{1} +
                        dist_rec(b.tail(), vertex_view(a.arity, v2, d), memo);
        result = min(direct, detour).half();
    }
    memo.emplace(key, result);
    return result;
}

Memo& thread_memo(Arity a) {
    thread_local Memo memo2, memo3;
    return a == Arity::Two ? memo2 : memo3;
}

}  // namespace

AddressWord AddressWord::vertex(Arity a, BaseSymbol d, int depth) {
    if (d >= static_cast<BaseSymbol>(letter_count(a)))
        throw std::invalid_argument("base symbol out of range");
    AddressWord w;
    w.arity = a;
    w.base = d;
    w.letters.assign(depth, static_cast<Letter>(d));
    return w;
}

AddressWord AddressWord::parse(const std::string& text, std::optional<Arity> expected) {
    std::size_t dot = text.find('.');
    if (dot == std::string::npos || dot + 2 != text.size())
        throw std::invalid_argument("word must be LETTERS.BASE: " + text);
    std::string letters = text.substr(0, dot);
    char base_ch = text[dot + 1];

    std::optional<Arity> arity = expected;
    for (char c : letters) {
        Arity la;
        if (c == 'l' || c == 'r')
            la = Arity::Two;
        else if (c == 'a' || c == 'b' || c == 'c')
            la = Arity::Three;
        else
            throw std::invalid_argument(std::string("invalid letter '") + c + "'");
        if (arity && *arity != la)
            throw std::invalid_argument("mixed alphabets in word: " + text);
        arity = la;
    }
    if (!arity) {
        if (base_ch == 'B')
            arity = Arity::Two;
        else if (base_ch == 'L' || base_ch == 'R' || base_ch == 'T')
            arity = Arity::Three;  // bare ".T" defaults to tri-pointed
        else
            throw std::invalid_argument(std::string("invalid base '") + base_ch + "'");
    }

    AddressWord w;
    w.arity = *arity;
    for (char c : letters) w.letters.push_back(static_cast<Letter>(letter_index(w.arity, c)));
    int b = base_index(w.arity, base_ch);
    if (b < 0)
        throw std::invalid_argument(std::string("invalid base '") + base_ch +
                                    "' for this alphabet");
    w.base = static_cast<BaseSymbol>(b);
    return w;
}

std::string AddressWord::str() const {
    std::string s;
    for (Letter m : letters) s += letter_name(arity, m);
    s += '.';
    s += base_name(arity, base);
    return s;
}

AddressWord embed(const AddressWord& w, int depth) {
    if (depth < w.depth())
        throw std::invalid_argument("embed target depth below word depth");
    AddressWord out = w;
    out.letters.resize(depth, static_cast<Letter>(w.base));
    return out;
}

Dyadic word_distance(const AddressWord& w, const AddressWord& v) {
    if (w.arity != v.arity)
        throw std::invalid_argument("word_distance across alphabets");
    int depth = std::max(w.depth(), v.depth());
    AddressWord we = w.depth() < depth ? embed(w, depth) : w;
    AddressWord ve = v.depth() < depth ? embed(v, depth) : v;
    return dist_rec(view_of(we), view_of(ve), thread_memo(w.arity));
}

bool words_equivalent(const AddressWord& w, const AddressWord& v) {
    return word_distance(w, v).is_zero();
}

Dyadic fold_dyadic(const AddressWord& w) {
    if (w.arity != Arity::Two)
        throw std::invalid_argument("fold_dyadic is bi-pointed only");
    Dyadic val = w.base == 1 ? Dyadic{1} : Dyadic{0};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        val = (*it == 0) ? val.half() : (val + Dyadic{1}).half();
    return val;
}

OracleTable OracleTable::build(Arity arity, int depth) {
    int cap = arity == Arity::Two ? 10 : 5;
    if (depth < 0 || depth > cap)
        throw std::invalid_argument("oracle depth above cap");

    OracleTable t;
    t.arity_ = arity;
    t.depth_ = depth;
    const int na = letter_count(arity);

    // Level 0: the discrete distinguished metric.
    int n = na;
    std::vector<std::vector<Dyadic>> d(n, std::vector<Dyadic>(n, Dyadic{1}));
    for (int i = 0; i < n; ++i) d[i][i] = Dyadic{0};
    std::vector<int> dp(na);
    for (int i = 0; i < na; ++i) dp[i] = i;
    t.level_sizes_ = {n};
    t.raw_class_.emplace_back();  // unused slot for level 0

    for (int level = 1; level <= depth; ++level) {
        const int raw_n = na * n;
        auto raw_id = [&](Letter m, int c) { return m * n + c; };

        // Identify glued raw pairs with union-find.
        std::vector<int> parent(raw_n);
        for (int i = 0; i < raw_n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
        if (arity == Arity::Two) {
            unite(raw_id(0, dp[1]), raw_id(1, dp[0]));  // l⊗⊤ = r⊗⊥
        } else {
            unite(raw_id(0, dp[1]), raw_id(1, dp[0]));  // a⊗L = b⊗T
            unite(raw_id(0, dp[2]), raw_id(2, dp[0]));  // a⊗R = c⊗T
            unite(raw_id(2, dp[1]), raw_id(1, dp[2]));  // c⊗L = b⊗R
        }
        std::vector<int> cls(raw_n, -1);
        int next_n = 0;
        for (int i = 0; i < raw_n; ++i)
            if (find(i) == i) cls[i] = next_n++;
        for (int i = 0; i < raw_n; ++i) cls[i] = cls[find(i)];

        const Dyadic inf{2};
        std::vector<std::vector<Dyadic>> nd(next_n, std::vector<Dyadic>(next_n, inf));
        for (int i = 0; i < next_n; ++i) nd[i][i] = Dyadic{0};
        for (Letter m = 0; m < na; ++m)
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = 0; c2 < n; ++c2) {
                    int i = cls[raw_id(m, c1)], j = cls[raw_id(m, c2)];
                    Dyadic w = d[c1][c2].half();
                    if (w < nd[i][j]) nd[i][j] = nd[j][i] = w;
                }
        for (int k = 0; k < next_n; ++k)
            for (int i = 0; i < next_n; ++i) {
                if (nd[i][k] == inf) continue;
                for (int j = 0; j < next_n; ++j) {
                    Dyadic via = nd[i][k] + nd[k][j];
                    if (via < nd[i][j]) nd[i][j] = via;
                }
            }

        std::vector<int> ndp(na);
        for (int i = 0; i < na; ++i) ndp[i] = cls[raw_id(i, dp[i])];
        t.raw_class_.push_back(std::move(cls));
        d = std::move(nd);
        dp = std::move(ndp);
        n = next_n;
        t.level_sizes_.push_back(n);
    }

    t.dist_ = std::move(d);
    t.distinguished_ = std::move(dp);

    // One representative word per class, by enumerating all depth-level words.
    t.reps_.assign(n, AddressWord{});
    std::vector<bool> seen(n, false);
    AddressWord w;
    w.arity = arity;
    w.letters.assign(depth, 0);
    auto record = [&](const AddressWord& cand) {
        int c = t.class_of(cand);
        if (!seen[c]) {
            seen[c] = true;
            t.reps_[c] = cand;
        }
    };
    std::int64_t total = 1;
    for (int i = 0; i < depth; ++i) total *= na;
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t x = code;
        for (int i = 0; i < depth; ++i) {
            w.letters[i] = static_cast<Letter>(x % na);
            x /= na;
        }
        for (BaseSymbol b = 0; b < na; ++b) {
            w.base = b;
            record(w);
        }
    }
    return t;
}

int OracleTable::class_of(const AddressWord& w) const {
    if (w.arity != arity_ || w.depth() != depth_)
        throw std::invalid_argument("word does not match oracle level");
    const int na = letter_count(arity_);
    int c = w.base;
    for (int level = 1; level <= depth_; ++level) {
        Letter m = w.letters[depth_ - level];
        c = raw_class_[level][m * level_sizes_[level - 1] + c];
    }
    return c;
}

std::string GasketCoords::str() const {
    return "(" + x.str() + ", " + y_scale.str() + "*sqrt(3)/2)";
}

GasketCoords gasket_coords(const AddressWord& w) {
    if (w.arity != Arity::Three)
        throw std::invalid_argument("gasket_coords is tri-pointed only");
    // Vertices in symbol order T, L, R.
    static const Dyadic vx[3] = {Dyadic{BigInt{1}, 1}, Dyadic{0}, Dyadic{1}};
    static const Dyadic vy[3] = {Dyadic{1}, Dyadic{0}, Dyadic{0}};
    GasketCoords c{vx[w.base], vy[w.base]};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        c.x = (c.x + vx[*it]).half();
        c.y_scale = (c.y_scale + vy[*it]).half();
    }
    return c;
}

}  // namespace pms

#include "pms/verify.hpp"

#include "pms/experiments.hpp"
#include "pms/morphisms.hpp"
#include "pms/stream.hpp"
#include "pms/tensor.hpp"
#include "pms/word.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pms {

namespace {

std::vector<AddressWord> all_words(Arity arity, int depth) {
    const int na = letter_count(arity);
    std::int64_t total = 1;
    for (int i = 0; i < depth; ++i) total *= na;
    std::vector<AddressWord> out;
    out.reserve(static_cast<std::size_t>(total) * na);
    AddressWord w;
    w.arity = arity;
    w.letters.assign(depth, 0);
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t x = code;
        for (int i = 0; i < depth; ++i) {
            w.letters[i] = static_cast<Letter>(x % na);
            x /= na;
        }
        for (BaseSymbol b = 0; b < na; ++b) {
            w.base = b;
            out.push_back(w);
        }
    }
    return out;
}

CheckLine make_line(const std::string& name, bool pass, int checks,
                    const std::string& witness) {
    CheckLine l;
    l.name = name;
    l.pass = pass;
    l.detail = pass ? std::to_string(checks) + " checks" : witness;
    return l;
}

/// One accumulator per check line: counts instances, keeps the first witness.
struct Acc {
    int checks = 0;
    bool pass = true;
    std::string witness;
    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            witness = what;
        }
    }
    CheckLine line(const std::string& name) const {
        return make_line(name, pass, checks, witness);
    }
};

void suite_metric_axioms(SuiteResult& res, const VerifyCaps& caps) {
    for (Arity arity : {Arity::Two, Arity::Three}) {
        int cap = arity == Arity::Two ? caps.bi_depth : caps.tri_depth;
        for (int n = 1; n <= cap; ++n) {
            OracleTable t = OracleTable::build(arity, n);
            Acc acc;
            const int sz = t.size();
            for (int i = 0; i < sz; ++i) {
                acc.require(t.d(i, i).is_zero(), "nonzero diagonal");
                for (int j = 0; j < sz; ++j) {
                    if (i != j)
                        acc.require(!t.d(i, j).is_zero() && !t.d(i, j).is_negative(),
                                    "zero/negative distance between distinct classes");
                    acc.require(t.d(i, j) <= Dyadic{1}, "distance above 1");
                    if (i < j)
                        acc.require(t.d(i, j) == t.d(j, i), "asymmetric table");
                }
            }
            for (int i = 0; i < sz; ++i)
                for (int j = 0; j < sz; ++j)
                    for (int k = 0; k < sz; ++k)
                        acc.require(t.d(i, k) <= t.d(i, j) + t.d(j, k),
                                    "triangle inequality failure at level " +
                                        std::to_string(n));
            const auto& dp = t.distinguished();
            for (std::size_t i = 0; i < dp.size(); ++i)
                for (std::size_t j = i + 1; j < dp.size(); ++j)
                    acc.require(t.d(dp[i], dp[j]) == Dyadic{1},
                                "distinguished pair not at distance 1");
            std::string tag = arity == Arity::Two ? "bi" : "tri";
            res.lines.push_back(acc.line("metric-axioms/" + tag + "-n" + std::to_string(n)));
        }
    }

    Acc glue;
    auto wd = [](const char* a, const char* b) {
        return word_distance(AddressWord::parse(a), AddressWord::parse(b));
    };
    glue.require(wd("l.T", "r.B").is_zero(), "l⊗⊤ ≠ r⊗⊥");
    glue.require(wd("a.L", "b.T").is_zero(), "a⊗L ≠ b⊗T");
    glue.require(wd("a.R", "c.T").is_zero(), "a⊗R ≠ c⊗T");
    glue.require(wd("c.L", "b.R").is_zero(), "c⊗L ≠ b⊗R");
    glue.require(wd("l.B", "r.T") == Dyadic{1}, "d(l⊗⊥, r⊗⊤) ≠ 1");
    const auto x0 = FinitePointedSpace::bipointed_x0();
    const auto y0 = FinitePointedSpace::tripointed_y0();
    glue.require(tensor_dist_2(x0, {0, 1}, {1, 0}).is_zero(), "tensor l⊗⊤ ≠ r⊗⊥");
    glue.require(tensor_dist_2(x0, {0, 0}, {1, 1}) == Dyadic{1}, "tensor d(⊥,⊤) ≠ 1");
    glue.require(tensor_dist_3(y0, {0, 1}, {1, 0}).is_zero(), "tensor a⊗L ≠ b⊗T");
    glue.require(tensor_dist_3(y0, {0, 2}, {2, 0}).is_zero(), "tensor a⊗R ≠ c⊗T");
    glue.require(tensor_dist_3(y0, {2, 1}, {1, 2}).is_zero(), "tensor c⊗L ≠ b⊗R");
    res.lines.push_back(glue.line("metric-axioms/gluing"));
}

void suite_oracle(SuiteResult& res, const VerifyCaps& caps) {
    for (Arity arity : {Arity::Two, Arity::Three}) {
        int cap = arity == Arity::Two ? caps.bi_depth : caps.tri_depth;
        for (int n = 1; n <= cap; ++n) {
            OracleTable t = OracleTable::build(arity, n);
            auto words = all_words(arity, n);
            std::vector<int> cls(words.size());
            for (std::size_t i = 0; i < words.size(); ++i) cls[i] = t.class_of(words[i]);
            Acc acc;
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = i; j < words.size(); ++j)
                    acc.require(word_distance(words[i], words[j]) == t.d(cls[i], cls[j]),
                                "mismatch at " + words[i].str() + " vs " + words[j].str());
            std::string tag = arity == Arity::Two ? "bi" : "tri";
            res.lines.push_back(acc.line("oracle/" + tag + "-n" + std::to_string(n)));
        }
    }
}

void suite_isometry_ck(SuiteResult& res, const VerifyCaps& caps) {
    for (int k = 1; k <= caps.fold_depth; ++k) {
        auto words = all_words(Arity::Two, k);
        std::map<Dyadic, AddressWord> reps;
        for (const auto& w : words) reps.emplace(fold_dyadic(w), w);
        Acc acc;
        for (const auto& w : words)
            acc.require(word_distance(w, reps.at(fold_dyadic(w))).is_zero(),
                        "word not glued to its dyadic class: " + w.str());
        for (auto it = reps.begin(); it != reps.end(); ++it)
            for (auto jt = std::next(it); jt != reps.end(); ++jt)
                acc.require(word_distance(it->second, jt->second) ==
                                (jt->first - it->first).abs(),
                            "distance differs from |c_k gap| at " + it->second.str() +
                                " vs " + jt->second.str());
        res.lines.push_back(acc.line("isometry-ck/k" + std::to_string(k)));
    }
}

std::vector<Dyadic> dyadic_seeds(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(0, 256);
    std::vector<Dyadic> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(Dyadic{BigInt{num(rng)}, 8});
    return out;
}

std::vector<std::pair<std::string, CarrierPoint>> iteration_seed_points(
    const VerifyCaps& caps) {
    std::vector<std::pair<std::string, CarrierPoint>> pts;
    for (const Dyadic& x : dyadic_seeds(caps.seeds, caps.seed)) {
        pts.emplace_back("interval-e", CarrierPoint{x});
        pts.emplace_back("triangle-e", CarrierPoint{TrianglePoint{false, x}});
    }
    pts.emplace_back("triangle-e", CarrierPoint{TrianglePoint{true, Dyadic{0}}});
    return pts;
}

void suite_cauchy(SuiteResult& res, const VerifyCaps& caps) {
    Acc rate;
    for (const auto& [name, x] : iteration_seed_points(caps)) {
        const CoalgebraSpec& c = builtin_coalgebra(name);
        std::vector<AddressWord> theta;
        for (int p = 1; p <= caps.cauchy_depth; ++p)
            theta.push_back(coalgebra_iterate(c, x, p));
        for (int p = 1; p <= caps.cauchy_depth; ++p)
            for (int q = p + 1; q <= caps.cauchy_depth; ++q)
                rate.require(word_distance(theta[p - 1], theta[q - 1]) <=
                                 Dyadic::half_pow(p),
                             name + " at " + carrier_str(x) + ": d(θ_" +
                                 std::to_string(p) + ", θ_" + std::to_string(q) +
                                 ") > 1/2^p");
    }
    res.lines.push_back(rate.line("cauchy/rate"));

    for (const std::string& name : {"interval-e", "triangle-e", "freyd-i"}) {
        const CoalgebraSpec& c = builtin_coalgebra(name);
        Acc ind;
        for (int num = 0; num <= 256; ++num) {
            CarrierPoint x = c.arity == Arity::Two
                                 ? CarrierPoint{Dyadic{BigInt{num}, 8}}
                                 : CarrierPoint{TrianglePoint{false, Dyadic{BigInt{num}, 8}}};
            auto bs = c.branches(x);
            for (std::size_t i = 0; i < bs.size(); ++i)
                for (std::size_t j = i + 1; j < bs.size(); ++j) {
                    AddressWord wi = coalgebra_iterate_branch(c, x, static_cast<int>(i), 15);
                    AddressWord wj = coalgebra_iterate_branch(c, x, static_cast<int>(j), 15);
                    ind.require(word_distance(wi, wj).is_zero(),
                                name + ": branch choice matters at " + carrier_str(x));
                }
        }
        res.lines.push_back(ind.line("cauchy/branch-independence-" + name));
    }
}

void suite_squares(SuiteResult& res, const VerifyCaps& caps) {
    Acc co;
    for (const auto& [name, x] : iteration_seed_points(caps)) {
        const CoalgebraSpec& c = builtin_coalgebra(name);
        for (int p = 2; p <= caps.square_depth; ++p)
            co.require(check_coalgebra_square(c, x, p) <= Dyadic::half_pow(p - 2),
                       name + " square defect above 2/2^(p-1) at " + carrier_str(x) +
                           ", p=" + std::to_string(p));
    }
    res.lines.push_back(co.line("squares/coalgebra"));

    for (const std::string& name : builtin_algebra_names()) {
        const AlgebraSpec& a = builtin_algebra(name);
        Acc al;
        for (int depth = 0; depth <= 6; ++depth)
            for (const auto& w : all_words(a.carrier.arity, depth))
                for (Letter m = 0; m < letter_count(a.carrier.arity); ++m)
                    al.require(check_algebra_square(a, m, w),
                               name + " square fails at " + w.str());
        res.lines.push_back(al.line("squares/algebra-" + name));
    }
}

void suite_claims_ab(SuiteResult& res, const VerifyCaps& caps) {
    ClaimsReport ab = verify_claims_ab(caps.n_max, caps.samples);
    res.lines.push_back(make_line("claims-ab/interval", ab.ok, ab.checks, ab.first_failure));
    ClaimsReport tri = triangle_g_claims(caps.n_max, caps.samples);
    res.lines.push_back(make_line("claims-ab/triangle", tri.ok, tri.checks, tri.first_failure));

    Acc route;
    const CoalgebraSpec& e = builtin_coalgebra("interval-e");
    for (int num = 0; num <= 1024; ++num) {
        Dyadic x{BigInt{num}, 10};
        route.require(f_reference(x) == fold_limit(e, CarrierPoint{x}),
                      "route disagreement at " + x.str());
    }
    res.lines.push_back(route.line("claims-ab/route-agreement"));
}

void suite_lipschitz(SuiteResult& res, const VerifyCaps& caps) {
    Acc acc;
    auto rows = lipschitz_table(caps.n_max);
    Dyadic prev{0};
    for (const auto& row : rows) {
        acc.require(row.fx.is_zero(), "f(x) nonzero in row " + std::to_string(row.n));
        acc.require(row.fy == Dyadic::half_pow(row.n),
                    "f(y) not 1/2^n in row " + std::to_string(row.n));
        acc.require(row.ratio == Dyadic{BigInt{1} << (row.n + 1), 0},
                    "ratio not 2^(n+1) in row " + std::to_string(row.n));
        acc.require(prev < row.ratio, "ratios not strictly increasing");
        prev = row.ratio;
    }
    res.lines.push_back(acc.line("lipschitz/unbounded"));
}

void suite_discontinuity(SuiteResult& res, const VerifyCaps& caps) {
    Acc bi, tri;
    for (int n = 1; n <= caps.n_max; ++n) {
        auto wb = discontinuity_witness_bip(n);
        bi.require(wb.input_distance == Dyadic::half_pow(n),
                   "bi input distance wrong at n=" + std::to_string(n));
        bi.require(wb.image_distance == Dyadic{1},
                   "bi image distance not 1 at n=" + std::to_string(n));
        auto wt = discontinuity_witness_trip(n);
        tri.require(wt.input_distance == Dyadic::half_pow(n + 1),
                    "tri input distance wrong at n=" + std::to_string(n));
        tri.require(wt.image_distance == Dyadic{1},
                    "tri image distance not 1 at n=" + std::to_string(n));
    }
    res.lines.push_back(bi.line("discontinuity/bi"));
    res.lines.push_back(tri.line("discontinuity/tri"));
}

void suite_functoriality(SuiteResult& res, const VerifyCaps& caps) {
    std::mt19937_64 rng(caps.seed);
    Acc shortness, lipschitz, iso;
    for (int trial = 0; trial < caps.trials; ++trial) {
        Arity arity = (rng() & 1) ? Arity::Two : Arity::Three;
        int base = letter_count(arity);
        std::uniform_int_distribution<int> size_dist(base, 6);

        FinitePointedSpace X = random_pointed_space(rng, arity, size_dist(rng));
        PointedMap f;
        f.from = &X;
        f.to = &X;
        f.image.resize(X.size());
        for (int i = 0; i < base; ++i) f.image[i] = i;
        std::uniform_int_distribution<int> pt(0, X.size() - 1);
        for (int i = base; i < X.size(); ++i) f.image[i] = pt(rng);

        auto rep_short = check_map_property(f, MapProperty::Short);
        shortness.require(!rep_short.base_holds || rep_short.tensor_holds,
                          "short map with non-short tensor image");
        auto rep_lip = check_map_property(f, MapProperty::Lipschitz);
        lipschitz.require(rep_lip.tensor_holds && rep_lip.base_constant &&
                              rep_lip.tensor_constant &&
                              *rep_lip.tensor_constant <= *rep_lip.base_constant,
                          "tensor Lipschitz constant above the base one");

        // Isometric embedding: a subspace inclusion.
        FinitePointedSpace Y = random_pointed_space(rng, arity, size_dist(rng));
        std::vector<int> chosen;
        for (int i = 0; i < Y.size(); ++i)
            if (i < base || (rng() & 1)) chosen.push_back(i);
        FinitePointedSpace S;
        S.arity = arity;
        for (int i : chosen) S.labels.push_back(Y.labels[i]);
        for (int i = 0; i < base; ++i) S.distinguished.push_back(i);
        S.dist.assign(chosen.size(), std::vector<Dyadic>(chosen.size()));
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = 0; j < chosen.size(); ++j)
                S.dist[i][j] = Y.d(chosen[i], chosen[j]);
        PointedMap inc;
        inc.from = &S;
        inc.to = &Y;
        inc.image = chosen;
        auto rep_iso = check_map_property(inc, MapProperty::IsometricEmbedding);
        iso.require(rep_iso.base_holds && rep_iso.tensor_holds,
                    "isometric embedding not preserved by the functor");
    }
    res.lines.push_back(shortness.line("functoriality/short"));
    res.lines.push_back(lipschitz.line("functoriality/lipschitz"));
    res.lines.push_back(iso.line("functoriality/isometric-embedding"));
}

}  // namespace

FinitePointedSpace random_pointed_space(std::mt19937_64& rng, Arity arity, int size) {
    const int base = letter_count(arity);
    if (size < base) throw std::invalid_argument("space smaller than its tag set");
    FinitePointedSpace s;
    s.arity = arity;
    for (int i = 0; i < size; ++i) s.labels.push_back("p" + std::to_string(i));
    for (int i = 0; i < base; ++i) s.distinguished.push_back(i);
    s.dist.assign(size, std::vector<Dyadic>(size, Dyadic{0}));
    // Off-diagonal distances in [1/2, 1]: every two-edge path then reaches 1,
    // so the triangle inequality and the distinguished distances survive.
    std::uniform_int_distribution<int> num(8, 16);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            Dyadic d = (i < base && j < base) ? Dyadic{1} : Dyadic{BigInt{num(rng)}, 4};
            s.dist[i][j] = s.dist[j][i] = d;
        }
    return s;
}

std::vector<std::string> suite_names() {
    return {"metric-axioms", "oracle", "isometry-ck", "cauchy",       "squares",
            "claims-ab",     "lipschitz", "discontinuity", "functoriality", "all"};
}

SuiteResult run_suite(const std::string& name, const VerifyCaps& caps) {
    SuiteResult res;
    res.suite = name;
    bool all = name == "all";
    bool known = all;
    auto want = [&](const char* n) { return all || name == n; };
    if (want("metric-axioms")) suite_metric_axioms(res, caps), known = true;
    if (want("oracle")) suite_oracle(res, caps), known = true;
    if (want("isometry-ck")) suite_isometry_ck(res, caps), known = true;
    if (want("cauchy")) suite_cauchy(res, caps), known = true;
    if (want("squares")) suite_squares(res, caps), known = true;
    if (want("claims-ab")) suite_claims_ab(res, caps), known = true;
    if (want("lipschitz")) suite_lipschitz(res, caps), known = true;
    if (want("discontinuity")) suite_discontinuity(res, caps), known = true;
    if (want("functoriality")) suite_functoriality(res, caps), known = true;
    if (!known) throw std::invalid_argument("unknown suite: " + name);
    return res;
}

}  // namespace pms

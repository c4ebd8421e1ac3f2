#include "pms/experiments.hpp"

#include <map>
#include <stdexcept>

namespace pms {

namespace {

const Dyadic kQuarter{BigInt{1}, 2};
const Dyadic kHalf{BigInt{1}, 1};
const Dyadic kThreeQuarters{BigInt{3}, 2};

}  // namespace

std::vector<std::pair<Letter, Dyadic>> interval_e_branches(const Dyadic& x) {
    std::vector<std::pair<Letter, Dyadic>> out;
    if (x.is_negative() || x > Dyadic{1}) return out;
    if (x <= kQuarter) out.emplace_back(Letter{0}, Dyadic{0});
    if (kQuarter <= x && x <= kHalf)
        out.emplace_back(Letter{0}, x.scaled_up(2) - Dyadic{1});
    if (kHalf <= x && x <= kThreeQuarters)
        out.emplace_back(Letter{1}, x.scaled_up(2) - Dyadic{2});
    if (kThreeQuarters <= x) out.emplace_back(Letter{1}, Dyadic{1});
    return out;
}

std::pair<Letter, Dyadic> interval_e(const Dyadic& x) {
    auto bs = interval_e_branches(x);
    if (bs.empty()) throw std::domain_error("interval-e: point outside [0,1]");
    return bs.front();
}

std::vector<std::pair<Letter, TrianglePoint>> triangle_e_branches(const TrianglePoint& p) {
    std::vector<std::pair<Letter, TrianglePoint>> out;
    if (p.apex) {
        out.emplace_back(Letter{0}, p);  // a⊗apex
        return out;
    }
    const Dyadic& x = p.x;
    if (x.is_negative() || x > Dyadic{1}) return out;
    if (x <= kQuarter) out.emplace_back(Letter{1}, TrianglePoint{false, Dyadic{0}});
    if (kQuarter <= x && x <= kHalf)
        out.emplace_back(Letter{1}, TrianglePoint{false, x.scaled_up(2) - Dyadic{1}});
    if (kHalf <= x && x <= kThreeQuarters)
        out.emplace_back(Letter{2}, TrianglePoint{false, x.scaled_up(2) - Dyadic{2}});
    if (kThreeQuarters <= x) out.emplace_back(Letter{2}, TrianglePoint{false, Dyadic{1}});
    return out;
}

std::pair<Letter, TrianglePoint> triangle_e(const TrianglePoint& p) {
    auto bs = triangle_e_branches(p);
    if (bs.empty()) throw std::domain_error("triangle-e: point outside the carrier");
    return bs.front();
}

Dyadic f_reference(const Dyadic& x) {
    if (x.is_negative() || x > Dyadic{1})
        throw std::domain_error("f_reference: point outside [0,1]");
    thread_local std::map<Dyadic, Dyadic> memo;
    if (auto it = memo.find(x); it != memo.end()) return it->second;

    std::vector<Dyadic> vals;
    if (x <= kQuarter) vals.push_back(Dyadic{0});
    if (kQuarter <= x && x <= kHalf)
        vals.push_back(f_reference(x.scaled_up(2) - Dyadic{1}).half());
    if (kHalf <= x && x <= kThreeQuarters)
        vals.push_back((Dyadic{1} + f_reference(x.scaled_up(2) - Dyadic{2})).half());
    if (kThreeQuarters <= x) vals.push_back(Dyadic{1});
    for (const Dyadic& v : vals)
        if (v != vals.front())
            throw std::logic_error("f_reference: branch disagreement at " + x.str());
    memo.emplace(x, vals.front());
    return vals.front();
}

namespace {

/// Reads the trajectory letter as a bi-pointed letter; on the triangle this
/// is the bottom-edge renaming b↦l, c↦r.
Letter as_bi_letter(Arity a, Letter m) {
    if (a == Arity::Two) return m;
    if (m == 1) return 0;
    if (m == 2) return 1;
    throw std::domain_error("fold_limit: trajectory entered the apex copy");
}

/// Terminal endpoint check: 0 or 1 on the interval or the bottom edge.
std::optional<bool> terminal_top(const CarrierPoint& p) {
    const Dyadic* x = nullptr;
    if (const auto* d = std::get_if<Dyadic>(&p)) x = d;
    if (const auto* t = std::get_if<TrianglePoint>(&p)) x = t->apex ? nullptr : &t->x;
    if (!x) return std::nullopt;
    if (x->is_zero()) return false;
    if (*x == Dyadic{1}) return true;
    return std::nullopt;
}

std::uint32_t carrier_exp(const CarrierPoint& p) {
    if (const auto* d = std::get_if<Dyadic>(&p)) return d->exp();
    if (const auto* t = std::get_if<TrianglePoint>(&p)) return t->apex ? 0 : t->x.exp();
    return 0;
}

}  // namespace

Dyadic fold_limit(const CoalgebraSpec& c, const CarrierPoint& x) {
    AddressWord w;
    w.arity = Arity::Two;
    CarrierPoint cur = x;
    // Each non-terminal step strips at least one bit of resolution.
    int cap = static_cast<int>(carrier_exp(x)) + 4;
    for (int i = 0; i <= cap; ++i) {
        if (auto top = terminal_top(cur)) {
            w.base = *top ? 1 : 0;
            return fold_dyadic(w);
        }
        auto [m, nxt] = c.step(cur);
        w.letters.push_back(as_bi_letter(c.arity, m));
        cur = std::move(nxt);
    }
    throw std::logic_error("fold_limit: trajectory did not reach an endpoint");
}

IntervalFamily IntervalFamily::at(int n) {
    if (n < 1) throw std::invalid_argument("interval family index must be positive");
    Dyadic s{0};
    for (int i = 1; i <= n; ++i) s = s + Dyadic::half_pow(2 * i);
    IntervalFamily f;
    f.n = n;
    f.i_lo = kQuarter;
    f.i_hi = s;
    f.j_lo = s + Dyadic{BigInt{3}, static_cast<std::uint32_t>(2 * (n + 1))};
    f.j_hi = s + Dyadic::half_pow(2 * n);
    return f;
}

std::vector<Dyadic> interval_samples(const Dyadic& lo, const Dyadic& hi, int interior) {
    if (hi < lo) throw std::invalid_argument("empty interval");
    if (interior < 0 || interior > 15)
        throw std::invalid_argument("interior sample count must be in [0, 15]");
    if (lo == hi) return {lo};
    std::vector<Dyadic> out{lo, hi};
    Dyadic span = hi - lo;
    for (int k = 1; k <= interior; ++k)
        out.push_back(lo + (span * Dyadic{k}).scaled_down(4));
    return out;
}

ClaimsReport verify_claims_ab(int n_max, int samples_per_interval,
                              std::function<Dyadic(const Dyadic&)> eval) {
    if (n_max > 12) throw std::invalid_argument("n_max above cap (12)");
    if (!eval) eval = [](const Dyadic& x) { return f_reference(x); };
    const CoalgebraSpec& e = builtin_coalgebra("interval-e");

    ClaimsReport rep;
    auto check = [&](int n, const Dyadic& x, const Dyadic& expect) {
        Dyadic direct = eval(x);
        ++rep.checks;
        if (direct != expect)
            rep.fail("n=" + std::to_string(n) + " x=" + x.str() + ": direct route gave " +
                     direct.str() + ", expected " + expect.str());
        Dyadic folded = fold_limit(e, CarrierPoint{x});
        ++rep.checks;
        if (folded != expect)
            rep.fail("n=" + std::to_string(n) + " x=" + x.str() + ": fold route gave " +
                     folded.str() + ", expected " + expect.str());
    };
    for (int n = 1; n <= n_max; ++n) {
        auto fam = IntervalFamily::at(n);
        for (const Dyadic& x : interval_samples(fam.i_lo, fam.i_hi, samples_per_interval))
            check(n, x, Dyadic{0});
        for (const Dyadic& x : interval_samples(fam.j_lo, fam.j_hi, samples_per_interval))
            check(n, x, Dyadic::half_pow(n));
    }
    return rep;
}

ClaimsReport triangle_g_claims(int n_max, int samples_per_interval) {
    if (n_max > 12) throw std::invalid_argument("n_max above cap (12)");
    const CoalgebraSpec& e = builtin_coalgebra("triangle-e");

    ClaimsReport rep;
    auto check = [&](int n, const Dyadic& x, const Dyadic& expect) {
        Dyadic g = fold_limit(e, CarrierPoint{TrianglePoint{false, x}});
        ++rep.checks;
        if (g != expect)
            rep.fail("n=" + std::to_string(n) + " x=" + x.str() + ": g gave " + g.str() +
                     ", expected " + expect.str());
        ++rep.checks;
        if (g != f_reference(x))
            rep.fail("n=" + std::to_string(n) + " x=" + x.str() +
                     ": g disagrees with the interval mediating morphism");
    };
    for (int n = 1; n <= n_max; ++n) {
        auto fam = IntervalFamily::at(n);
        for (const Dyadic& x : interval_samples(fam.i_lo, fam.i_hi, samples_per_interval))
            check(n, x, Dyadic{0});
        for (const Dyadic& x : interval_samples(fam.j_lo, fam.j_hi, samples_per_interval))
            check(n, x, Dyadic::half_pow(n));
    }
    return rep;
}

std::vector<LipschitzRow> lipschitz_table(int n_max) {
    if (n_max > 12) throw std::invalid_argument("n_max above cap (12)");
    std::vector<LipschitzRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        auto fam = IntervalFamily::at(n);
        LipschitzRow row;
        row.n = n;
        row.x = fam.i_hi + Dyadic::half_pow(2 * (n + 1));  // 1/4+…+1/4ⁿ + 1/4ⁿ⁺¹
        row.y = fam.j_lo;                                  // … + 3/4ⁿ⁺¹
        row.fx = f_reference(row.x);
        row.fy = f_reference(row.y);
        Dyadic gap = (row.y - row.x).abs();
        if (gap != Dyadic::half_pow(2 * n + 1))
            throw std::logic_error("lipschitz_table: unexpected sample spacing");
        row.ratio = (row.fy - row.fx).abs().scaled_up(2 * n + 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

DiscontinuityWitness discontinuity_witness_bip(int n) {
    if (n < 1) throw std::invalid_argument("witness index must be positive");
    const AlgebraSpec& alg = builtin_algebra("bip-alg");
    AddressWord top = AddressWord::vertex(Arity::Two, 1, n);  // r…r·⊤ = 1
    AddressWord below{Arity::Two, std::vector<Letter>(n, 1), 0};  // r…r·⊥ = (2ⁿ−1)/2ⁿ

    DiscontinuityWitness w;
    w.input_a = fold_dyadic(top).str();
    w.input_b = fold_dyadic(below).str();
    w.input_distance = word_distance(top, below);
    int ia = algebra_fold(alg, top), ib = algebra_fold(alg, below);
    w.image_a = alg.carrier.labels[ia];
    w.image_b = alg.carrier.labels[ib];
    w.image_distance = alg.carrier.d(ia, ib);
    return w;
}

DiscontinuityWitness discontinuity_witness_trip(int n) {
    if (n < 1) throw std::invalid_argument("witness index must be positive");
    const AlgebraSpec& alg = builtin_algebra("trip-alg");
    AddressWord top = AddressWord::vertex(Arity::Three, 0, n + 1);  // a…a·T
    AddressWord left{Arity::Three, std::vector<Letter>(n + 1, 0), 1};  // a…a·L

    DiscontinuityWitness w;
    w.input_a = top.str();
    w.input_b = left.str();
    w.input_distance = word_distance(top, left);
    int ia = algebra_fold(alg, top), ib = algebra_fold(alg, left);
    w.image_a = alg.carrier.labels[ia];
    w.image_b = alg.carrier.labels[ib];
    w.image_distance = alg.carrier.d(ia, ib);
    return w;
}

void write_values_csv(std::ostream& os, int n_max, int samples_per_interval) {
    os << "n,x_num,x_exp,f_num,f_exp\n";
    for (int n = 1; n <= n_max; ++n) {
        auto fam = IntervalFamily::at(n);
        auto emit = [&](const Dyadic& lo, const Dyadic& hi) {
            for (const Dyadic& x : interval_samples(lo, hi, samples_per_interval)) {
                Dyadic f = f_reference(x);
                os << n << ',' << x.num() << ',' << x.exp() << ',' << f.num() << ','
                   << f.exp() << '\n';
            }
        };
        emit(fam.i_lo, fam.i_hi);
        emit(fam.j_lo, fam.j_hi);
    }
}

void write_lipschitz_csv(std::ostream& os, int n_max) {
    os << "n,ratio_num,ratio_exp\n";
    for (const auto& row : lipschitz_table(n_max))
        os << row.n << ',' << row.ratio.num() << ',' << row.ratio.exp() << '\n';
}

}  // namespace pms

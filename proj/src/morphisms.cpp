#include "pms/morphisms.hpp"

#include "pms/experiments.hpp"

#include <memory>
#include <stdexcept>

namespace pms {

std::string carrier_str(const CarrierPoint& p) {
    if (const auto* d = std::get_if<Dyadic>(&p)) return d->str();
    if (const auto* t = std::get_if<TrianglePoint>(&p))
        return t->apex ? "apex" : t->x.str() + ",0";
    return std::get<std::string>(p);
}

std::pair<Letter, CarrierPoint> CoalgebraSpec::step(const CarrierPoint& x) const {
    auto bs = branches(x);
    if (bs.empty())
        throw std::domain_error(name + ": point outside carrier: " + carrier_str(x));
    return bs.front();
}

void AlgebraSpec::check_gluing() const {
    const auto& dp = carrier.distinguished;
    auto expect = [&](Letter m1, BaseSymbol d1, Letter m2, BaseSymbol d2) {
        if (op[m1][dp[d1]] != op[m2][dp[d2]])
            throw std::logic_error(
                name + ": op disagrees on glued pair " +
                std::string(1, letter_name(carrier.arity, m1)) + "⊗" +
                std::string(1, base_name(carrier.arity, d1)) + " = " +
                std::string(1, letter_name(carrier.arity, m2)) + "⊗" +
                std::string(1, base_name(carrier.arity, d2)));
    };
    if (carrier.arity == Arity::Two) {
        expect(0, 1, 1, 0);  // l⊗⊤ = r⊗⊥
    } else {
        expect(0, 1, 1, 0);  // a⊗L = b⊗T
        expect(0, 2, 2, 0);  // a⊗R = c⊗T
        expect(2, 1, 1, 2);  // c⊗L = b⊗R
    }
}

AddressWord coalgebra_iterate(const CoalgebraSpec& c, const CarrierPoint& x, int p) {
    return coalgebra_iterate_branch(c, x, 0, p);
}

AddressWord coalgebra_iterate_branch(const CoalgebraSpec& c, const CarrierPoint& x,
                                     int branch, int p) {
    if (p < 1) throw std::invalid_argument("iteration depth must be at least 1");
    AddressWord w;
    w.arity = c.arity;
    w.letters.reserve(p);
    CarrierPoint cur = x;
    for (int i = 0; i < p; ++i) {
        auto bs = c.branches(cur);
        if (bs.empty())
            throw std::domain_error(c.name + ": point outside carrier: " +
                                    carrier_str(cur));
        int pick = (i == 0) ? branch : 0;
        if (pick < 0 || pick >= static_cast<int>(bs.size()))
            throw std::invalid_argument("no such branch at " + carrier_str(cur));
        w.letters.push_back(bs[pick].first);
        cur = std::move(bs[pick].second);
    }
    w.base = static_cast<BaseSymbol>(w.letters.back());
    return w;
}

CompletionPoint mediating_final(const CoalgebraSpec& c, const CarrierPoint& x) {
    auto cur = std::make_shared<CarrierPoint>(x);
    // Capture by value so the stream may outlive the spec object.
    auto branches = c.branches;
    auto name = c.name;
    return CompletionPoint::generated(
        c.arity,
        [branches, name, cur]() {
            auto bs = branches(*cur);
            if (bs.empty())
                throw std::domain_error(name + ": point outside carrier: " +
                                        carrier_str(*cur));
            *cur = std::move(bs.front().second);
            return bs.front().first;
        },
        "coalgebra-generated:" + name);
}

Dyadic check_coalgebra_square(const CoalgebraSpec& c, const CarrierPoint& x, int p) {
    if (p < 2) throw std::invalid_argument("square check needs depth at least 2");
    // (M⊗f)∘e: one explicit step, then the mediating morphism of the residue.
    auto [m1, x1] = c.step(x);
    AddressWord lhs = coalgebra_iterate(c, x1, p - 1);
    lhs.letters.insert(lhs.letters.begin(), m1);
    // ψ∘f: the depth-p truncation of the mediating morphism itself.
    AddressWord rhs = coalgebra_iterate(c, x, p);
    return word_distance(lhs, rhs);
}

int algebra_fold(const AlgebraSpec& a, const AddressWord& w) {
    if (w.arity != a.carrier.arity)
        throw std::invalid_argument("word alphabet does not match algebra arity");
    a.check_gluing();
    int x = a.carrier.distinguished[w.base];
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        x = a.apply(*it, x);
    return x;
}

bool check_algebra_square(const AlgebraSpec& a, Letter m, const AddressWord& w) {
    AddressWord mw = w;
    mw.letters.insert(mw.letters.begin(), m);
    return algebra_fold(a, mw) == a.apply(m, algebra_fold(a, w));
}

namespace {

Dyadic parse_unit_dyadic(const std::string& text) {
    Dyadic x = Dyadic::parse(text);
    if (x.is_negative() || x > Dyadic{1})
        throw std::invalid_argument("point outside [0,1]: " + text);
    return x;
}

CoalgebraSpec make_interval_e() {
    CoalgebraSpec c;
    c.name = "interval-e";
    c.arity = Arity::Two;
    c.branches = [](const CarrierPoint& p) {
        std::vector<std::pair<Letter, CarrierPoint>> out;
        for (auto& [m, y] : interval_e_branches(std::get<Dyadic>(p)))
            out.emplace_back(m, CarrierPoint{y});
        return out;
    };
    c.parse_point = [](const std::string& t) { return CarrierPoint{parse_unit_dyadic(t)}; };
    return c;
}

CoalgebraSpec make_freyd_i() {
    CoalgebraSpec c;
    c.name = "freyd-i";
    c.arity = Arity::Two;
    // The final-coalgebra structure on [0,1]: l⊗2x on [0,½], r⊗(2x−1) on [½,1].
    c.branches = [](const CarrierPoint& p) {
        const Dyadic& x = std::get<Dyadic>(p);
        std::vector<std::pair<Letter, CarrierPoint>> out;
        if (x.is_negative() || x > Dyadic{1}) return out;
        Dyadic half{BigInt{1}, 1};
        if (x <= half) out.emplace_back(Letter{0}, CarrierPoint{x.scaled_up(1)});
        if (x >= half)
            out.emplace_back(Letter{1}, CarrierPoint{x.scaled_up(1) - Dyadic{1}});
        return out;
    };
    c.parse_point = [](const std::string& t) { return CarrierPoint{parse_unit_dyadic(t)}; };
    return c;
}

CoalgebraSpec make_triangle_e() {
    CoalgebraSpec c;
    c.name = "triangle-e";
    c.arity = Arity::Three;
    c.branches = [](const CarrierPoint& p) {
        std::vector<std::pair<Letter, CarrierPoint>> out;
        for (auto& [m, y] : triangle_e_branches(std::get<TrianglePoint>(p)))
            out.emplace_back(m, CarrierPoint{y});
        return out;
    };
    c.parse_point = [](const std::string& t) -> CarrierPoint {
        if (t == "apex") return TrianglePoint{true, Dyadic{0}};
        std::size_t comma = t.find(',');
        if (comma == std::string::npos || t.substr(comma + 1) != "0")
            throw std::invalid_argument("triangle point must be \"x,0\" or \"apex\": " + t);
        return TrianglePoint{false, parse_unit_dyadic(t.substr(0, comma))};
    };
    return c;
}

AlgebraSpec make_bip_alg() {
    AlgebraSpec a;
    a.name = "bip-alg";
    a.carrier = FinitePointedSpace::bipointed_x0();
    // e(l⊗0) = 0, e(l⊗1) = 0, e(r⊗1) = 1; the gluing forces e(r⊗0) = e(l⊗1).
    a.op = {{0, 0}, {0, 1}};
    return a;
}

AlgebraSpec make_trip_alg() {
    AlgebraSpec a;
    a.name = "trip-alg";
    a.carrier = FinitePointedSpace::tripointed_y0();
    // e₃(a⊗T) = T, e₃(c⊗R) = R, everything else L (indices: T=0, L=1, R=2).
    a.op = {{0, 1, 1}, {1, 1, 1}, {1, 1, 2}};
    return a;
}

}  // namespace

const CoalgebraSpec& builtin_coalgebra(const std::string& name) {
    static const CoalgebraSpec interval = make_interval_e();
    static const CoalgebraSpec triangle = make_triangle_e();
    static const CoalgebraSpec freyd = make_freyd_i();
    if (name == "interval-e") return interval;
    if (name == "triangle-e") return triangle;
    if (name == "freyd-i") return freyd;
    throw std::invalid_argument("unknown coalgebra: " + name);
}

const AlgebraSpec& builtin_algebra(const std::string& name) {
    static const AlgebraSpec bip = make_bip_alg();
    static const AlgebraSpec trip = make_trip_alg();
    if (name == "bip-alg") return bip;
    if (name == "trip-alg") return trip;
    throw std::invalid_argument("unknown algebra: " + name);
}

std::vector<std::string> builtin_coalgebra_names() {
    return {"interval-e", "triangle-e", "freyd-i"};
}

std::vector<std::string> builtin_algebra_names() { return {"bip-alg", "trip-alg"}; }

}  // namespace pms

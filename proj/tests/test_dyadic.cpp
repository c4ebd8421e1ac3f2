#include "pms/dyadic.hpp"

#include <doctest.h>

#include <random>

using namespace pms;

TEST_CASE("canonical construction") {
    CHECK(Dyadic(BigInt{4}, 3) == Dyadic(BigInt{1}, 1));
    CHECK(Dyadic(BigInt{4}, 3).num() == 1);
    CHECK(Dyadic(BigInt{4}, 3).exp() == 1);
    CHECK(Dyadic(BigInt{0}, 5) == Dyadic{0});
    CHECK(Dyadic(BigInt{0}, 5).exp() == 0);
    CHECK(Dyadic(BigInt{3}, 2).num() == 3);
    CHECK(Dyadic(BigInt{3}, 2).exp() == 2);
}

TEST_CASE("arithmetic and ordering") {
    Dyadic half{BigInt{1}, 1};
    Dyadic quarter{BigInt{1}, 2};
    CHECK(half + quarter == Dyadic(BigInt{3}, 2));
    CHECK(half - quarter == quarter);
    CHECK(quarter < half);
    CHECK(half.half() == quarter);
    CHECK(quarter.scaled_up(2) == Dyadic{1});
    CHECK((half - Dyadic{1}).abs() == half);
    CHECK(min(half, quarter) == quarter);
    CHECK(Dyadic(BigInt{3}, 2) * half == Dyadic(BigInt{3}, 3));
}

TEST_CASE("text form") {
    CHECK(Dyadic(BigInt{3}, 2).str() == "3/2^2");
    CHECK(Dyadic{0}.str() == "0");
    CHECK(Dyadic{1}.str() == "1");
    CHECK(Dyadic::parse("3/2^2") == Dyadic(BigInt{3}, 2));
    CHECK(Dyadic::parse("1") == Dyadic{1});
    CHECK(Dyadic::parse("0") == Dyadic{0});
    CHECK(Dyadic::parse("-1/2") == Dyadic(BigInt{-1}, 1));
    CHECK(Dyadic::parse("4/2^3") == Dyadic(BigInt{1}, 1));
    CHECK_THROWS_AS(Dyadic::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("x/2^2"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("1/2^"), std::invalid_argument);
}

namespace {

// Unreduced reference representation for the cross-check property.
struct Naive {
    BigInt num;
    std::uint32_t exp;
};

Naive naive_add(const Naive& a, const Naive& b) {
    std::uint32_t e = std::max(a.exp, b.exp);
    return {(a.num << (e - a.exp)) + (b.num << (e - b.exp)), e};
}

bool same_value(const Naive& a, const Dyadic& d) {
    std::uint32_t e = std::max(a.exp, d.exp());
    return (a.num << (e - a.exp)) == (d.num() << (e - d.exp()));
}

}  // namespace

TEST_CASE("addition agrees with the unreduced model on random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-4096, 4096);
    std::uniform_int_distribution<int> exp(0, 12);
    for (int i = 0; i < 10000; ++i) {
        Naive a{BigInt{num(rng)}, static_cast<std::uint32_t>(exp(rng))};
        Naive b{BigInt{num(rng)}, static_cast<std::uint32_t>(exp(rng))};
        Dyadic da{a.num, a.exp}, db{b.num, b.exp};
        REQUIRE(same_value(naive_add(a, b), da + db));
    }
}

TEST_CASE("ratio comparison") {
    auto r1 = DyadicRatio::of(Dyadic(BigInt{1}, 1), Dyadic(BigInt{1}, 2));  // 2
    auto r2 = DyadicRatio::of(Dyadic{1}, Dyadic{1});                        // 1
    CHECK(r2 < r1);
    CHECK(r2 <= r2);
    CHECK(r1 == DyadicRatio::of(Dyadic{1}, Dyadic(BigInt{1}, 1)));
    CHECK_THROWS_AS(DyadicRatio::of(Dyadic{1}, Dyadic{0}), std::domain_error);
}

#include "pms/space.hpp"
#include "pms/verify.hpp"

#include <doctest.h>

#include <random>

using namespace pms;

TEST_CASE("canonical spaces validate cleanly") {
    CHECK(validate_pointed_space(FinitePointedSpace::bipointed_x0()).ok());
    CHECK(validate_pointed_space(FinitePointedSpace::tripointed_y0()).ok());
}

TEST_CASE("distinguished distance violation is reported") {
    auto s = FinitePointedSpace::bipointed_x0();
    s.dist[0][1] = s.dist[1][0] = Dyadic(BigInt{1}, 1);
    auto rep = validate_pointed_space(s);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations)
        found = found || v.kind == MetricViolation::Kind::DistinguishedDistance;
    CHECK(found);
}

TEST_CASE("dimension mismatch is a structural error, not an axiom violation") {
    auto s = FinitePointedSpace::bipointed_x0();
    s.dist.pop_back();
    auto rep = validate_pointed_space(s);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == MetricViolation::Kind::Structural);
}

TEST_CASE("gluing table matches the generating relations") {
    // a⊗L = b⊗T, a⊗R = c⊗T, c⊗L = b⊗R
    CHECK(GluingTable::shared_vertex(0, 1) == std::pair<BaseSymbol, BaseSymbol>{1, 0});
    CHECK(GluingTable::shared_vertex(0, 2) == std::pair<BaseSymbol, BaseSymbol>{2, 0});
    CHECK(GluingTable::shared_vertex(1, 2) == std::pair<BaseSymbol, BaseSymbol>{2, 1});
    CHECK(GluingTable::shared_vertex(1, 0) == std::pair<BaseSymbol, BaseSymbol>{0, 1});
    CHECK_THROWS_AS(GluingTable::shared_vertex(1, 1), std::invalid_argument);
}

TEST_CASE("any single corrupted entry of a valid table is detected") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Arity arity = (trial & 1) ? Arity::Two : Arity::Three;
        auto s = random_pointed_space(rng, arity, 5);
        REQUIRE(validate_pointed_space(s).ok());
        for (int i = 0; i < s.size(); ++i) {
            for (int j = 0; j < s.size(); ++j) {
                auto broken = s;
                // Push the entry outside every admissible value.
                broken.dist[i][j] = broken.d(i, j) + Dyadic(BigInt{9}, 3);
                CHECK_FALSE(validate_pointed_space(broken).ok());
            }
        }
    }
}

TEST_CASE("violation descriptions carry the witnessing tuple") {
    auto s = FinitePointedSpace::tripointed_y0();
    s.dist[0][1] = Dyadic(BigInt{1}, 1);  // break symmetry only one way
    auto rep = validate_pointed_space(s);
    CHECK_FALSE(rep.ok());
    bool symmetry = false;
    for (const auto& v : rep.violations)
        if (v.kind == MetricViolation::Kind::SymmetryFailure) {
            symmetry = true;
            CHECK(v.describe().find("(0, 1)") != std::string::npos);
        }
    CHECK(symmetry);
}

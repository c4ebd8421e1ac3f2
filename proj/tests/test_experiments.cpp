#include "pms/experiments.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace pms;

namespace {
Dyadic D(long num, unsigned exp) { return Dyadic(BigInt{num}, exp); }
}  // namespace

TEST_CASE("interval coalgebra branches") {
    CHECK(interval_e(Dyadic{0}) == std::pair{Letter{0}, Dyadic{0}});
    CHECK(interval_e(Dyadic{1}) == std::pair{Letter{1}, Dyadic{1}});
    CHECK(interval_e(D(3, 3)) == std::pair{Letter{0}, D(1, 1)});  // 4·3/8−1

    auto quarter = interval_e_branches(D(1, 2));
    REQUIRE(quarter.size() == 2);
    CHECK(quarter[0] == std::pair{Letter{0}, Dyadic{0}});
    CHECK(quarter[1] == std::pair{Letter{0}, Dyadic{0}});  // branches agree at ¼

    auto half = interval_e_branches(D(1, 1));
    REQUIRE(half.size() == 2);
    CHECK(half[0] == std::pair{Letter{0}, Dyadic{1}});
    CHECK(half[1] == std::pair{Letter{1}, Dyadic{0}});

    CHECK(interval_e_branches(D(3, 1)).empty());
    CHECK_THROWS_AS(interval_e(D(-1, 0)), std::domain_error);
}

TEST_CASE("triangle coalgebra branches") {
    TrianglePoint apex{true, Dyadic{0}};
    auto ab = triangle_e_branches(apex);
    REQUIRE(ab.size() == 1);
    CHECK(ab[0].first == 0);
    CHECK(ab[0].second == apex);  // the apex is a fixed point of letter a

    auto edge = triangle_e(TrianglePoint{false, Dyadic{1}});
    CHECK(edge.first == 2);
    CHECK(edge.second == TrianglePoint{false, Dyadic{1}});
    CHECK(triangle_e(TrianglePoint{false, Dyadic{0}}).first == 1);
}

TEST_CASE("reference evaluation of the commuting system") {
    CHECK(f_reference(Dyadic{0}) == Dyadic{0});
    CHECK(f_reference(D(1, 2)) == Dyadic{0});
    CHECK(f_reference(D(5, 4)) == Dyadic{0});
    CHECK(f_reference(D(7, 4)) == D(1, 1));  // left end of J₁
    CHECK(f_reference(D(1, 1)) == D(1, 1));
    CHECK(f_reference(D(5, 3)) == D(3, 2));
    CHECK(f_reference(D(3, 2)) == Dyadic{1});
    CHECK(f_reference(Dyadic{1}) == Dyadic{1});
    CHECK_THROWS_AS(f_reference(D(5, 2)), std::domain_error);
}

TEST_CASE("fold limit matches the direct evaluation on a fine grid") {
    const auto& e = builtin_coalgebra("interval-e");
    const auto& g = builtin_coalgebra("triangle-e");
    for (int num = 0; num <= 64; ++num) {
        Dyadic x{BigInt{num}, 6};
        Dyadic expect = f_reference(x);
        CHECK(fold_limit(e, CarrierPoint{x}) == expect);
        CHECK(fold_limit(g, CarrierPoint{TrianglePoint{false, x}}) == expect);
    }
    CHECK_THROWS_AS(fold_limit(g, CarrierPoint{TrianglePoint{true, Dyadic{0}}}),
                    std::domain_error);
}

TEST_CASE("interval family endpoints") {
    auto f1 = IntervalFamily::at(1);
    CHECK(f1.i_lo == D(1, 2));
    CHECK(f1.i_hi == D(1, 2));
    CHECK(f1.j_lo == D(7, 4));
    CHECK(f1.j_hi == D(1, 1));

    auto f2 = IntervalFamily::at(2);
    CHECK(f2.i_hi == D(5, 4));
    CHECK(f2.j_lo == D(23, 6));
    CHECK(f2.j_hi == D(3, 3));
    CHECK_THROWS_AS(IntervalFamily::at(0), std::invalid_argument);
}

TEST_CASE("interval sampling") {
    CHECK(interval_samples(D(1, 2), D(1, 2), 8) == std::vector<Dyadic>{D(1, 2)});
    auto pts = interval_samples(Dyadic{0}, Dyadic{1}, 3);
    CHECK(pts.size() == 5);
    for (const Dyadic& p : pts) {
        CHECK_FALSE(p.is_negative());
        CHECK(p <= Dyadic{1});
    }
    CHECK_THROWS_AS(interval_samples(Dyadic{1}, Dyadic{0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(interval_samples(Dyadic{0}, Dyadic{1}, 16), std::invalid_argument);
}

TEST_CASE("value laws on both interval families") {
    auto rep = verify_claims_ab(6, 4);
    CHECK(rep.ok);
    CHECK(rep.checks > 0);

    auto tri = triangle_g_claims(4, 4);
    CHECK(tri.ok);

    // Harness self-test: a corrupted evaluator must be caught.
    auto bad = verify_claims_ab(3, 2, [](const Dyadic&) { return Dyadic{0}; });
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.first_failure.empty());
}

TEST_CASE("lipschitz lower bounds double each row") {
    auto rows = lipschitz_table(8);
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        CHECK(row.fx == Dyadic{0});
        CHECK(row.fy == Dyadic::half_pow(row.n));
        CHECK(row.ratio == Dyadic(BigInt{1} << (row.n + 1), 0));
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i - 1].ratio < rows[i].ratio);
}

TEST_CASE("discontinuity witnesses") {
    for (int n = 1; n <= 8; ++n) {
        auto w = discontinuity_witness_bip(n);
        CHECK(w.input_distance == Dyadic::half_pow(n));
        CHECK(w.image_distance == Dyadic{1});
        CHECK(w.input_a == "1");

        auto t = discontinuity_witness_trip(n);
        CHECK(t.input_distance == Dyadic::half_pow(n + 1));
        CHECK(t.image_distance == Dyadic{1});
        CHECK(t.image_a != t.image_b);
    }
}

TEST_CASE("csv output shape") {
    std::ostringstream values;
    write_values_csv(values, 2, 2);
    std::istringstream in(values.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "n,x_num,x_exp,f_num,f_exp");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 4);
    }
    // n=1 has a degenerate I-interval (one sample) and a 4-sample J-interval.
    CHECK(rows == 1 + 4 + 4 + 4);

    std::ostringstream lip;
    write_lipschitz_csv(lip, 3);
    std::istringstream lin(lip.str());
    REQUIRE(std::getline(lin, line));
    CHECK(line == "n,ratio_num,ratio_exp");
    rows = 0;
    while (std::getline(lin, line)) ++rows;
    CHECK(rows == 3);
}

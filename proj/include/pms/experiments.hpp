#pragma once

#include "pms/morphisms.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pms {

/// The four-branch interval coalgebra: l⊗0 on [0,¼], l⊗(4x−1) on [¼,½],
/// r⊗(4x−2) on [½,¾], r⊗1 on [¾,1]. Boundary points keep both branches.
std::vector<std::pair<Letter, Dyadic>> interval_e_branches(const Dyadic& x);
std::pair<Letter, Dyadic> interval_e(const Dyadic& x);

/// Its triangle counterpart on △: the apex is a fixed point of letter a,
/// the bottom edge follows the same four-branch map with letters b, c.
std::vector<std::pair<Letter, TrianglePoint>> triangle_e_branches(const TrianglePoint& p);
std::pair<Letter, TrianglePoint> triangle_e(const TrianglePoint& p);

/// Direct top-down evaluation of the commuting-condition system:
/// f = 0 on [0,¼], f(x) = f(4x−1)/2 on [¼,½], f(x) = (1+f(4x−2))/2 on
/// [½,¾], f = 1 on [¾,1]. Boundary points evaluate every applicable branch
/// and insist on agreement.
Dyadic f_reference(const Dyadic& x);

/// Exact limit of the bi-pointed fold along the iterated coalgebra: runs the
/// trajectory until the carrier hits a fixed endpoint, then folds. For the
/// triangle this reads the bottom edge through the letter renaming b↦l, c↦r.
Dyadic fold_limit(const CoalgebraSpec& c, const CarrierPoint& x);

/// I_n = [1/4, 1/4+…+1/4ⁿ], J_n = I_n's right end shifted by [3, 4]/4^{n+1};
/// all endpoints exact dyadics.
struct IntervalFamily {
    int n;
    Dyadic i_lo, i_hi;
    Dyadic j_lo, j_hi;
    static IntervalFamily at(int n);
};

/// Endpoints plus `interior` equally spaced interior dyadics (sixteenths of
/// the span), collapsing to one point for degenerate intervals.
std::vector<Dyadic> interval_samples(const Dyadic& lo, const Dyadic& hi, int interior);

struct ClaimsReport {
    bool ok = true;
    int checks = 0;
    std::string first_failure;
    void fail(const std::string& what) {
        if (ok) first_failure = what;
        ok = false;
    }
};

/// Claims (a)/(b): f = 0 on every I_n and f = 1/2ⁿ on every J_n, via both
/// f_reference and the iterated-coalgebra fold. `eval` may substitute a
/// corrupted evaluator (harness self-test); null uses f_reference.
ClaimsReport verify_claims_ab(int n_max, int samples_per_interval,
                              std::function<Dyadic(const Dyadic&)> eval = nullptr);

/// Same value laws driven by the triangle coalgebra's bottom edge.
ClaimsReport triangle_g_claims(int n_max, int samples_per_interval);

struct LipschitzRow {
    int n;
    Dyadic x, y;    // x ∈ I_{n+1}, y ∈ J_n, distance 2/4^{n+1}
    Dyadic fx, fy;  // 0 and 1/2ⁿ
    Dyadic ratio;   // |fx−fy| / |x−y| = 2^{n+1}
};

/// The growing lower bounds on any Lipschitz constant; ratios double row to
/// row, so no finite constant exists.
std::vector<LipschitzRow> lipschitz_table(int n_max);

struct DiscontinuityWitness {
    std::string input_a, input_b;
    Dyadic input_distance;
    std::string image_a, image_b;
    Dyadic image_distance;
};

/// Bi-pointed: 1 vs (2ⁿ−1)/2ⁿ under the fold of the {⊥,⊤} algebra.
DiscontinuityWitness discontinuity_witness_bip(int n);
/// Tri-pointed: [aⁿ⁺¹·T] vs [aⁿ⁺¹·L] under the fold of the {T,L,R} algebra.
DiscontinuityWitness discontinuity_witness_trip(int n);

/// CSV: n,x_num,x_exp,f_num,f_exp rows over the I/J sample grid.
void write_values_csv(std::ostream& os, int n_max, int samples_per_interval);
/// CSV: n,ratio_num,ratio_exp.
void write_lipschitz_csv(std::ostream& os, int n_max);

}  // namespace pms

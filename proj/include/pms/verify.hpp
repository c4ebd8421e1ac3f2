#pragma once

#include "pms/space.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pms {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on pass, witness on failure
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

struct VerifyCaps {
    int bi_depth = 8;    // Mⁿ⊗I levels, bi-pointed
    int tri_depth = 4;   // Mⁿ⊗I levels, tri-pointed
    int fold_depth = 10; // c_k isometry levels
    int cauchy_depth = 20;
    int square_depth = 12;
    int n_max = 10;      // interval families / witnesses
    int samples = 8;     // interior samples per interval
    int seeds = 100;     // dyadic seeds for iteration suites
    int trials = 1000;   // randomized map-property trials
    std::uint64_t seed = 20240817;
};

/// Suites: metric-axioms, oracle, isometry-ck, cauchy, squares, claims-ab,
/// lipschitz, discontinuity, functoriality, all. Throws std::invalid_argument on an
/// unknown name.
SuiteResult run_suite(const std::string& name, const VerifyCaps& caps = {});

std::vector<std::string> suite_names();

/// A uniformly sampled valid pointed space: distinguished points first,
/// remaining distances drawn from [1/2, 1] in sixteenths so every metric
/// axiom holds by construction.
FinitePointedSpace random_pointed_space(std::mt19937_64& rng, Arity arity, int size);

}  // namespace pms

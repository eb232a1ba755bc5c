#pragma once

#include "pframe/normed_linalg.hpp"

namespace pframe {

/// Which exponent the corollary's distance sum uses.
enum class ExponentMode {
    AsStatedP,   // lambda = sum ||tau_n - omega_n||^p, gamma = lambda^(1/p)
    ConjugateQ,  // lambda = sum ||tau_n - omega_n||^q, gamma = lambda^(1/q)
};

inline const char* to_string(ExponentMode m) { return m == ExponentMode::AsStatedP ? "as-stated" : "conjugate"; }

/// Tolerances and search budgets shared by the checks, oracles and CLI.
struct Config {
    SearchConfig search;

    std::size_t oracle_samples = 8192;  // sphere directions for the brute-force oracle
    int refine_steps = 200;             // coordinate-descent sweeps
    double refine_rel_tol = 1e-10;      // sweep stops below this relative improvement

    double exact_tol = kExactTol;
    double tol = kBracketTol;
    double singular_rel = kSingularRel;

    ExponentMode exponent_mode = ExponentMode::AsStatedP;

    friend bool operator==(const Config&, const Config&) = default;
};

} // namespace pframe

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lingame/game.hpp"
#include "lingame/numeric.hpp"

namespace lingame {

enum class Normalization { sqrt_inputs, paper_literal };

/// Upper bound on the quantum value from the operator norms of the
/// entrywise powers of the game matrix.
struct SpectralBound {
    double p_q_bar = 0.0;
    std::vector<double> per_power_norms; // index k-1 holds the norm of the k-th power
    Normalization normalization = Normalization::sqrt_inputs;
    double tolerance = 1e-12;
    double error_bound = 0.0; // (d-1) * tolerance, conservative
};

struct SpectralBudget {
    std::uint64_t power_cap = 1'000'000; // refuse when d-1 exceeds this
    double tolerance = 1e-12;
    std::uint64_t max_iterations = 200'000;
    int workers = 1;
};

/// Entrywise k-th power as machine-precision complex values; the phase
/// fraction ((k * k_ij) mod d) / d is formed in extended precision first.
Eigen::MatrixXcd entrywise_power(const GameMatrix& m, const Int& k);

/// Largest singular value to absolute accuracy tol, by power iteration on
/// a^H a from fixed deterministic starts (all-ones plus each basis vector,
/// reporting the max; a lone start can be orthogonal to the top singular
/// subspace). Throws ConvergenceError when the iteration cap is hit.
double operator_norm(const Eigen::MatrixXcd& a, double tol, std::uint64_t max_iterations = 200'000);

/// p_bar_Q = (1/d) (1 + S / N) with S the sum of the d-1 entrywise power
/// norms and N = sqrt(n_a n_b), or N = n_a n_b in paper_literal mode.
SpectralBound quantum_upper_bound(const GameMatrix& m,
                                  Normalization normalization = Normalization::sqrt_inputs,
                                  const SpectralBudget& budget = {});

/// Analytic floor on the sqrt-mode bound when the power sum is refused:
/// every norm is at least sqrt(max(n_a, n_b)).
double quantum_bound_floor(const GameMatrix& m);

/// R = (p_bar_Q - 1/d) / (p_cl - 1/d).
double bias_ratio(double p_q_bar, const Rat& p_cl, const Int& d);

} // namespace lingame

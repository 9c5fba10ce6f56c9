#include "lingame/spectral.hpp"

#include <cmath>
#include <complex>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lingame/errors.hpp"
#include "lingame/parallel.hpp"

namespace lingame {

namespace {
using Big = boost::multiprecision::cpp_bin_float_50;
}

Eigen::MatrixXcd entrywise_power(const GameMatrix& m, const Int& k) {
    if (k < 1 || k >= m.modulus()) throw InputError("power must lie in [1, d-1]");
    const Int& d = m.modulus();
    const Big two_pi = boost::math::constants::two_pi<Big>();
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            Residue r = mod_reduce(k * m.at(i, j), d);
            Big angle = two_pi * Big(r) / Big(d);
            double a = angle.convert_to<double>();
            out(i, j) = std::complex<double>(std::cos(a), std::sin(a));
        }
    }
    return out;
}

namespace {

/// One power-iteration run on a^H a from the given start; returns the
/// converged sigma estimate, or nothing if the start collapses into the
/// null space or the cap is hit.
std::optional<double> power_run(const Eigen::MatrixXcd& a, Eigen::VectorXcd v, double tol,
                                std::uint64_t max_iterations, bool& hit_cap) {
    v.normalize();
    double lambda_prev = -1.0;
    for (std::uint64_t it = 0; it < max_iterations; ++it) {
        Eigen::VectorXcd w = a.adjoint() * (a * v);
        double lambda = std::real(v.dot(w)); // Rayleigh quotient of a^H a
        double nw = w.norm();
        if (nw <= 1e-280) return std::nullopt; // start vector was in the null space
        v = w / nw;
        if (lambda_prev >= 0.0) {
            double sigma = std::sqrt(std::max(lambda, 0.0));
            double sigma_prev = std::sqrt(std::max(lambda_prev, 0.0));
            if (std::abs(sigma - sigma_prev) <= 0.1 * tol) return sigma;
        }
        lambda_prev = lambda;
    }
    hit_cap = true;
    return std::nullopt;
}

} // namespace

double operator_norm(const Eigen::MatrixXcd& a, double tol, std::uint64_t max_iterations) {
    if (tol <= 0) throw InputError("tolerance must be positive");
    const Eigen::Index n = a.cols();
    bool hit_cap = false;

    // deterministic starts: all-ones plus every basis vector, reporting the
    // max. A single start can sit exactly orthogonal to the top singular
    // subspace (at d/2 the matrix is real and symmetric patterns do this),
    // but no nonzero vector is orthogonal to all of e_0..e_{n-1}.
    std::vector<double> values;
    {
        Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(n);
        if (auto s = power_run(a, ones, tol, max_iterations, hit_cap)) values.push_back(*s);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e(i) = 1.0;
        if (auto s = power_run(a, e, tol, max_iterations, hit_cap)) values.push_back(*s);
    }
    if (hit_cap)
        throw ConvergenceError("power iteration did not converge within " +
                               std::to_string(max_iterations) + " iterations");
    if (values.empty()) return 0.0; // zero matrix
    return *std::max_element(values.begin(), values.end());
}

SpectralBound quantum_upper_bound(const GameMatrix& m, Normalization normalization,
                                  const SpectralBudget& budget) {
    const Int& d = m.modulus();
    if (d - 1 > budget.power_cap)
        throw BudgetExceeded("spectral sum needs " + Int(d - 1).str() +
                                 " operator norms, over the cap of " +
                                 std::to_string(budget.power_cap),
                             0);
    const std::uint64_t terms = Int(d - 1).convert_to<std::uint64_t>();
    SpectralBound bound;
    bound.normalization = normalization;
    bound.tolerance = budget.tolerance;
    bound.per_power_norms.assign(terms, 0.0);

    // conjugate halves share singular values; compute k <= d/2 and mirror
    const std::uint64_t half = terms / 2 + (terms % 2);
    for_each_chunk(half, budget.workers, [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t t = lo; t < hi; ++t) {
            Int k = Int(t) + 1;
            double norm =
                operator_norm(entrywise_power(m, k), budget.tolerance, budget.max_iterations);
            bound.per_power_norms[t] = norm;
            if (t + 1 != terms - t) bound.per_power_norms[terms - 1 - t] = norm;
        }
    });

    double floor = std::sqrt(static_cast<double>(std::max(m.rows(), m.cols())));
    for (double v : bound.per_power_norms)
        if (v < floor - 1e-6)
            throw ConsistencyError("an entrywise power norm fell below the column-norm floor");

    long double sum = 0.0L;
    for (double v : bound.per_power_norms) sum += v;
    double cells = static_cast<double>(m.rows()) * m.cols();
    double scale = normalization == Normalization::sqrt_inputs ? std::sqrt(cells) : cells;
    Big dd(d);
    bound.p_q_bar = ((1 + Big(static_cast<double>(sum)) / Big(scale)) / dd).convert_to<double>();
    bound.error_bound = static_cast<double>(terms) * budget.tolerance;
    return bound;
}

double quantum_bound_floor(const GameMatrix& m) {
    // (1/d)(1 + (d-1) sqrt(max) / sqrt(n_a n_b)); tends to 1/sqrt(min side)
    Big dd(m.modulus());
    double cells = static_cast<double>(m.rows()) * m.cols();
    double per = std::sqrt(static_cast<double>(std::max(m.rows(), m.cols()))) / std::sqrt(cells);
    return ((1 + (dd - 1) * Big(per)) / dd).convert_to<double>();
}

double bias_ratio(double p_q_bar, const Rat& p_cl, const Int& d) {
    Rat p_rand = Rat(1, d);
    if (p_cl <= p_rand)
        throw InputError("bias ratio undefined: classical value does not beat random play");
    double pr = rat_to_double(p_rand);
    return (p_q_bar - pr) / (rat_to_double(p_cl) - pr);
}

} // namespace lingame

#ifndef SUMMARAX_NUMERICS_HPP_
#define SUMMARAX_NUMERICS_HPP_

#include <map>
#include <string>
#include <vector>

namespace summarax {

// Small row-major dense matrix. Everything in this module targets
// term-by-sentence scale (at most a few hundred rows/columns).
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> entries;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0.0) {}

    double &at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

struct ScoreIterationResult {
    std::vector<double> scores;
    bool converged = false;
    int iterations = 0;
};

// Damped fixed-point iteration over a weighted directed graph:
//
//   X(i) = (1 - d) + d * sum_{j in In(i)} (w_ji / sum_k w_jk) * X(j)
//
// adjacency.at(j, i) is the weight of edge j -> i. Nodes with zero out-weight
// distribute nothing. Starts from all-ones; stops when the max-abs update
// falls to tol or max_iter is reached. With uniform weights this is the
// classic PageRank update.
ScoreIterationResult damped_score_iteration(const DenseMatrix &adjacency, double damping,
                                            double tol, int max_iter);

struct SvdResult {
    DenseMatrix u;                       // m x k, orthonormal columns
    std::vector<double> singular_values; // k, non-increasing, >= 0
    DenseMatrix vt;                      // k x n, orthonormal rows
};

// Full thin SVD (k = min(m, n)) via one-sided Jacobi rotations. Intended for
// small dense matrices; dimensions are capped at 1024.
SvdResult svd_decompose(const DenseMatrix &a);

struct ProbabilityDistribution {
    std::map<std::string, double> probs;
};

// Builds a normalized distribution from raw counts; empty input yields an
// empty (invalid) distribution the caller must handle.
ProbabilityDistribution distribution_from_counts(const std::map<std::string, long long> &counts);

// KL(P||Q) = sum_w P(w) * ln(P(w) / max(Q(w), epsilon)), natural log.
// Terms with P(w) = 0 contribute nothing; Q mass missing from P's support is
// ignored. Both inputs must sum to 1 within 1e-6.
double kl_divergence(const ProbabilityDistribution &p, const ProbabilityDistribution &q,
                     double epsilon);

} // namespace summarax

#endif // SUMMARAX_NUMERICS_HPP_

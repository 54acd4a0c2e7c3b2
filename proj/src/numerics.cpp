#include "summarax/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "summarax/error.hpp"

namespace summarax {

namespace {

constexpr int kMaxSvdDim = 1024;
constexpr int kMaxJacobiSweeps = 64;
// Relative off-diagonal threshold for the one-sided Jacobi sweep.
constexpr double kJacobiTol = 1e-15;

void validate_square_weights(const DenseMatrix &adjacency) {
    if (adjacency.rows != adjacency.cols)
        throw Error(Errc::invalid_argument, "adjacency matrix must be square");
    if (adjacency.rows < 1)
        throw Error(Errc::dimension_zero, "adjacency matrix must have at least one node");
    for (double w : adjacency.entries) {
        if (!std::isfinite(w) || w < 0.0)
            throw Error(Errc::non_finite_weight, "edge weights must be finite and non-negative");
    }
}

double column_dot(const DenseMatrix &b, int p, int q) {
    double acc = 0.0;
    for (int i = 0; i < b.rows; ++i)
        acc += b.at(i, p) * b.at(i, q);
    return acc;
}

DenseMatrix transpose(const DenseMatrix &a) {
    DenseMatrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            t.at(j, i) = a.at(i, j);
    return t;
}

// Orthonormalizes the remaining columns of u (those flagged zero) against all
// others by projecting out unit basis vectors. Deterministic.
void complete_basis(DenseMatrix &u, const std::vector<bool> &needs_fill) {
    const int m = u.rows;
    const int k = u.cols;
    for (int j = 0; j < k; ++j) {
        if (!needs_fill[j])
            continue;
        std::vector<double> v(m, 0.0);
        for (int basis = 0; basis < m; ++basis) {
            std::fill(v.begin(), v.end(), 0.0);
            v[basis] = 1.0;
            for (int other = 0; other < k; ++other) {
                if (other == j && needs_fill[other])
                    continue;
                if (needs_fill[other] && other > j)
                    continue; // not yet filled
                double proj = 0.0;
                for (int i = 0; i < m; ++i)
                    proj += u.at(i, other) * v[i];
                for (int i = 0; i < m; ++i)
                    v[i] -= proj * u.at(i, other);
            }
            double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
            if (norm > 0.5) {
                for (int i = 0; i < m; ++i)
                    u.at(i, j) = v[i] / norm;
                break;
            }
        }
    }
}

// One-sided Jacobi on b (m >= n): rotates column pairs until all columns are
// mutually orthogonal, accumulating the right rotations in v.
void jacobi_orthogonalize(DenseMatrix &b, DenseMatrix &v) {
    const int n = b.cols;
    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double alpha = column_dot(b, p, p);
                const double beta = column_dot(b, q, q);
                const double gamma = column_dot(b, p, q);
                if (alpha == 0.0 || beta == 0.0)
                    continue;
                if (std::abs(gamma) <= kJacobiTol * std::sqrt(alpha * beta))
                    continue;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < b.rows; ++i) {
                    const double bp = b.at(i, p);
                    const double bq = b.at(i, q);
                    b.at(i, p) = c * bp - s * bq;
                    b.at(i, q) = s * bp + c * bq;
                }
                for (int i = 0; i < v.rows; ++i) {
                    const double vp = v.at(i, p);
                    const double vq = v.at(i, q);
                    v.at(i, p) = c * vp - s * vq;
                    v.at(i, q) = s * vp + c * vq;
                }
                rotated = true;
            }
        }
        if (!rotated)
            break;
    }
}

} // namespace

ScoreIterationResult damped_score_iteration(const DenseMatrix &adjacency, double damping,
                                            double tol, int max_iter) {
    validate_square_weights(adjacency);
    if (!(damping > 0.0 && damping < 1.0))
        throw Error(Errc::invalid_argument, "damping factor must lie in (0, 1)");
    if (max_iter < 1)
        throw Error(Errc::invalid_argument, "max_iter must be >= 1");

    const int n = adjacency.rows;
    std::vector<double> out_sum(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            out_sum[j] += adjacency.at(j, i);

    ScoreIterationResult result;
    result.scores.assign(n, 1.0);
    std::vector<double> next(n, 0.0);

    for (int iter = 0; iter < max_iter; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                if (out_sum[j] > 0.0)
                    acc += adjacency.at(j, i) / out_sum[j] * result.scores[j];
            }
            next[i] = (1.0 - damping) + damping * acc;
        }
        double delta = 0.0;
        for (int i = 0; i < n; ++i)
            delta = std::max(delta, std::abs(next[i] - result.scores[i]));
        result.scores.swap(next);
        result.iterations = iter + 1;
        if (delta <= tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

SvdResult svd_decompose(const DenseMatrix &a) {
    if (a.rows < 1 || a.cols < 1)
        throw Error(Errc::dimension_zero, "matrix must have at least one row and column");
    if (a.rows > kMaxSvdDim || a.cols > kMaxSvdDim)
        throw Error(Errc::invalid_argument, "matrix exceeds the small-matrix bound of 1024");
    for (double e : a.entries) {
        if (!std::isfinite(e))
            throw Error(Errc::non_finite_weight, "matrix entries must be finite");
    }

    const bool transposed = a.rows < a.cols;
    DenseMatrix b = transposed ? transpose(a) : a;
    const int m = b.rows;
    const int n = b.cols; // k = n = min(original dims)

    DenseMatrix v(n, n);
    for (int i = 0; i < n; ++i)
        v.at(i, i) = 1.0;

    jacobi_orthogonalize(b, v);

    std::vector<double> sigma(n, 0.0);
    for (int j = 0; j < n; ++j)
        sigma[j] = std::sqrt(column_dot(b, j, j));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return sigma[x] > sigma[y]; });

    const double sigma_max = sigma.empty() ? 0.0 : sigma[order[0]];
    const double zero_cutoff = sigma_max * static_cast<double>(std::max(m, n)) * 1e-14;

    DenseMatrix left(m, n);
    DenseMatrix right_t(n, n);
    std::vector<double> sorted_sigma(n, 0.0);
    std::vector<bool> needs_fill(n, false);
    for (int out = 0; out < n; ++out) {
        const int src = order[out];
        sorted_sigma[out] = sigma[src];
        if (sigma[src] <= zero_cutoff) {
            needs_fill[out] = true;
        } else {
            for (int i = 0; i < m; ++i)
                left.at(i, out) = b.at(i, src) / sigma[src];
        }
        for (int i = 0; i < n; ++i)
            right_t.at(out, i) = v.at(i, src);
    }
    complete_basis(left, needs_fill);

    SvdResult result;
    if (transposed) {
        // a^T = left * diag(sigma) * right_t  =>  a = right_t^T * diag * left^T
        result.u = transpose(right_t);
        result.vt = transpose(left);
    } else {
        result.u = std::move(left);
        result.vt = std::move(right_t);
    }
    result.singular_values = std::move(sorted_sigma);
    return result;
}

ProbabilityDistribution distribution_from_counts(const std::map<std::string, long long> &counts) {
    ProbabilityDistribution dist;
    long long total = 0;
    for (const auto &[token, count] : counts)
        total += count;
    if (total <= 0)
        return dist;
    for (const auto &[token, count] : counts) {
        if (count > 0)
            dist.probs[token] = static_cast<double>(count) / static_cast<double>(total);
    }
    return dist;
}

namespace {

void validate_distribution(const ProbabilityDistribution &dist, const char *label) {
    double sum = 0.0;
    for (const auto &[token, p] : dist.probs) {
        if (!std::isfinite(p) || p < 0.0)
            throw Error(Errc::invalid_distribution,
                        std::string(label) + " has a negative or non-finite probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw Error(Errc::invalid_distribution,
                    std::string(label) + " probabilities sum to " + std::to_string(sum));
}

} // namespace

double kl_divergence(const ProbabilityDistribution &p, const ProbabilityDistribution &q,
                     double epsilon) {
    if (!(epsilon > 0.0))
        throw Error(Errc::invalid_argument, "epsilon must be positive");
    validate_distribution(p, "P");
    validate_distribution(q, "Q");

    double divergence = 0.0;
    for (const auto &[token, pw] : p.probs) {
        if (pw <= 0.0)
            continue;
        auto it = q.probs.find(token);
        const double qw = std::max(it == q.probs.end() ? 0.0 : it->second, epsilon);
        divergence += pw * std::log(pw / qw);
    }
    return divergence;
}

} // namespace summarax

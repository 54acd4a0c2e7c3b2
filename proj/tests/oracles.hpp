// Test-only reference implementations, kept independent of the library code
// paths they check: a dense linear solver for fixed-point scores, a two-sided
// Jacobi eigensolver for singular-value cross-checks, and a straight-line KL
// evaluation for greedy-selection audits.
#ifndef SUMMARAX_TESTS_ORACLES_HPP_
#define SUMMARAX_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracles {

using Matrix = std::vector<std::vector<double>>;

// Gaussian elimination with partial pivoting.
inline std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col]))
                pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-14)
            throw std::runtime_error("singular system in oracle solve");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k)
            acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

// Exact fixed point of X = (1-d)*1 + d*M^T X where M row-normalizes the
// out-weights of `weights` (weights[j][i] = edge j -> i); dangling rows stay
// zero.
inline std::vector<double> fixed_point_scores(const Matrix &weights, double damping) {
    const std::size_t n = weights.size();
    Matrix system(n, std::vector<double>(n, 0.0));
    std::vector<double> rhs(n, 1.0 - damping);
    for (std::size_t i = 0; i < n; ++i)
        system[i][i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double out = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            out += weights[j][i];
        if (out <= 0.0)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            system[i][j] -= damping * weights[j][i] / out;
    }
    return solve_linear(system, rhs);
}

// Eigenvalues of a symmetric matrix via classical two-sided Jacobi sweeps,
// returned in descending order.
inline std::vector<double> symmetric_eigenvalues(Matrix s) {
    const std::size_t n = s.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += s[p][q] * s[p][q];
        if (off < 1e-26)
            break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(s[p][q]) < 1e-300)
                    continue;
                const double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double si = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double skp = s[k][p];
                    const double skq = s[k][q];
                    s[k][p] = c * skp - si * skq;
                    s[k][q] = si * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double spk = s[p][k];
                    const double sqk = s[q][k];
                    s[p][k] = c * spk - si * sqk;
                    s[q][k] = si * spk + c * sqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = s[i][i];
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

using Dist = std::map<std::string, double>;

inline Dist dist_from_tokens(const std::vector<std::string> &tokens) {
    Dist d;
    for (const auto &t : tokens)
        d[t] += 1.0;
    for (auto &[token, v] : d)
        v /= static_cast<double>(tokens.size());
    return d;
}

inline double kl_reference(const Dist &p, const Dist &q, double epsilon) {
    double acc = 0.0;
    for (const auto &[token, pw] : p) {
        if (pw <= 0.0)
            continue;
        const auto it = q.find(token);
        const double qw = it == q.end() ? 0.0 : it->second;
        acc += pw * std::log(pw / std::max(qw, epsilon));
    }
    return acc;
}

} // namespace oracles

#endif // SUMMARAX_TESTS_ORACLES_HPP_

#include "s2v/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "s2v/error.hpp"

namespace s2v::stats {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

}  // namespace

EigenSym jacobi_eigen(const Matrix& input) {
    const std::size_t n = input.rows();
    Matrix a = input;
    Matrix v(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    const double tol = 1e-12 * std::max(1.0, frobenius_norm(a));
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenSym out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t src = order[col];
        out.values[col] = a(src, src);
        std::size_t arg = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (std::fabs(v(k, src)) > std::fabs(v(arg, src))) arg = k;
        double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = sign * v(k, src);
    }
    return out;
}

LeastSquares qr_least_squares(const Matrix& input, std::span<const double> y) {
    const std::size_t n = input.rows();
    const std::size_t m = input.cols();
    if (m == 0 || n < m) {
        raise(errc::too_few_observations,
              "least squares needs at least as many rows as columns");
    }

    Matrix a = input;
    std::vector<double> rhs(y.begin(), y.end());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t k = 0; k < m; ++k) {
        // Pivot: remaining column with the largest residual norm.
        std::size_t best = k;
        double best_norm = -1.0;
        for (std::size_t j = k; j < m; ++j) {
            double norm2 = 0.0;
            for (std::size_t i = k; i < n; ++i) norm2 += a(i, j) * a(i, j);
            if (norm2 > best_norm) {
                best_norm = norm2;
                best = j;
            }
        }
        if (best != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, best));
            std::swap(perm[k], perm[best]);
        }

        double norm = std::sqrt(std::max(best_norm, 0.0));
        if (norm == 0.0) continue;  // rank check below reports the column

        double alpha = a(k, k) >= 0.0 ? -norm : norm;
        std::vector<double> v(n - k);
        v[0] = a(k, k) - alpha;
        for (std::size_t i = k + 1; i < n; ++i) v[i - k] = a(i, k);
        double vtv = 0.0;
        for (double x : v) vtv += x * x;
        a(k, k) = alpha;
        for (std::size_t i = k + 1; i < n; ++i) a(i, k) = 0.0;
        if (vtv == 0.0) continue;

        for (std::size_t j = k + 1; j < m; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += v[i - k] * a(i, j);
            double scale = 2.0 * dot / vtv;
            for (std::size_t i = k; i < n; ++i) a(i, j) -= scale * v[i - k];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < n; ++i) dot += v[i - k] * rhs[i];
        double scale = 2.0 * dot / vtv;
        for (std::size_t i = k; i < n; ++i) rhs[i] -= scale * v[i - k];
    }

    const double r00 = std::fabs(a(0, 0));
    const double tol =
        static_cast<double>(std::max(n, m)) * std::numeric_limits<double>::epsilon() * r00;
    for (std::size_t k = 0; k < m; ++k) {
        if (std::fabs(a(k, k)) <= tol) {
            raise(errc::rank_deficient,
                  "design matrix is rank deficient at column " + std::to_string(perm[k]));
        }
    }

    std::vector<double> z(m);
    for (std::size_t i = m; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < m; ++j) s -= a(i, j) * z[j];
        z[i] = s / a(i, i);
    }

    LeastSquares out;
    out.beta.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) out.beta[static_cast<std::size_t>(perm[k])] = z[k];
    out.perm = std::move(perm);
    out.r = Matrix(m, m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) out.r(i, j) = a(i, j);
    return out;
}

Matrix xtx_inverse(const LeastSquares& ls) {
    const std::size_t m = ls.r.rows();
    // W = R^-1 by back substitution against identity columns.
    Matrix w(m, m, 0.0);
    for (std::size_t col = 0; col < m; ++col) {
        for (std::size_t i = m; i-- > 0;) {
            double s = (i == col) ? 1.0 : 0.0;
            for (std::size_t j = i + 1; j < m; ++j) s -= ls.r(i, j) * w(j, col);
            w(i, col) = s / ls.r(i, i);
        }
    }
    Matrix inv_permuted(m, m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t k = std::max(i, j); k < m; ++k) s += w(i, k) * w(j, k);
            inv_permuted(i, j) = s;
        }
    Matrix out(m, m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out(static_cast<std::size_t>(ls.perm[i]), static_cast<std::size_t>(ls.perm[j])) =
                inv_permuted(i, j);
    return out;
}

}  // namespace s2v::stats

#include "s2v/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2v/error.hpp"
#include "s2v/linalg.hpp"

namespace s2v::stats {

PcaResult pca(const Matrix& x, bool center) {
    const std::size_t n = x.rows();
    const std::size_t p = x.cols();
    if (n < 2) raise(errc::too_few_observations, "pca needs at least two rows");
    if (p < 1) raise(errc::degenerate_input, "pca needs at least one column");

    PcaResult out;
    out.column_means.assign(p, 0.0);
    if (center) {
        for (std::size_t j = 0; j < p; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += x(i, j);
            out.column_means[j] = s / static_cast<double>(n);
        }
    }

    Matrix cov(p, p, 0.0);
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a; b < p; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += (x(i, a) - out.column_means[a]) * (x(i, b) - out.column_means[b]);
            double v = s / static_cast<double>(n - 1);
            cov(a, b) = v;
            cov(b, a) = v;
        }
    }

    double trace = 0.0;
    for (std::size_t j = 0; j < p; ++j) trace += cov(j, j);
    if (trace <= 0.0) {
        raise(errc::degenerate_input, "pca input has zero total variance");
    }

    EigenSym eig = jacobi_eigen(cov);
    out.components = std::move(eig.vectors);
    out.eigenvalues.resize(p);
    out.explained_variance_ratio.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        out.eigenvalues[j] = std::max(eig.values[j], 0.0);
        out.explained_variance_ratio[j] = out.eigenvalues[j] / trace;
    }
    return out;
}

double cumulative_variance(const PcaResult& r, std::size_t m) {
    if (m < 1 || m > r.explained_variance_ratio.size()) {
        raise(errc::index_out_of_range,
              "component count " + std::to_string(m) + " outside 1.." +
                  std::to_string(r.explained_variance_ratio.size()));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) sum += r.explained_variance_ratio[j];
    return sum;
}

Matrix pca_project(const PcaResult& r, const Matrix& x, std::size_t k) {
    const std::size_t p = r.eigenvalues.size();
    if (k < 1 || k > p) raise(errc::index_out_of_range, "projection rank outside 1..p");
    if (x.cols() != p) raise(errc::feature_mismatch, "column count differs from pca input");
    Matrix out(x.rows(), k, 0.0);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t c = 0; c < k; ++c) {
            double s = 0.0;
            for (std::size_t j = 0; j < p; ++j)
                s += (x(i, j) - r.column_means[j]) * r.components(j, c);
            out(i, c) = s;
        }
    return out;
}

}  // namespace s2v::stats

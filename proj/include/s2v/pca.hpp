#pragma once

#include <vector>

#include "s2v/matrix.hpp"

namespace s2v::stats {

struct PcaResult {
    Matrix components;                            // p x p, columns descending by eigenvalue
    std::vector<double> eigenvalues;              // nonnegative, descending
    std::vector<double> explained_variance_ratio; // eigenvalue / trace
    std::vector<double> column_means;             // zeros when centering disabled
};

/// PCA via the sample covariance (divisor n-1) of column-centered data.
/// Throws Error(degenerate_input) when total variance is zero.
PcaResult pca(const Matrix& x, bool center = true);

/// Sum of the first m explained-variance ratios, 1 <= m <= p.
double cumulative_variance(const PcaResult& r, std::size_t m);

/// Projects rows of x (centered with the stored means) onto the first k components.
Matrix pca_project(const PcaResult& r, const Matrix& x, std::size_t k);

}  // namespace s2v::stats

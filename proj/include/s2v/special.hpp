#pragma once

namespace s2v::stats {

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double incomplete_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double incomplete_gamma_q(double a, double x);

/// Survival function of Student's t with df degrees of freedom: P(T > t).
double student_t_sf(double t, double df);

/// Two-sided p-value: 2 * P(T > |t|).
double student_t_two_sided(double t, double df);

/// Quantile t* with P(T > t*) = tail (upper tail), solved by bisection.
double student_t_upper_quantile(double tail, double df);

/// Survival function of the chi-squared distribution with df degrees of freedom.
double chi2_sf(double x, double df);

/// Survival function of the F distribution with (d1, d2) degrees of freedom.
double f_sf(double f, double d1, double d2);

/// Standard normal survival function.
double normal_sf(double z);

}  // namespace s2v::stats

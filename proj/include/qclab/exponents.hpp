#pragma once

#include <optional>
#include <stdexcept>

namespace qclab {

/// The scalar exponents tying the whole construction together.
///   t_prime = 2Kt / (2 + (K-1)t)   (dimension of the image set)
///   holder  = t/t_prime = 1/K + (K-1)t/(2K)   (regularity of the map)
struct ExponentSet {
    double K = 1;        // dilatation bound, >= 1
    double alpha = 0;    // target regularity of the witness, in (0,1)
    double t = 0;        // source dimension, in (0,2)
    double t_prime = 0;  // image dimension
    double holder = 1;   // t / t_prime
};

/// d = 2(1 + alpha*K) / (1 + K).  Throws std::invalid_argument outside
/// 0 < alpha < 1, K >= 1.
double critical_dimension(double alpha, double K);

/// t' = 2Kt / (2 + (K-1)t).  Requires 0 < t < 2 (t = 2 is a degenerate
/// fixed point), K >= 1.
double stretched_dimension(double t, double K);

/// t/t' = 1/K + (K-1)t/(2K); always in (1/K, 1].
double holder_exponent(double t, double K);

/// Assembles and cross-validates an ExponentSet from (alpha, K).
ExponentSet make_exponents(double alpha, double K);

/// sigma = R^{(2-t)/(tK)} without the admissibility bound (test/diagnostic use).
double sigma_from_radius_raw(double R, double t, double K);
double sigma_from_log_radius_raw(double log_R, double t, double K);

/// The area rule sigma^{tK} = R^{2-t}.  Returns nullopt when the resulting
/// sigma fails sigma < sigma_max (default 1/100).  Verifies the identity
/// t*log(sigma^K R) = t'*log(sigma R) = 2 log R to 1e-12 in log space.
std::optional<double> sigma_from_radius(double R, double t, double K, double sigma_max = 0.01);

/// Largest admissible radius: R_max = sigma_max^{tK/(2-t)};
/// sigma_from_radius(R) < sigma_max for all R < R_max.
double max_radius_for_sigma(double t, double K, double sigma_max = 0.01);

}  // namespace qclab

#include "qclab/exponents.hpp"

#include <cmath>
#include <string>

namespace qclab {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("exponents: ") + what);
}

}  // namespace

double critical_dimension(double alpha, double K) {
    require(alpha > 0 && alpha < 1, "alpha must lie in (0,1)");
    require(K >= 1, "K must be >= 1");
    return 2 * (1 + alpha * K) / (1 + K);
}

double stretched_dimension(double t, double K) {
    require(t > 0 && t < 2, "t must lie in (0,2)");
    require(K >= 1, "K must be >= 1");
    return 2 * K * t / (2 + (K - 1) * t);
}

double holder_exponent(double t, double K) {
    require(t > 0 && t < 2, "t must lie in (0,2)");
    require(K >= 1, "K must be >= 1");
    return 1 / K + (K - 1) * t / (2 * K);
}

ExponentSet make_exponents(double alpha, double K) {
    ExponentSet e;
    e.K = K;
    e.alpha = alpha;
    e.t = critical_dimension(alpha, K);
    e.t_prime = stretched_dimension(e.t, K);
    e.holder = holder_exponent(e.t, K);
    return e;
}

double sigma_from_log_radius_raw(double log_R, double t, double K) {
    return std::exp((2 - t) / (t * K) * log_R);
}

double sigma_from_radius_raw(double R, double t, double K) {
    require(R > 0 && R < 1, "R must lie in (0,1)");
    require(t > 0 && t < 2, "t must lie in (0,2)");
    require(K >= 1, "K must be >= 1");
    return sigma_from_log_radius_raw(std::log(R), t, K);
}

std::optional<double> sigma_from_radius(double R, double t, double K, double sigma_max) {
    double sigma = sigma_from_radius_raw(R, t, K);
    if (!(sigma < sigma_max)) return std::nullopt;
    // consistency of the area identity in log space
    double log_R = std::log(R);
    double log_sigma = std::log(sigma);
    double t_prime = stretched_dimension(t, K);
    double lhs = t * (K * log_sigma + log_R);
    double mid = t_prime * (log_sigma + log_R);
    double rhs = 2 * log_R;
    double scale = std::abs(rhs) + 1;
    if (std::abs(lhs - rhs) > 1e-12 * scale || std::abs(mid - rhs) > 1e-12 * scale)
        throw std::logic_error("exponents: area identity violated");
    return sigma;
}

double max_radius_for_sigma(double t, double K, double sigma_max) {
    require(sigma_max > 0 && sigma_max < 1, "sigma_max must lie in (0,1)");
    require(t > 0 && t < 2, "t must lie in (0,2)");
    require(K >= 1, "K must be >= 1");
    return std::exp(t * K / (2 - t) * std::log(sigma_max));
}

}  // namespace qclab

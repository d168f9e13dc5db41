#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace qclab {

using complexd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;

inline double sq(double x) { return x * x; }

/// |z|^2 without the sqrt of std::abs.
inline double norm2(complexd z) { return z.real() * z.real() + z.imag() * z.imag(); }

/// Exact-ish integer square root for 64-bit values: largest s with s*s <= v.
inline std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) return -1;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

/// Area of the intersection of two disks (standard lens formula).
inline double lens_area(complexd c1, double r1, complexd c2, double r2) {
    double d = std::abs(c1 - c2);
    if (d >= r1 + r2) return 0.0;
    if (d <= std::abs(r1 - r2)) {
        double r = std::min(r1, r2);
        return kPi * r * r;
    }
    // circular segment angles
    double a1 = (d * d + r1 * r1 - r2 * r2) / (2 * d * r1);
    double a2 = (d * d + r2 * r2 - r1 * r1) / (2 * d * r2);
    a1 = std::clamp(a1, -1.0, 1.0);
    a2 = std::clamp(a2, -1.0, 1.0);
    double t1 = std::acos(a1), t2 = std::acos(a2);
    return r1 * r1 * (t1 - std::sin(2 * t1) / 2) + r2 * r2 * (t2 - std::sin(2 * t2) / 2);
}

/// Angular width 2*acos(...) of the set {|arg|} where the circle of radius rho
/// about the origin meets the disk D(center_dist, r).  Returns a value in [0, 2pi].
inline double circle_angular_width(double rho, double center_dist, double r) {
    if (rho <= 0) return center_dist < r ? 2 * kPi : 0.0;
    if (center_dist + rho <= r) return 2 * kPi;
    if (std::abs(rho - center_dist) >= r) return 0.0;
    double c = (rho * rho + center_dist * center_dist - r * r) / (2 * rho * center_dist);
    c = std::clamp(c, -1.0, 1.0);
    return 2 * std::acos(c);
}

/// Squared distance from a point to an axis-aligned rectangle [x0,x1]x[y0,y1].
inline double dist2_point_rect(double px, double py, double x0, double y0, double x1, double y1) {
    double dx = std::max({x0 - px, 0.0, px - x1});
    double dy = std::max({y0 - py, 0.0, py - y1});
    return dx * dx + dy * dy;
}

/// Largest squared distance from a point to a rectangle (farthest corner).
inline double maxdist2_point_rect(double px, double py, double x0, double y0, double x1, double y1) {
    double dx = std::max(std::abs(px - x0), std::abs(px - x1));
    double dy = std::max(std::abs(py - y0), std::abs(py - y1));
    return dx * dx + dy * dy;
}

/// Ordinary least squares slope/intercept fit of y against x.
struct LineFit {
    double slope = 0;
    double intercept = 0;
    double max_residual = 0;  // max |y_i - (slope*x_i + intercept)|
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit f;
    std::size_t n = x.size();
    if (n < 2) return f;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    for (std::size_t i = 0; i < n; ++i)
        f.max_residual = std::max(f.max_residual, std::abs(y[i] - (f.slope * x[i] + f.intercept)));
    return f;
}

/// Accumulates sums of complex terms spanning many orders of magnitude:
/// each term is given as direction * exp(log_mag).  The running sum is kept
/// rescaled to the largest magnitude seen.
class LogComplexSum {
  public:
    void add(complexd direction, double log_mag) {
        if (direction == complexd(0, 0) || log_mag == -std::numeric_limits<double>::infinity()) return;
        if (empty_) {
            ref_ = log_mag;
            sum_ = direction;
            empty_ = false;
            return;
        }
        if (log_mag > ref_ + 40) {
            sum_ = sum_ * std::exp(ref_ - log_mag) + direction;
            ref_ = log_mag;
        } else {
            sum_ += direction * std::exp(log_mag - ref_);
        }
    }
    void add(complexd value) {
        if (value == complexd(0, 0)) return;
        double m = std::abs(value);
        add(value / m, std::log(m));
    }
    bool empty() const { return empty_; }
    /// log |sum|; -inf when nothing was accumulated or exact cancellation.
    double log_abs() const {
        if (empty_) return -std::numeric_limits<double>::infinity();
        double m = std::abs(sum_);
        return m == 0 ? -std::numeric_limits<double>::infinity() : ref_ + std::log(m);
    }
    complexd direction() const {
        double m = std::abs(sum_);
        return m == 0 ? complexd(0, 0) : sum_ / m;
    }
    /// Value as a plain complex; overflows to inf if log_abs is too large.
    complexd value() const { return empty_ ? complexd(0, 0) : sum_ * std::exp(ref_); }

  private:
    bool empty_ = true;
    double ref_ = 0;
    complexd sum_{0, 0};
};

/// Tanh-sinh (double exponential) quadrature on [a,b]; handles endpoint
/// singularities of sqrt type well.  f is any callable double -> double.
template <typename F>
double integrate_de(F&& f, double a, double b, int levels = 7) {
    if (!(b > a)) return 0.0;
    double c = (a + b) / 2, h = (b - a) / 2;
    double sum = 0;
    double step = 1.0;
    // level 0
    sum = f(c) * kPi / 2;
    double prev = sum * step * h;
    for (int lev = 1; lev <= levels; ++lev) {
        step /= 2;
        double part = 0;
        for (double t = step; t < 4.0; t += 2 * step) {
            double u = kPi / 2 * std::sinh(t);
            double x = std::tanh(u);
            double w = kPi / 2 * std::cosh(t) / sq(std::cosh(u));
            if (1 - std::abs(x) < 1e-17) break;
            part += w * (f(c + h * x) + f(c - h * x));
        }
        sum += part;
        double cur = sum * step * h;
        if (lev >= 4 && std::abs(cur - prev) <= 1e-13 * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace qclab

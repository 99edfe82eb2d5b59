#pragma once

// Flat tori R^n / Λ*: Dirichlet eigenvalue of a Euclidean ball through the
// first Bessel zero, the resulting covolume bound for lattices with a given
// shortest vector, and the lattice packing density bound.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "designlab/errors.hpp"

namespace designlab::torus {

namespace detail {

/// Ascending series. Accurate when x is small or x²/4 is below the order.
inline double bessel_series(double nu, double x) {
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 500; ++k) {
        term *= q / ((k + 1.0) * (k + 1.0 + nu));
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum) && k > x) break;
    }
    return std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0)) * sum;
}

/// log J_mu(x) for mu >= x²/4 + 1, where the series has no cancellation.
inline double log_bessel_high_order(double mu, double x) {
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 500; ++k) {
        term *= q / ((k + 1.0) * (k + 1.0 + mu));
        sum += term;
        if (std::fabs(term) < 1e-18 * sum) break;
    }
    return mu * std::log(0.5 * x) - std::lgamma(mu + 1.0) + std::log(sum);
}

/// Miller backward recurrence J_{a-1} = (2a/x) J_a - J_{a+1}, normalised at
/// a high order where the series is cancellation-free.
inline double bessel_backward(double nu, double x) {
    const int anchor = static_cast<int>(std::ceil(0.25 * x * x)) + 10;
    const int start = anchor + 30;
    constexpr double big = 1e250;
    const double log_big = 250.0 * std::numbers::ln10;

    double upper = 0.0, cur = 1.0;  // u_{k+1}, u_k
    int scale = 0, anchor_scale = 0;
    double anchor_value = 0.0;
    for (int k = start; k > 0; --k) {
        if (k == anchor) {
            anchor_value = cur;
            anchor_scale = scale;
        }
        const double lower = 2.0 * (nu + k) / x * cur - upper;
        upper = cur;
        cur = lower;
        if (std::fabs(cur) > big) {
            cur /= big;
            upper /= big;
            ++scale;
        }
    }
    if (cur == 0.0) return 0.0;
    const double log_ratio = std::log(std::fabs(cur)) - std::log(std::fabs(anchor_value)) + (scale - anchor_scale) * log_big;
    const double sign = (cur > 0) == (anchor_value > 0) ? 1.0 : -1.0;
    return sign * std::exp(log_bessel_high_order(nu + anchor, x) + log_ratio);
}

}  // namespace detail

/// Bessel function of the first kind J_ν(x) for ν >= -1/2 and x > 0.
inline double bessel_j(double nu, double x) {
    if (nu < -0.5) throw Error(ErrorKind::InvalidArgument, "bessel_j: order must be >= -1/2");
    if (!(x > 0)) throw Error(ErrorKind::InvalidArgument, "bessel_j: argument must be positive");
    if (x <= 8.0 || 0.25 * x * x <= nu + 1.0) return detail::bessel_series(nu, x);
    return detail::bessel_backward(nu, x);
}

/// First positive zero j_{ν,1} of J_ν: scan upward from ν + 1 (below the
/// first zero for every ν >= -1/2) for a sign change, then bisect.
inline double bessel_first_zero(double nu) {
    if (nu < -0.5) throw Error(ErrorKind::InvalidArgument, "bessel_first_zero: order must be >= -1/2");
    double lo = nu + 1.0;
    if (!(bessel_j(nu, lo) > 0)) throw Error(ErrorKind::Convergence, "bessel_first_zero: bad lower bracket");
    const double step = 0.1;
    double hi = lo + step;
    int scans = 0;
    while (bessel_j(nu, hi) > 0) {
        lo = hi;
        hi += step;
        if (++scans > 100000) throw Error(ErrorKind::Convergence, "bessel_first_zero: no sign change found");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = bessel_j(nu, mid);
        if (!std::isfinite(v)) throw Error(ErrorKind::Convergence, "bessel_first_zero: non-finite value");
        (v > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Volume of the unit ball in R^n.
inline double unit_ball_volume(int n) {
    return std::exp(0.5 * n * std::log(std::numbers::pi) - std::lgamma(0.5 * n + 1.0));
}

/// First Dirichlet eigenvalue of a radius-r ball in R^n: (j_{n/2-1,1} / r)².
inline double ball_fundamental_tone(int n, double r) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    if (!(r > 0)) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
    const double j = bessel_first_zero(0.5 * n - 1.0);
    return (j / r) * (j / r);
}

struct TorusBound {
    int dim = 0;
    double shortest = 0.0;   // s, length of the shortest nonzero vector of Λ
    double t = 0.0;          // 4π²s², smallest positive Laplacian eigenvalue on R^n/Λ*
    double rho_star = 0.0;   // optimal λ/t = n/(n+2)
    double r_star = 0.0;     // optimal ball radius
    double covolume_bound = 0.0;        // upper bound on covol(Λ*)
    double covolume_lower_bound = 0.0;  // lower bound on covol(Λ) = 1 / covolume_bound
    double density_bound = 0.0;
    double grid_rho = 0.0;              // grid-search minimiser of λ/t
    double grid_covolume_bound = 0.0;   // grid-search minimum
};

namespace detail {

/// log of [t/(t-λ(r))] v_n r^n.
inline double log_covolume_at_radius(int n, double t, double j, double r) {
    const double lambda = (j / r) * (j / r);
    return std::log(t) - std::log(t - lambda) + std::log(unit_ball_volume(n)) + n * std::log(r);
}

/// Two-level grid over ρ = λ/t in (0, 1), evaluating the bound through the
/// radius r = j / sqrt(ρ t). Returns the minimising ρ and the minimum.
inline std::pair<double, double> grid_minimise(int n, double t, double j) {
    auto value = [&](double rho) { return log_covolume_at_radius(n, t, j, j / std::sqrt(rho * t)); };
    double best_rho = 0.5, best = value(0.5);
    for (int k = 1; k < 1000; ++k) {
        const double rho = k / 1000.0;
        const double v = value(rho);
        if (v < best) {
            best = v;
            best_rho = rho;
        }
    }
    const double lo = std::max(1e-9, best_rho - 1e-3), hi = std::min(1.0 - 1e-9, best_rho + 1e-3);
    const int steps = 20000;
    for (int k = 0; k <= steps; ++k) {
        const double rho = lo + (hi - lo) * k / steps;
        const double v = value(rho);
        if (v < best) {
            best = v;
            best_rho = rho;
        }
    }
    return {best_rho, std::exp(best)};
}

}  // namespace detail

/// Any single point of R^n/Λ* is a design of strength t = 4π²s², so the
/// bound gives covol(Λ*) <= min_r [t / (t - λ(B_r))] |B_r|.
inline TorusBound torus_covolume_bound(int n, double shortest) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    if (!(shortest > 0)) throw Error(ErrorKind::InvalidArgument, "shortest vector length must be positive");
    TorusBound b;
    b.dim = n;
    b.shortest = shortest;
    b.t = 4.0 * std::numbers::pi * std::numbers::pi * shortest * shortest;
    const double j = bessel_first_zero(0.5 * n - 1.0);
    b.rho_star = static_cast<double>(n) / (n + 2.0);
    b.r_star = j / std::sqrt(b.rho_star * b.t);
    b.covolume_bound = unit_ball_volume(n) * std::pow(b.r_star, n) / (1.0 - b.rho_star);
    b.covolume_lower_bound = 1.0 / b.covolume_bound;
    // density = v_n (s/2)^n covol(Λ*)
    b.density_bound = unit_ball_volume(n) * std::pow(0.5 * shortest, n) * b.covolume_bound;
    std::tie(b.grid_rho, b.grid_covolume_bound) = detail::grid_minimise(n, b.t, j);
    return b;
}

/// Upper bound on the packing density of any lattice in R^n:
/// v_n² (j_{n/2-1,1} / 4π)^n ((n+2)/n)^{n/2} (n+2)/2.
inline double lattice_density_bound(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    const double j = bessel_first_zero(0.5 * n - 1.0);
    const double log_value = 2.0 * std::log(unit_ball_volume(n)) + n * std::log(j / (4.0 * std::numbers::pi)) +
                             0.5 * n * std::log((n + 2.0) / n) + std::log((n + 2.0) / 2.0);
    return std::exp(log_value);
}

/// The same density bound from the grid-searched covolume bound at s = 1.
inline double lattice_density_bound_grid(int n) {
    const auto b = torus_covolume_bound(n, 1.0);
    return unit_ball_volume(n) * std::pow(0.5, n) * b.grid_covolume_bound;
}

}  // namespace designlab::torus

#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library's eigensolver or spectral code.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "designlab/matrix.hpp"
#include "designlab/space.hpp"

namespace oracle {

using designlab::Matrix;
using designlab::Vector;

/// Cyclic Jacobi rotations; sorted eigenvalues of a symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
    const std::size_t n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
    std::sort(out.begin(), out.end());
    return out;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Krawtchouk K_j(i) for H(n, q) by the three-term recurrence in j.
inline double krawtchouk(int n, int q, int j, int i) {
    double prev = 1.0;
    if (j == 0) return prev;
    double cur = (q - 1.0) * n - q * static_cast<double>(i);
    for (int k = 1; k < j; ++k) {
        const double next = (((q - 1.0) * (n - k) + k - q * static_cast<double>(i)) * cur - (q - 1.0) * (n - k + 1) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Laplacian eigenvalues of the N-cycle, with multiplicity.
inline std::vector<double> cycle_spectrum(int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
    std::sort(out.begin(), out.end());
    return out;
}

/// Principal submatrix of n_r I - A_r on the given vertices, built from the
/// class table directly.
inline Matrix restricted_laplacian(const designlab::Space& s, const std::vector<designlab::Vertex>& omega) {
    const std::size_t r = s.laplacian_class();
    const double deg = static_cast<double>(s.valency(r));
    Matrix m(omega.size(), omega.size());
    for (std::size_t a = 0; a < omega.size(); ++a)
        for (std::size_t b = 0; b < omega.size(); ++b)
            m(a, b) = a == b ? deg : (s.classify(omega[a], omega[b]) == r ? -1.0 : 0.0);
    return m;
}

inline double min_dirichlet_eigenvalue(const designlab::Space& s, const std::vector<designlab::Vertex>& omega) {
    return jacobi_eigenvalues(restricted_laplacian(s, omega)).front();
}

/// Design test by explicit characters on the cycle: Σ_{x∈D} e^{2πikx/N} = 0
/// for every k with 0 < 2 - 2cos(2πk/N) < t.
inline bool cycle_design(int n, const std::vector<designlab::Vertex>& d, double t, double tol = 1e-9) {
    for (int k = 1; k < n; ++k) {
        const double theta = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
        if (!(theta < t - tol)) continue;
        std::complex<double> sum = 0.0;
        for (auto x : d) sum += std::polar(1.0, 2.0 * std::numbers::pi * k * static_cast<double>(x) / n);
        if (std::abs(sum) > tol * std::sqrt(static_cast<double>(d.size()))) return false;
    }
    return true;
}

/// Design test in H(n, 2) by Walsh characters (-1)^{a·x}, eigenvalue 2|a|.
inline bool binary_hamming_design(int n, const std::vector<designlab::Vertex>& d, double t, double tol = 1e-9) {
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
        const double theta = 2.0 * std::popcount(a);
        if (!(theta < t - tol)) continue;
        long sum = 0;
        for (auto x : d) sum += (std::popcount(a & x) % 2) ? -1 : 1;
        if (sum != 0) return false;
    }
    return true;
}

/// Number of z with class(x,z) = i and class(z,y) = j.
inline std::size_t count_paths(const designlab::Space& s, std::size_t x, std::size_t y, std::size_t i, std::size_t j) {
    std::size_t c = 0;
    for (std::size_t z = 0; z < s.vertex_count(); ++z) c += s.classify(x, z) == i && s.classify(z, y) == j;
    return c;
}

/// Adjacency matrix of class i.
inline Matrix class_matrix(const designlab::Space& s, std::size_t i) {
    const std::size_t n = s.vertex_count();
    Matrix a(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) a(x, y) = s.classify(x, y) == i ? 1.0 : 0.0;
    return a;
}

/// Densest lattice packings from (minimal norm, determinant of the Gram
/// matrix): v_n (sqrt(min norm)/2)^n / sqrt(det). Z, A2, D3, D4, E8, Leech.
struct KnownLattice {
    int dim;
    double min_norm;
    double det;
};
inline constexpr KnownLattice kKnownLattices[] = {{1, 1, 1}, {2, 2, 3}, {3, 2, 4}, {4, 2, 4}, {8, 2, 1}, {24, 4, 1}};

inline double ball_volume(int n) {
    // v_n by the recursion v_n = 2π/n v_{n-2}.
    double v = (n % 2 == 0) ? 1.0 : 2.0;
    for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) v *= 2.0 * std::numbers::pi / k;
    return v;
}

inline double lattice_density(const KnownLattice& l) {
    return ball_volume(l.dim) * std::pow(std::sqrt(l.min_norm) / 2.0, l.dim) / std::sqrt(l.det);
}

}  // namespace oracle

#pragma once

// Spectral data of a space: Laplacian eigenspaces, their projectors (the
// primitive idempotents E_j of the Bose-Mesner algebra for schemes), the
// eigenmatrix p_{ij} and the zonal spherical functions around an origin.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "designlab/eigen_solver.hpp"
#include "designlab/errors.hpp"
#include "designlab/matrix.hpp"
#include "designlab/parallel.hpp"
#include "designlab/space.hpp"
#include "designlab/spectra.hpp"

namespace designlab {

class SpectralData {
public:
    [[nodiscard]] std::size_t origin() const noexcept { return origin_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t eigenspace_count() const noexcept { return eigenvalues_.size(); }

    /// Strictly increasing; eigenvalues()[0] == 0.
    [[nodiscard]] const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
    [[nodiscard]] double eigenvalue(std::size_t j) const { return eigenvalues_.at(j); }
    [[nodiscard]] std::size_t multiplicity(std::size_t j) const { return bases_.at(j).cols(); }
    [[nodiscard]] std::vector<std::size_t> multiplicities() const {
        std::vector<std::size_t> out;
        for (const auto& b : bases_) out.push_back(b.cols());
        return out;
    }

    /// Orthonormal basis of V_j, one vector per column (N x m_j).
    [[nodiscard]] const Matrix& basis(std::size_t j) const { return bases_.at(j); }

    /// E_j = U_j U_jᵀ, materialised on request.
    [[nodiscard]] Matrix projector(std::size_t j) const {
        const Matrix& u = bases_.at(j);
        Matrix e(n_, n_);
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = x; y < n_; ++y) {
                const double v = dot(u.row(x), u.row(y));
                e(x, y) = v;
                e(y, x) = v;
            }
        return e;
    }

    /// U_jᵀ f: coordinates of the V_j-component of f. Its norm is ‖E_j f‖.
    [[nodiscard]] Vector coordinates(std::size_t j, std::span<const double> f) const {
        const Matrix& u = bases_.at(j);
        Vector c(u.cols(), 0.0);
        for (std::size_t x = 0; x < n_; ++x) {
            if (f[x] == 0.0) continue;
            auto row = u.row(x);
            for (std::size_t k = 0; k < c.size(); ++k) c[k] += row[k] * f[x];
        }
        return c;
    }

    [[nodiscard]] double component_norm(std::size_t j, std::span<const double> f) const {
        return norm2(coordinates(j, f));
    }

    /// E_j f.
    [[nodiscard]] Vector apply_projector(std::size_t j, std::span<const double> f) const {
        const Vector c = coordinates(j, f);
        return multiply(bases_.at(j), c);
    }

    /// Eigenvalue of A_i on V_j, indexed (class i, eigenspace j). For graphs
    /// only the rows of class 0 and the Laplacian relation are defined; the
    /// rest hold NaN.
    [[nodiscard]] const Matrix& eigenmatrix() const noexcept { return eigenmatrix_; }

    /// z(j, i) = value of the zonal function φ_j on sphere i around the origin.
    [[nodiscard]] const Matrix& zonal() const noexcept { return zonal_; }

    /// Largest spread of (N/m_j) E_j δ_o within a sphere; ~0 for schemes.
    [[nodiscard]] double zonal_spread() const noexcept { return zonal_spread_; }

    /// The zonal function φ_j as a vertex vector.
    [[nodiscard]] Vector zonal_vector(const Space& s, std::size_t j) const {
        Vector v(n_);
        for (std::size_t x = 0; x < n_; ++x) v[x] = zonal_(j, s.classify(origin_, x));
        return v;
    }

    /// Eigenvalues closer than this were merged into one eigenspace.
    [[nodiscard]] double grouping_tolerance() const noexcept { return group_tol_; }

    /// Number of eigenspaces with θ < t, where θ within the grouping
    /// tolerance of t counts as equal to t.
    [[nodiscard]] std::size_t count_below(double t) const {
        std::size_t j = 0;
        while (j < eigenvalues_.size() && eigenvalues_[j] < t - group_tol_) ++j;
        return j;
    }

private:
    friend SpectralData spectral_decomposition(const Space&, std::size_t, const ExecOptions&);

    std::size_t n_ = 0;
    std::size_t origin_ = 0;
    std::vector<double> eigenvalues_;
    std::vector<Matrix> bases_;
    Matrix eigenmatrix_;
    Matrix zonal_;
    double zonal_spread_ = 0.0;
    double group_tol_ = 0.0;
};

/// Diagonalises Δ densely and groups eigenvalues closer than
/// tol * n_r. A gap between tol * n_r and 10 * tol * n_r is reported as
/// ErrorKind::GroupingAmbiguity. For schemes the Laplacian relation must
/// separate all m + 1 eigenspaces, and the zonal functions must come out
/// sphere-constant.
inline SpectralData spectral_decomposition(const Space& s, std::size_t origin, const ExecOptions& opts = {}) {
    const std::size_t n = s.vertex_count();
    if (origin >= n) throw Error(ErrorKind::InvalidArgument, "origin " + std::to_string(origin) + " out of range");
    const std::size_t r = s.laplacian_class();
    const double scale = std::max<double>(1.0, static_cast<double>(s.valency(r)));
    const double group_tol = opts.tolerance * scale;

    const auto eig = symmetric_eigen(laplacian_matrix(s));

    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            const double gap = eig.values[k] - eig.values[k - 1];
            if (gap <= group_tol) {
                groups.back().second = k + 1;
                continue;
            }
            if (gap <= 10.0 * group_tol)
                throw Error(ErrorKind::GroupingAmbiguity,
                            "eigenvalues " + std::to_string(eig.values[k - 1]) + " and " + std::to_string(eig.values[k]) +
                                " are too close to group reliably");
        }
        groups.emplace_back(k, k + 1);
    }
    if (groups.front().second - groups.front().first != 1 || std::fabs(eig.values.front()) > group_tol)
        throw Error(ErrorKind::NotConnected, "Laplacian kernel is not one-dimensional");
    if (s.is_scheme() && groups.size() != s.class_count() + 1)
        throw Error(ErrorKind::InvalidArgument,
                    "relation " + std::to_string(r) + " has " + std::to_string(groups.size()) +
                        " distinct Laplacian eigenvalues but the scheme has " + std::to_string(s.class_count() + 1) +
                        " eigenspaces; choose a relation that separates them");

    SpectralData out;
    out.group_tol_ = group_tol;
    out.n_ = n;
    out.origin_ = origin;
    const std::size_t count = groups.size();
    out.eigenvalues_.resize(count);
    out.bases_.resize(count);
    const std::size_t classes = s.class_count() + 1;
    out.zonal_ = Matrix(count, classes);
    out.eigenmatrix_ = Matrix(classes, count, std::numeric_limits<double>::quiet_NaN());
    std::vector<double> spread(count, 0.0);

    parallel_for(count, opts.threads, [&](std::size_t j) {
        const auto [b, e] = groups[j];
        double mean = 0.0;
        for (std::size_t k = b; k < e; ++k) mean += eig.values[k];
        out.eigenvalues_[j] = j == 0 ? 0.0 : mean / static_cast<double>(e - b);

        Matrix basis(n, e - b);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t k = b; k < e; ++k) basis(x, k - b) = eig.vectors(x, k);

        // (N / m_j) E_j δ_o, averaged per sphere.
        const double factor = static_cast<double>(n) / static_cast<double>(e - b);
        auto row_o = basis.row(origin);
        std::vector<double> sum(classes, 0.0), lo(classes, std::numeric_limits<double>::infinity()),
            hi(classes, -std::numeric_limits<double>::infinity());
        std::vector<std::size_t> cnt(classes, 0);
        for (std::size_t x = 0; x < n; ++x) {
            const double v = factor * dot(basis.row(x), row_o);
            const auto c = s.classify(origin, x);
            sum[c] += v;
            ++cnt[c];
            lo[c] = std::min(lo[c], v);
            hi[c] = std::max(hi[c], v);
        }
        for (std::size_t i = 0; i < classes; ++i) {
            out.zonal_(j, i) = cnt[i] ? sum[i] / static_cast<double>(cnt[i]) : 0.0;
            if (cnt[i]) spread[j] = std::max(spread[j], hi[i] - lo[i]);
        }
        out.bases_[j] = std::move(basis);
    });

    for (double v : spread) out.zonal_spread_ = std::max(out.zonal_spread_, v);
    if (s.is_scheme() && out.zonal_spread_ > 1e3 * opts.tolerance)
        throw Error(ErrorKind::SchemeAxiom, "zonal functions are not sphere-constant (spread " +
                                                std::to_string(out.zonal_spread_) + "); the classes do not form a scheme");

    for (std::size_t j = 0; j < count; ++j) {
        if (s.is_scheme()) {
            for (std::size_t i = 0; i < classes; ++i)
                out.eigenmatrix_(i, j) = static_cast<double>(s.valency(i)) * out.zonal_(j, i);
        } else {
            out.eigenmatrix_(0, j) = 1.0;
            out.eigenmatrix_(r, j) = static_cast<double>(s.valency(r)) - out.eigenvalues_[j];
        }
    }
    return out;
}

/// Orthogonal projection onto sphere-constant functions around the origin:
/// S f = Σ_i (<A_i δ_o, f> / n_i) A_i δ_o.
inline Vector spherical_projection(const Space& s, const SpectralData& spectral, std::span<const double> f) {
    const std::size_t n = s.vertex_count();
    if (f.size() != n) throw Error(ErrorKind::InvalidArgument, "spherical_projection: length mismatch");
    const std::size_t o = spectral.origin();
    std::vector<double> sum(s.class_count() + 1, 0.0);
    std::vector<std::size_t> cnt(s.class_count() + 1, 0);
    for (std::size_t x = 0; x < n; ++x) {
        sum[s.classify(o, x)] += f[x];
        ++cnt[s.classify(o, x)];
    }
    Vector out(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto c = s.classify(o, x);
        out[x] = sum[c] / static_cast<double>(cnt[c]);
    }
    return out;
}

}  // namespace designlab

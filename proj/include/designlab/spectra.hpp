#pragma once

// Graph Laplacian, Dirichlet form and Dirichlet eigenvalues of vertex subsets.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "designlab/eigen_solver.hpp"
#include "designlab/errors.hpp"
#include "designlab/matrix.hpp"
#include "designlab/space.hpp"

namespace designlab {

/// Δf(x) = deg(x) f(x) - Σ_{y~x} f(y) over the Laplacian relation. On a
/// regular space deg(x) = n_r and Δ = n_r I - A_r.
inline Vector laplacian_apply(const Space& s, std::span<const double> f) {
    if (f.size() != s.vertex_count()) throw Error(ErrorKind::InvalidArgument, "laplacian_apply: length mismatch");
    Vector out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        double acc = static_cast<double>(s.degree(x)) * f[x];
        for (auto y : s.neighbors(x)) acc -= f[y];
        out[x] = acc;
    }
    return out;
}

/// D[f, g] = <f, Δg>.
inline double dirichlet_form(const Space& s, std::span<const double> f, std::span<const double> g) {
    if (f.size() != s.vertex_count()) throw Error(ErrorKind::InvalidArgument, "dirichlet_form: length mismatch");
    return dot(f, laplacian_apply(s, g));
}

/// D[f, f] as ½ Σ_{x~y} (f(x) - f(y))², summing over ordered adjacent pairs.
inline double dirichlet_energy_edges(const Space& s, std::span<const double> f) {
    if (f.size() != s.vertex_count()) throw Error(ErrorKind::InvalidArgument, "dirichlet_energy: length mismatch");
    double acc = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x)
        for (auto y : s.neighbors(x)) {
            const double d = f[x] - f[y];
            acc += d * d;
        }
    return 0.5 * acc;
}

inline Matrix laplacian_matrix(const Space& s) {
    const std::size_t n = s.vertex_count();
    Matrix l(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        l(x, x) = static_cast<double>(s.degree(x));
        for (auto y : s.neighbors(x)) l(x, y) -= 1.0;
    }
    return l;
}

enum class EigenMethod { Dense, Quotient };

inline const char* to_string(EigenMethod m) noexcept { return m == EigenMethod::Dense ? "dense" : "quotient"; }

/// A subset Ω with its Dirichlet eigenvalue λ(Ω) and a nonnegative unit
/// first eigenfunction ψ, zero-extended to the whole space.
struct SubsetEig {
    std::vector<Vertex> omega;                 // sorted
    std::optional<std::vector<std::size_t>> spheres;  // quotient only
    double lambda = 0.0;
    Vector eigenfunction;
    EigenMethod method = EigenMethod::Dense;
    std::optional<Vertex> origin;
};

namespace detail {

/// Flip so the largest-magnitude entry is positive, clamp [-tol, 0) to zero
/// and rescale to unit norm.
inline void sign_normalize(std::span<double> v, double tol) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::fabs(v[i]) > std::fabs(v[arg])) arg = i;
    if (!v.empty() && v[arg] < 0)
        for (double& x : v) x = -x;
    for (double& x : v)
        if (x < 0 && x >= -tol) x = 0.0;
    const double nrm = norm2(v);
    if (nrm > 0)
        for (double& x : v) x /= nrm;
}

/// Connected components of the graph on `items` given by `adjacent`,
/// each sorted, ordered by smallest member.
template <typename Adjacent>
std::vector<std::vector<std::size_t>> components(std::size_t count, Adjacent adjacent) {
    std::vector<int> label(count, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = 0; start < count; ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<std::size_t> q;
        q.push(start);
        label[start] = id;
        while (!q.empty()) {
            const auto a = q.front();
            q.pop();
            out.back().push_back(a);
            for (std::size_t b = 0; b < count; ++b)
                if (label[b] < 0 && adjacent(a, b)) {
                    label[b] = id;
                    q.push(b);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

}  // namespace detail

/// Dirichlet eigenvalue of an arbitrary vertex set from the principal
/// submatrix of Δ. When Ω splits into several components the one with the
/// smallest eigenvalue wins (ties go to the component holding the smallest
/// vertex) and ψ vanishes on the others.
inline SubsetEig subset_eigen(const Space& s, std::span<const Vertex> omega, double tol = 1e-9) {
    if (omega.empty()) throw Error(ErrorKind::InvalidArgument, "subset_eigen: omega is empty");
    std::vector<Vertex> sorted(omega.begin(), omega.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::InvalidArgument, "subset_eigen: omega has duplicate vertices");
    if (sorted.back() >= s.vertex_count()) throw Error(ErrorKind::InvalidArgument, "subset_eigen: vertex out of range");

    const std::size_t k = sorted.size();
    const std::size_t r = s.laplacian_class();
    const auto blocks =
        detail::components(k, [&](std::size_t a, std::size_t b) { return s.classify(sorted[a], sorted[b]) == r; });

    SubsetEig best;
    best.method = EigenMethod::Dense;
    best.omega = sorted;
    bool have = false;
    for (const auto& block : blocks) {
        Matrix sub(block.size(), block.size());
        for (std::size_t a = 0; a < block.size(); ++a) {
            sub(a, a) = static_cast<double>(s.degree(sorted[block[a]]));
            for (std::size_t b = 0; b < block.size(); ++b)
                if (a != b && s.classify(sorted[block[a]], sorted[block[b]]) == r) sub(a, b) = -1.0;
        }
        const auto eig = symmetric_eigen(sub);
        const double lam = std::max(0.0, eig.values.front());  // PSD; drop roundoff
        if (have && !(lam < best.lambda - tol)) continue;
        have = true;
        best.lambda = lam;
        Vector local(block.size());
        for (std::size_t a = 0; a < block.size(); ++a) local[a] = eig.vectors(a, 0);
        detail::sign_normalize(local, tol);
        best.eigenfunction.assign(s.vertex_count(), 0.0);
        for (std::size_t a = 0; a < block.size(); ++a) best.eigenfunction[sorted[block[a]]] = local[a];
    }
    return best;
}

/// Vertices in the union of the given spheres around `origin`, sorted.
inline std::vector<Vertex> sphere_union(const Space& s, std::size_t origin, std::span<const std::size_t> spheres) {
    std::vector<char> in(s.class_count() + 1, 0);
    for (auto i : spheres) {
        if (i > s.class_count()) throw Error(ErrorKind::InvalidArgument, "sphere index " + std::to_string(i) + " out of range");
        in[i] = 1;
    }
    std::vector<Vertex> out;
    for (std::size_t y = 0; y < s.vertex_count(); ++y)
        if (in[s.classify(origin, y)]) out.push_back(static_cast<Vertex>(y));
    return out;
}

/// Spheres 0..radius.
inline std::vector<std::size_t> ball_spheres(std::size_t radius) {
    std::vector<std::size_t> out(radius + 1);
    for (std::size_t i = 0; i <= radius; ++i) out[i] = i;
    return out;
}

/// Dirichlet eigenvalue of a union of spheres around `origin`, computed on
/// sphere-constant functions through the intersection numbers: the reduced
/// matrix n_r δ_ij - p^i_{rj}, symmetrised by diag(√n_i).
inline SubsetEig spherical_subset_eigen(const Space& s, std::size_t origin, std::span<const std::size_t> sphere_set,
                                        double tol = 1e-9) {
    if (!s.intersection_numbers())
        throw Error(ErrorKind::InvalidArgument, "spherical_subset_eigen: space has no intersection numbers");
    if (sphere_set.empty()) throw Error(ErrorKind::InvalidArgument, "spherical_subset_eigen: empty sphere set");
    if (origin >= s.vertex_count()) throw Error(ErrorKind::InvalidArgument, "origin out of range");
    const auto& p = *s.intersection_numbers();
    const std::size_t r = s.laplacian_class();
    const double nr = static_cast<double>(s.valency(r));

    std::vector<std::size_t> classes(sphere_set.begin(), sphere_set.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (auto i : classes)
        if (i > s.class_count()) throw Error(ErrorKind::InvalidArgument, "sphere index " + std::to_string(i) + " out of range");

    const std::size_t k = classes.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const auto i = classes[a], j = classes[b];
            if (s.valency(i) * p(i, r, j) != s.valency(j) * p(j, r, i))
                throw Error(ErrorKind::SchemeAxiom, "n_i p^i_{rj} != n_j p^j_{ri} for i=" + std::to_string(i) +
                                                        ", j=" + std::to_string(j));
        }

    const auto blocks =
        detail::components(k, [&](std::size_t a, std::size_t b) { return p(classes[a], r, classes[b]) > 0; });

    SubsetEig best;
    best.method = EigenMethod::Quotient;
    best.origin = static_cast<Vertex>(origin);
    best.spheres = classes;
    best.omega = sphere_union(s, origin, classes);
    bool have = false;
    for (const auto& block : blocks) {
        Matrix reduced(block.size(), block.size());
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = 0; b < block.size(); ++b) {
                const auto i = classes[block[a]], j = classes[block[b]];
                const double pij = static_cast<double>(p(i, r, j));
                const double ni = static_cast<double>(s.valency(i)), nj = static_cast<double>(s.valency(j));
                reduced(a, b) = (a == b ? nr : 0.0) - pij * std::sqrt(ni / nj);
            }
        const auto eig = symmetric_eigen(reduced);
        const double lam = std::max(0.0, eig.values.front());  // PSD; drop roundoff
        if (have && !(lam < best.lambda - tol)) continue;
        have = true;
        best.lambda = lam;
        std::vector<double> level(s.class_count() + 1, 0.0);
        for (std::size_t a = 0; a < block.size(); ++a) {
            const auto i = classes[block[a]];
            level[i] = eig.vectors(a, 0) / std::sqrt(static_cast<double>(s.valency(i)));
        }
        best.eigenfunction.assign(s.vertex_count(), 0.0);
        for (std::size_t y = 0; y < s.vertex_count(); ++y) best.eigenfunction[y] = level[s.classify(origin, y)];
        detail::sign_normalize(best.eigenfunction, tol);
    }
    return best;
}

}  // namespace designlab

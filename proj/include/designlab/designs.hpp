#pragma once

// Designs of strength t, the spectral lower bound
//
//     |D| >= (t - λ(Ω)) / t * V(M) / V(Ω),
//
// and the function F = Σ_i w_i ψ∘τ_i whose support certifies that translated
// copies of Ω around the design points almost cover the space.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "designlab/errors.hpp"
#include "designlab/matrix.hpp"
#include "designlab/parallel.hpp"
#include "designlab/space.hpp"
#include "designlab/spectra.hpp"
#include "designlab/spectral.hpp"

namespace designlab {

/// Weighted set of distinct vertices.
class Design {
public:
    Design() = default;
    Design(std::vector<Vertex> points, std::size_t vertex_count) : Design(points, std::vector<std::uint32_t>(points.size(), 1), vertex_count) {}
    Design(std::vector<Vertex> points, std::vector<std::uint32_t> weights, std::size_t vertex_count)
        : points_(std::move(points)), weights_(std::move(weights)) {
        if (points_.empty()) throw Error(ErrorKind::InvalidArgument, "design is empty");
        if (weights_.size() != points_.size()) throw Error(ErrorKind::InvalidArgument, "design weights/points length mismatch");
        std::vector<Vertex> sorted = points_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorKind::InvalidArgument, "design has a repeated point; use weights instead");
        if (sorted.back() >= vertex_count)
            throw Error(ErrorKind::InvalidArgument, "design point " + std::to_string(sorted.back()) + " out of range");
        for (auto w : weights_)
            if (w < 1) throw Error(ErrorKind::InvalidArgument, "design weights must be >= 1");
    }

    [[nodiscard]] const std::vector<Vertex>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] std::uint64_t total_weight() const noexcept {
        std::uint64_t s = 0;
        for (auto w : weights_) s += w;
        return s;
    }

    /// Weighted indicator w_D.
    [[nodiscard]] Vector indicator(std::size_t vertex_count) const {
        Vector w(vertex_count, 0.0);
        for (std::size_t i = 0; i < points_.size(); ++i) w[points_[i]] = weights_[i];
        return w;
    }

private:
    std::vector<Vertex> points_;
    std::vector<std::uint32_t> weights_;
};

// ---------------------------------------------------------------------------
// Strength

struct EigenspaceResidual {
    double theta;
    double residual;  // ‖E_j w_D‖₂
};

struct DesignCheck {
    bool is_design = true;
    std::vector<EigenspaceResidual> checked;  // eigenspaces with 0 < θ < t
};

struct StrengthReport {
    /// Smallest θ_j > 0 with a nonvanishing residual; +inf when every residual vanishes.
    double strength = std::numeric_limits<double>::infinity();
    std::vector<EigenspaceResidual> per_eigenspace;  // all θ_j > 0
};

namespace detail {
inline double residual_threshold(const Vector& w, double tol) { return tol * norm2(w); }
}  // namespace detail

/// True iff ‖E_j w_D‖ <= tol ‖w_D‖ for every eigenspace with 0 < θ_j < t.
inline DesignCheck verify_design(const Space& s, const SpectralData& spectral, const Design& d, double t,
                                 double tol = 1e-9) {
    if (!(t > 0)) throw Error(ErrorKind::InvalidArgument, "strength t must be positive");
    const Vector w = d.indicator(s.vertex_count());
    const double threshold = detail::residual_threshold(w, tol);
    DesignCheck out;
    for (std::size_t j = 1; j < spectral.count_below(t); ++j) {
        const double res = spectral.component_norm(j, w);
        out.checked.push_back({spectral.eigenvalue(j), res});
        if (res > threshold) out.is_design = false;
    }
    return out;
}

inline StrengthReport design_strength(const Space& s, const SpectralData& spectral, const Design& d,
                                      double tol = 1e-9) {
    const Vector w = d.indicator(s.vertex_count());
    const double threshold = detail::residual_threshold(w, tol);
    StrengthReport out;
    for (std::size_t j = 1; j < spectral.eigenspace_count(); ++j) {
        const double res = spectral.component_norm(j, w);
        out.per_eigenspace.push_back({spectral.eigenvalue(j), res});
        if (res > threshold && std::isinf(out.strength)) out.strength = spectral.eigenvalue(j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Subsets Ω

struct BallOmega {
    std::size_t radius;
};
struct SpheresOmega {
    std::vector<std::size_t> spheres;
};
struct SetOmega {
    std::vector<Vertex> vertices;
};
using OmegaSpec = std::variant<BallOmega, SpheresOmega, SetOmega>;

inline std::string describe(const OmegaSpec& omega) {
    if (const auto* b = std::get_if<BallOmega>(&omega)) return "ball:" + std::to_string(b->radius);
    if (const auto* sp = std::get_if<SpheresOmega>(&omega)) {
        std::string out = "spheres:";
        for (std::size_t i = 0; i < sp->spheres.size(); ++i) out += (i ? "," : "") + std::to_string(sp->spheres[i]);
        return out;
    }
    return "set:" + std::to_string(std::get<SetOmega>(omega).vertices.size()) + " vertices";
}

/// Graph-distance ball around `origin` in the Laplacian relation.
inline std::vector<Vertex> graph_ball(const Space& s, std::size_t origin, std::size_t radius) {
    std::vector<std::size_t> dist(s.vertex_count(), std::numeric_limits<std::size_t>::max());
    std::queue<std::size_t> q;
    dist[origin] = 0;
    q.push(origin);
    while (!q.empty()) {
        const auto x = q.front();
        q.pop();
        if (dist[x] == radius) continue;
        for (auto y : s.neighbors(x))
            if (dist[y] == std::numeric_limits<std::size_t>::max()) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    std::vector<Vertex> out;
    for (std::size_t x = 0; x < s.vertex_count(); ++x)
        if (dist[x] <= radius) out.push_back(static_cast<Vertex>(x));
    return out;
}

/// Largest useful ball radius around the origin.
inline std::size_t max_radius(const Space& s, std::size_t origin) {
    if (s.is_scheme()) return s.class_count();
    std::size_t r = 0;
    while (graph_ball(s, origin, r).size() < s.vertex_count()) ++r;
    return r;
}

/// λ(Ω) by the quotient route for spherical Ω in schemes and densely
/// otherwise. Graph-kind spaces get a warning: the symmetry hypotheses behind
/// the bound are not checked there.
inline SubsetEig omega_eigen(const Space& s, std::size_t origin, const OmegaSpec& omega, double tol,
                             std::vector<std::string>* warnings = nullptr) {
    if (!s.is_scheme() && warnings)
        warnings->push_back("graph space: symmetry hypotheses unverified, using dense eigenvalue");
    if (const auto* set = std::get_if<SetOmega>(&omega)) {
        if (s.is_scheme() && warnings)
            warnings->push_back("non-spherical omega: the bound is not guaranteed; certify it with the cover check");
        return subset_eigen(s, set->vertices, tol);
    }
    if (!s.is_scheme()) {
        if (const auto* b = std::get_if<BallOmega>(&omega)) return subset_eigen(s, graph_ball(s, origin, b->radius), tol);
        return subset_eigen(s, sphere_union(s, origin, std::get<SpheresOmega>(omega).spheres), tol);
    }
    if (const auto* b = std::get_if<BallOmega>(&omega)) {
        if (b->radius > s.class_count())
            throw Error(ErrorKind::InvalidArgument, "ball radius " + std::to_string(b->radius) + " exceeds class count");
        return spherical_subset_eigen(s, origin, ball_spheres(b->radius), tol);
    }
    return spherical_subset_eigen(s, origin, std::get<SpheresOmega>(omega).spheres, tol);
}

// ---------------------------------------------------------------------------
// The bound

struct BoundReport {
    double t = 0.0;
    std::string omega;
    std::optional<std::size_t> radius;
    double lambda = 0.0;
    std::size_t volume_omega = 0;
    std::size_t volume_space = 0;
    double bound = 0.0;
    bool vacuous = false;
    EigenMethod method = EigenMethod::Dense;
    std::vector<std::string> warnings;
};

inline BoundReport bound_from_eigen(double t, const SubsetEig& eig, std::size_t volume_space) {
    BoundReport rep;
    rep.t = t;
    rep.lambda = eig.lambda;
    rep.volume_omega = eig.omega.size();
    rep.volume_space = volume_space;
    rep.method = eig.method;
    rep.vacuous = !(eig.lambda < t);
    rep.bound = rep.vacuous ? 0.0
                            : (t - eig.lambda) / t * static_cast<double>(volume_space) /
                                  static_cast<double>(rep.volume_omega);
    return rep;
}

inline BoundReport design_bound(const Space& s, double t, const OmegaSpec& omega, std::size_t origin = 0,
                                const ExecOptions& opts = {}) {
    if (!(t > 0)) throw Error(ErrorKind::InvalidArgument, "strength t must be positive");
    std::vector<std::string> warnings;
    const auto eig = omega_eigen(s, origin, omega, opts.tolerance, &warnings);
    auto rep = bound_from_eigen(t, eig, s.vertex_count());
    rep.omega = describe(omega);
    if (const auto* b = std::get_if<BallOmega>(&omega)) rep.radius = b->radius;
    rep.warnings = std::move(warnings);
    return rep;
}

struct AutoBoundReport {
    std::vector<BoundReport> per_radius;  // radius 0..max
    std::optional<std::size_t> best;      // index into per_radius
};

/// Sweeps balls of radius 0..max around the origin. The best report
/// maximises the bound; ties go to the smaller radius.
inline AutoBoundReport design_bound_auto(const Space& s, double t, std::size_t origin = 0,
                                         const ExecOptions& opts = {}) {
    if (!(t > 0)) throw Error(ErrorKind::InvalidArgument, "strength t must be positive");
    const std::size_t rmax = max_radius(s, origin);
    AutoBoundReport out;
    out.per_radius.resize(rmax + 1);
    parallel_for(rmax + 1, opts.threads, [&](std::size_t radius) {
        out.per_radius[radius] = design_bound(s, t, BallOmega{radius}, origin, ExecOptions{opts.tolerance, 1});
    });
    for (std::size_t i = 0; i < out.per_radius.size(); ++i) {
        const auto& rep = out.per_radius[i];
        if (rep.vacuous) continue;
        if (!out.best || rep.bound > out.per_radius[*out.best].bound) out.best = i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isometries taking each design point to the origin

struct IsometryAction {
    std::vector<std::vector<Vertex>> permutations;  // τ_i as vertex images
    bool validated = false;
};

/// Checks that each τ_i is a bijection preserving every class and that
/// τ_i(y_i) = origin. All pairs are checked for N <= 1024, otherwise a fixed
/// pseudo-random sample of 10^5 pairs.
inline IsometryAction validate_action(const Space& s, const Design& d, std::size_t origin,
                                      std::vector<std::vector<Vertex>> perms) {
    const std::size_t n = s.vertex_count();
    if (perms.size() != d.size())
        throw Error(ErrorKind::NoAction, "expected " + std::to_string(d.size()) + " permutations, got " +
                                             std::to_string(perms.size()));
    for (std::size_t i = 0; i < perms.size(); ++i) {
        const auto& p = perms[i];
        if (p.size() != n) throw Error(ErrorKind::NoAction, "permutation " + std::to_string(i) + " has wrong length");
        std::vector<char> hit(n, 0);
        for (auto v : p) {
            if (v >= n || hit[v]) throw Error(ErrorKind::NoAction, "permutation " + std::to_string(i) + " is not a bijection");
            hit[v] = 1;
        }
        if (p[d.points()[i]] != origin)
            throw Error(ErrorKind::NoAction, "permutation " + std::to_string(i) + " does not take design point " +
                                                 std::to_string(d.points()[i]) + " to the origin");
        const auto fail = [&](std::size_t x, std::size_t y) {
            throw Error(ErrorKind::NoAction, "permutation " + std::to_string(i) + " does not preserve the class of (" +
                                                 std::to_string(x) + "," + std::to_string(y) + ")");
        };
        if (n <= 1024) {
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = x + 1; y < n; ++y)
                    if (s.classify(p[x], p[y]) != s.classify(x, y)) fail(x, y);
        } else {
            std::mt19937_64 rng(0x5eedULL + i);
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            for (int k = 0; k < 100000; ++k) {
                const auto x = pick(rng), y = pick(rng);
                if (s.classify(p[x], p[y]) != s.classify(x, y)) fail(x, y);
            }
        }
    }
    return {std::move(perms), true};
}

/// Canonical isometries for the built-in families: digit-wise group
/// translation for Hamming, rotation for cycles, and for Johnson the point
/// permutation swapping y \ o and o \ y in increasing order.
inline IsometryAction translations_to_origin(const Space& s, const Design& d, std::size_t origin) {
    const std::size_t n = s.vertex_count();
    std::vector<std::vector<Vertex>> perms;
    const auto& fam = s.family();
    for (auto y : d.points()) {
        std::vector<Vertex> p(n);
        if (const auto* h = std::get_if<HammingFamily>(&fam)) {
            const auto q = static_cast<std::size_t>(h->q);
            for (std::size_t x = 0; x < n; ++x) {
                std::size_t a = x, b = y, o = origin, img = 0, place = 1;
                for (int i = 0; i < h->n; ++i) {
                    img += ((a % q + q - b % q + o % q) % q) * place;
                    a /= q;
                    b /= q;
                    o /= q;
                    place *= q;
                }
                p[x] = static_cast<Vertex>(img);
            }
        } else if (std::holds_alternative<CycleFamily>(fam)) {
            for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<Vertex>((x + n - y + origin) % n);
        } else if (const auto* j = std::get_if<JohnsonFamily>(&fam)) {
            const auto& sets = j->subsets;
            const std::uint64_t ys = sets[y], os = sets[origin];
            std::vector<int> from, to;
            for (int e = 0; e < j->n; ++e) {
                if ((ys >> e & 1) && !(os >> e & 1)) from.push_back(e);
                if ((os >> e & 1) && !(ys >> e & 1)) to.push_back(e);
            }
            std::vector<int> pi(static_cast<std::size_t>(j->n));
            for (int e = 0; e < j->n; ++e) pi[static_cast<std::size_t>(e)] = e;
            for (std::size_t k = 0; k < from.size(); ++k) {
                pi[static_cast<std::size_t>(from[k])] = to[k];
                pi[static_cast<std::size_t>(to[k])] = from[k];
            }
            for (std::size_t x = 0; x < n; ++x) {
                std::uint64_t img = 0;
                for (int e = 0; e < j->n; ++e)
                    if (sets[x] >> e & 1) img |= std::uint64_t{1} << pi[static_cast<std::size_t>(e)];
                p[x] = static_cast<Vertex>(std::lower_bound(sets.begin(), sets.end(), img) - sets.begin());
            }
        } else {
            throw Error(ErrorKind::NoAction,
                        "no built-in isometry action for this space; supply permutations with --isometries");
        }
        perms.push_back(std::move(p));
    }
    return validate_action(s, d, origin, std::move(perms));
}

/// F(x) = Σ_i w_i ψ(τ_i x).
inline Vector build_F(const Space& s, const SubsetEig& eig, const IsometryAction& action,
                      std::span<const std::uint32_t> weights) {
    const std::size_t n = s.vertex_count();
    if (eig.eigenfunction.size() != n) throw Error(ErrorKind::InvalidArgument, "build_F: eigenfunction length mismatch");
    if (weights.size() != action.permutations.size())
        throw Error(ErrorKind::InvalidArgument, "build_F: weights/permutations length mismatch");
    Vector f(n, 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto& tau = action.permutations[i];
        if (tau.size() != n) throw Error(ErrorKind::InvalidArgument, "build_F: permutation length mismatch");
        for (std::size_t x = 0; x < n; ++x) f[x] += weights[i] * eig.eigenfunction[tau[x]];
    }
    return f;
}

// ---------------------------------------------------------------------------
// Covering chain

struct CoverReport {
    double t = 0.0;
    double lambda = 0.0;
    Vector F;
    /// |D| V(Ω) >= V(∪ Ω_i) >= V(supp F) >= (t - λ)/t V(M)
    std::array<double, 4> chain{};
    double dirichlet_lhs = 0.0;  // D[F, F]
    double dirichlet_rhs = 0.0;  // λ <F, F>
    double max_design_residual = 0.0;
    double rayleigh_lhs = 0.0;  // D[F, F]
    double rayleigh_rhs = 0.0;  // t (<F, F> - <F, 1>² / V(M))
    double cs_lhs = 0.0;        // <F, F> V(supp F)
    double cs_rhs = 0.0;        // <F, 1>²
    bool chain_ok = false;
    bool dirichlet_ok = false;
    bool design_like_ok = false;
    bool rayleigh_ok = false;
    bool cauchy_schwarz_ok = false;

    [[nodiscard]] bool ok() const noexcept {
        return chain_ok && dirichlet_ok && design_like_ok && rayleigh_ok && cauchy_schwarz_ok;
    }
};

/// Builds F for the design and Ω and evaluates every step of the covering
/// argument explicitly. Requires a design of strength t and λ(Ω) < t.
inline CoverReport verify_cover_chain(const Space& s, const SpectralData& spectral, const Design& d, double t,
                                      const OmegaSpec& omega, const std::optional<IsometryAction>& supplied = {},
                                      const ExecOptions& opts = {}) {
    const double tol = opts.tolerance;
    const std::size_t n = s.vertex_count();
    const std::size_t origin = spectral.origin();
    if (!verify_design(s, spectral, d, t, tol).is_design)
        throw Error(ErrorKind::NotADesign, "the design does not have strength t = " + std::to_string(t));
    const auto eig = omega_eigen(s, origin, omega, tol);
    if (!(eig.lambda < t))
        throw Error(ErrorKind::Vacuous, "lambda(Omega) = " + std::to_string(eig.lambda) + " >= t = " + std::to_string(t));
    const IsometryAction action = supplied ? validate_action(s, d, origin, supplied->permutations)
                                           : translations_to_origin(s, d, origin);

    CoverReport rep;
    rep.t = t;
    rep.lambda = eig.lambda;
    rep.F = build_F(s, eig, action, d.weights());
    const Vector& F = rep.F;

    std::vector<char> in_omega(n, 0);
    for (auto v : eig.omega) in_omega[v] = 1;
    std::size_t covered = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (const auto& tau : action.permutations)
            if (in_omega[tau[x]]) {
                ++covered;
                break;
            }
    const double cutoff = tol * max_abs(F);
    std::size_t support = 0;
    for (double v : F) support += std::fabs(v) > cutoff;

    rep.chain = {static_cast<double>(d.size() * eig.omega.size()), static_cast<double>(covered),
                 static_cast<double>(support), (t - eig.lambda) / t * static_cast<double>(n)};

    const double ff = dot(F, F);
    double f1 = 0.0;
    for (double v : F) f1 += v;
    rep.dirichlet_lhs = dirichlet_form(s, F, F);
    rep.dirichlet_rhs = eig.lambda * ff;
    rep.rayleigh_lhs = rep.dirichlet_lhs;
    rep.rayleigh_rhs = t * (ff - f1 * f1 / static_cast<double>(n));
    rep.cs_lhs = ff * static_cast<double>(support);
    rep.cs_rhs = f1 * f1;

    const double fnorm = std::sqrt(ff);
    for (std::size_t j = 1; j < spectral.count_below(t); ++j)
        for (double c : spectral.coordinates(j, F))
            rep.max_design_residual = std::max(rep.max_design_residual, std::fabs(c) / fnorm);

    const double slack = tol * std::max(1.0, static_cast<double>(n));
    rep.chain_ok = rep.chain[0] >= rep.chain[1] && rep.chain[1] >= rep.chain[2] && rep.chain[2] >= rep.chain[3] - slack;
    rep.dirichlet_ok = rep.dirichlet_lhs <= rep.dirichlet_rhs + tol * ff;
    rep.design_like_ok = rep.max_design_residual <= tol;
    rep.rayleigh_ok = rep.rayleigh_lhs >= rep.rayleigh_rhs - tol * std::max(1.0, t * ff);
    rep.cauchy_schwarz_ok = rep.cs_lhs >= rep.cs_rhs - tol * std::max(1.0, rep.cs_rhs);
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive minimum design

struct SearchResult {
    std::optional<std::vector<Vertex>> witness;  // lexicographically first minimum design
    std::size_t max_size = 0;
};

inline constexpr std::size_t kSearchMaxVertices = 32;
inline constexpr std::size_t kSearchMaxSize = 8;

/// Smallest unweighted design of strength t with at most max_size points.
inline SearchResult min_design_search(const Space& s, const SpectralData& spectral, double t, std::size_t max_size,
                                      const ExecOptions& opts = {}) {
    const std::size_t n = s.vertex_count();
    if (!(t > 0)) throw Error(ErrorKind::InvalidArgument, "strength t must be positive");
    if (n > kSearchMaxVertices || max_size > kSearchMaxSize)
        throw Error(ErrorKind::SizeCap, "exhaustive search is limited to N <= 32 and max size <= 8");
    SearchResult out;
    out.max_size = max_size;
    if (max_size == 0) return out;

    // Concatenated coordinates of δ_x in every active eigenspace.
    std::vector<std::size_t> active;
    for (std::size_t j = 1; j < spectral.count_below(t); ++j) active.push_back(j);
    std::size_t dim = 0;
    for (auto j : active) dim += spectral.multiplicity(j);
    if (dim == 0) {
        out.witness = std::vector<Vertex>{0};
        return out;
    }
    Matrix coords(n, dim);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t c = 0;
        for (auto j : active)
            for (double v : spectral.basis(j).row(x)) coords(x, c++) = v;
    }

    for (std::size_t k = 1; k <= max_size && k <= n; ++k) {
        const double threshold = opts.tolerance * std::sqrt(static_cast<double>(k));
        std::vector<std::optional<std::vector<Vertex>>> found(n - k + 1);
        parallel_for(n - k + 1, opts.threads, [&](std::size_t first) {
            std::vector<Vertex> chosen{static_cast<Vertex>(first)};
            std::vector<Vector> partial(k, Vector(dim, 0.0));
            for (std::size_t c = 0; c < dim; ++c) partial[0][c] = coords(first, c);
            // Depth-first over increasing vertex lists; returns true on success.
            auto search = [&](auto&& self, std::size_t next) -> bool {
                const std::size_t depth = chosen.size();
                if (depth == k) return norm2(partial[depth - 1]) <= threshold;
                for (std::size_t v = next; v + (k - depth) <= n; ++v) {
                    for (std::size_t c = 0; c < dim; ++c) partial[depth][c] = partial[depth - 1][c] + coords(v, c);
                    chosen.push_back(static_cast<Vertex>(v));
                    if (self(self, v + 1)) return true;
                    chosen.pop_back();
                }
                return false;
            };
            if (search(search, first + 1)) found[first] = chosen;
        });
        for (auto& f : found)
            if (f) {
                out.witness = std::move(f);
                return out;
            }
    }
    return out;
}

}  // namespace designlab

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "designlab/design_io.hpp"
#include "designlab/designs.hpp"
#include "designlab/space_io.hpp"
#include "oracles.hpp"
#include "theorem_check.hpp"

using namespace designlab;

namespace {

constexpr double kTol = 1e-9;

std::string data(const char* name) { return std::string(DESIGNLAB_TEST_DATA) + "/" + name; }

Design even_weight_code() { return Design({0, 3, 5, 6}, 8); }

std::vector<Vertex> all_vertices(std::size_t n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(DesignType, Validation) {
    EXPECT_EQ(kind_of([] { Design({}, 4); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Design({1, 1}, 4); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Design({4}, 4); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Design({1}, {0}, 4); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Design({1, 2}, {1}, 4); }), ErrorKind::InvalidArgument);
    const Design d({2, 0}, {3, 1}, 4);
    EXPECT_EQ(d.total_weight(), 4u);
    EXPECT_EQ(d.indicator(4), (Vector{1, 0, 3, 0}));
}

TEST(DesignIO, Files) {
    std::istringstream in("# comment\n3 2\n\n1\n");
    const auto d = read_design(in, 4);
    EXPECT_EQ(d.points(), (std::vector<Vertex>{3, 1}));
    EXPECT_EQ(d.weights(), (std::vector<std::uint32_t>{2, 1}));
    std::istringstream bad1("3 0\n"), bad2("7\n"), bad3("1 2 3\n"), bad4("x\n");
    EXPECT_EQ(kind_of([&] { read_design(bad1, 4); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { read_design(bad2, 4); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { read_design(bad3, 4); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { read_design(bad4, 4); }), ErrorKind::Parse);
    EXPECT_EQ(load_design(data("fano.txt"), 35).size(), 7u);
    EXPECT_EQ(load_design(data("hamming844.txt"), 256).size(), 16u);
    EXPECT_EQ(kind_of([] { load_design("/nonexistent", 4); }), ErrorKind::Parse);

    std::istringstream perms("perm 3\n1\n2\n0\nperm 3\n0\n1\n2\n");
    const auto act = read_isometries(perms, 3);
    ASSERT_EQ(act.permutations.size(), 2u);
    EXPECT_EQ(act.permutations[0], (std::vector<Vertex>{1, 2, 0}));
    std::istringstream short_block("perm 3\n1\n2\n"), no_header("1\n"), wrong_n("perm 4\n");
    EXPECT_EQ(kind_of([&] { read_isometries(short_block, 3); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { read_isometries(no_header, 3); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { read_isometries(wrong_n, 3); }), ErrorKind::Parse);
}

TEST(VerifyDesign, Examples) {
    const auto h = hamming_space(3, 2);
    const auto sd = spectral_decomposition(h, 0);
    EXPECT_TRUE(verify_design(h, sd, Design(all_vertices(8), 8), 100.0).is_design);
    EXPECT_TRUE(verify_design(h, sd, even_weight_code(), 6.0).is_design);
    EXPECT_FALSE(verify_design(h, sd, even_weight_code(), 6.5).is_design);
    const auto c = cycle_space(4);
    const auto sc = spectral_decomposition(c, 0);
    EXPECT_TRUE(verify_design(c, sc, Design({0}, 4), 2.0).is_design);
    EXPECT_TRUE(verify_design(c, sc, Design({0, 2}, 4), 4.0).is_design);
    EXPECT_THROW(verify_design(c, sc, Design({0}, 4), 0.0), Error);
}

TEST(VerifyDesign, QuadraticFormEquivalence) {
    const auto h = hamming_space(4, 2);
    const auto sd = spectral_decomposition(h, 0);
    const Design d({0, 3, 5, 6, 9, 15}, {1, 2, 1, 1, 3, 1}, 16);
    const auto w = d.indicator(16);
    const auto rep = design_strength(h, sd, d);
    for (std::size_t j = 1; j < sd.eigenspace_count(); ++j) {
        const auto e = sd.projector(j);
        const double quad = dot(w, multiply(e, w));
        EXPECT_NEAR(rep.per_eigenspace[j - 1].residual * rep.per_eigenspace[j - 1].residual, quad, 1e-10);
    }
}

TEST(DesignStrength, Examples) {
    const auto c = cycle_space(4);
    const auto sc = spectral_decomposition(c, 0);
    EXPECT_NEAR(design_strength(c, sc, Design({0, 2}, 4)).strength, 4.0, 1e-12);
    const auto h = hamming_space(3, 2);
    const auto sh = spectral_decomposition(h, 0);
    EXPECT_NEAR(design_strength(h, sh, even_weight_code()).strength, 6.0, 1e-12);
    EXPECT_TRUE(std::isinf(design_strength(h, sh, Design(all_vertices(8), 8)).strength));
    for (const auto& s : {h, johnson_space(7, 3), cycle_space(9)}) {
        const auto sd = spectral_decomposition(s, 0);
        EXPECT_NEAR(design_strength(s, sd, Design({0}, s.vertex_count())).strength, sd.eigenvalue(1), 1e-12);
    }
}

TEST(DesignStrength, FanoAndExtendedHamming) {
    const auto j = johnson_space(7, 3);
    EXPECT_NEAR(design_strength(j, spectral_decomposition(j, 0), load_design(data("fano.txt"), 35)).strength, 15.0, 1e-9);
    const auto h = hamming_space(8, 2);
    EXPECT_NEAR(design_strength(h, spectral_decomposition(h, 0), load_design(data("hamming844.txt"), 256)).strength, 8.0,
                1e-9);
}

// strength t* => design for every t <= t*, not for t > t*.
TEST(DesignStrength, ConsistentWithVerify) {
    std::mt19937_64 rng(9);
    for (const auto& s : {hamming_space(4, 2), cycle_space(12), johnson_space(6, 3)}) {
        const auto sd = spectral_decomposition(s, 0);
        const auto ts = oracle::gap_values(sd);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Vertex> pts;
            for (std::size_t x = 0; x < s.vertex_count(); ++x)
                if (rng() % 2) pts.push_back(static_cast<Vertex>(x));
            if (pts.empty()) continue;
            const Design d(pts, s.vertex_count());
            const double star = design_strength(s, sd, d).strength;
            for (double t : ts) EXPECT_EQ(verify_design(s, sd, d, t).is_design, t <= star + 1e-9) << "t=" << t;
        }
    }
}

TEST(DesignBound, Examples) {
    const auto c = cycle_space(4);
    const auto a = design_bound(c, 4.0, BallOmega{0});
    EXPECT_NEAR(a.bound, 2.0, 1e-12);
    EXPECT_FALSE(a.vacuous);
    EXPECT_EQ(a.omega, "ball:0");
    const auto b = design_bound(hamming_space(3, 2), 6.0, BallOmega{0});
    EXPECT_NEAR(b.bound, 4.0, 1e-12);
    EXPECT_EQ(b.method, EigenMethod::Quotient);
    const auto j = design_bound(johnson_space(7, 3), 15.0, BallOmega{0});
    EXPECT_NEAR(j.lambda, 12.0, 1e-12);
    EXPECT_NEAR(j.bound, 7.0, 1e-12);
    const auto v = design_bound(c, 1.0, BallOmega{0});
    EXPECT_TRUE(v.vacuous);
    EXPECT_EQ(v.bound, 0.0);
    EXPECT_THROW(design_bound(c, 0.0, BallOmega{0}), Error);
    EXPECT_THROW(design_bound(c, 1.0, BallOmega{3}), Error);
}

TEST(DesignBound, NeverExceedsVolume) {
    for (const auto& s : {hamming_space(5, 2), johnson_space(7, 3), cycle_space(10)}) {
        const auto sd = spectral_decomposition(s, 0);
        for (double t : oracle::gap_values(sd))
            for (std::size_t r = 0; r <= s.class_count(); ++r) {
                const auto rep = design_bound(s, t, BallOmega{r});
                EXPECT_LE(rep.bound, static_cast<double>(s.vertex_count()) + kTol);
                if (!rep.vacuous)
                    EXPECT_NEAR(rep.bound, (t - rep.lambda) / t * s.vertex_count() / rep.volume_omega, 1e-12);
            }
    }
}

TEST(DesignBound, SetAndSpheres) {
    const auto h = hamming_space(3, 2);
    std::vector<std::string> warnings;
    const auto set = design_bound(h, 6.0, SetOmega{{0, 1, 2, 4}});
    const auto sph = design_bound(h, 6.0, SpheresOmega{{0, 1}});
    EXPECT_NEAR(set.lambda, sph.lambda, 1e-12);
    EXPECT_EQ(set.method, EigenMethod::Dense);
    ASSERT_EQ(set.warnings.size(), 1u);
    EXPECT_NE(set.warnings[0].find("non-spherical"), std::string::npos);
    EXPECT_TRUE(sph.warnings.empty());
}

TEST(DesignBound, GraphWarning) {
    std::istringstream in("graph 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\n");
    const auto g = read_space(in);
    const auto rep = design_bound(g, 4.0, BallOmega{0});
    EXPECT_NEAR(rep.bound, 2.0, 1e-12);
    ASSERT_FALSE(rep.warnings.empty());
    EXPECT_NE(rep.warnings[0].find("graph space"), std::string::npos);
    const auto ball = design_bound(g, 4.0, BallOmega{1});
    EXPECT_EQ(ball.volume_omega, 3u);
    EXPECT_NEAR(ball.lambda, 2 - std::sqrt(2.0), 1e-12);
}

TEST(DesignBound, AutoSweep) {
    const auto h = hamming_space(8, 2);
    const auto a = design_bound_auto(h, 8.0, 0, {kTol, 1});
    const auto b = design_bound_auto(h, 8.0, 0, {kTol, 4});
    ASSERT_EQ(a.per_radius.size(), 9u);
    ASSERT_TRUE(a.best);
    EXPECT_EQ(*a.best, 1u);
    EXPECT_TRUE(a.per_radius[0].vacuous);
    EXPECT_EQ(a.best, b.best);
    for (std::size_t r = 0; r < a.per_radius.size(); ++r) {
        EXPECT_EQ(a.per_radius[r].bound, b.per_radius[r].bound);
        EXPECT_EQ(a.per_radius[r].lambda, b.per_radius[r].lambda);
        ASSERT_TRUE(a.per_radius[r].radius);
        EXPECT_EQ(*a.per_radius[r].radius, r);
    }
    // t below every nonzero λ(ball) except the whole space; ties go to the smaller radius
    const auto c = design_bound_auto(cycle_space(4), 1.0);
    ASSERT_TRUE(c.best);
    EXPECT_EQ(*c.best, 2u);
}

TEST(Isometries, Examples) {
    const auto h = hamming_space(3, 2);
    const auto ah = translations_to_origin(h, Design({3}, 8), 0);
    EXPECT_TRUE(ah.validated);
    for (Vertex x = 0; x < 8; ++x) EXPECT_EQ(ah.permutations[0][x], x ^ 3u);

    const auto c = cycle_space(6);
    const auto ac = translations_to_origin(c, Design({4}, 6), 0);
    for (Vertex x = 0; x < 6; ++x) EXPECT_EQ(ac.permutations[0][x], (x + 2) % 6);

    // J(4,2): y = {2,3} (id 5), origin {0,1} (id 0); the point map is (0 2)(1 3).
    const auto j = johnson_space(4, 2);
    const auto aj = translations_to_origin(j, Design({5}, 6), 0);
    const auto& sets = std::get<JohnsonFamily>(j.family()).subsets;
    EXPECT_EQ(aj.permutations[0][5], 0u);
    auto swap_points = [](std::uint64_t m) {
        std::uint64_t out = 0;
        const int pi[4] = {2, 3, 0, 1};
        for (int e = 0; e < 4; ++e)
            if (m >> e & 1) out |= std::uint64_t{1} << pi[e];
        return out;
    };
    for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(sets[aj.permutations[0][x]], swap_points(sets[x]));
}

TEST(Isometries, NonzeroOriginAndFano) {
    const auto h = hamming_space(3, 3);
    const Design d({4, 11, 26}, 27);
    const auto a = translations_to_origin(h, d, 13);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a.permutations[i][d.points()[i]], 13u);
    const auto j = johnson_space(7, 3);
    const auto f = load_design(data("fano.txt"), 35);
    const auto af = translations_to_origin(j, f, 0);
    EXPECT_EQ(af.permutations.size(), 7u);
}

TEST(Isometries, ValidationErrors) {
    const auto c = cycle_space(5);
    const Design d({2}, 5);
    // reflection x -> 2 - x takes 2 to 0 and preserves distance
    EXPECT_NO_THROW(validate_action(c, d, 0, {{2, 1, 0, 4, 3}}));
    EXPECT_EQ(kind_of([&] { validate_action(c, d, 0, {{0, 1, 2, 3, 4}}); }), ErrorKind::NoAction);
    EXPECT_EQ(kind_of([&] { validate_action(c, d, 0, {{1, 2, 0, 3, 4}}); }), ErrorKind::NoAction);
    EXPECT_EQ(kind_of([&] { validate_action(c, d, 0, {{2, 2, 0, 3, 4}}); }), ErrorKind::NoAction);
    EXPECT_EQ(kind_of([&] { validate_action(c, d, 0, {{2, 1, 0}}); }), ErrorKind::NoAction);
    EXPECT_EQ(kind_of([&] { validate_action(c, d, 0, {}); }), ErrorKind::NoAction);
    std::istringstream in("graph 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\n");
    const auto g = read_space(in);
    EXPECT_EQ(kind_of([&] { translations_to_origin(g, Design({1}, 4), 0); }), ErrorKind::NoAction);
}

TEST(BuildF, Examples) {
    const auto h = hamming_space(3, 2);
    const auto d = even_weight_code();
    const auto point = spherical_subset_eigen(h, 0, std::vector<std::size_t>{0});
    const auto f = build_F(h, point, translations_to_origin(h, d, 0), d.weights());
    EXPECT_EQ(f, d.indicator(8));

    const auto ball = spherical_subset_eigen(h, 0, std::vector<std::size_t>{0, 1});
    const Design single({0}, 8);
    const auto f1 = build_F(h, ball, translations_to_origin(h, single, 0), single.weights());
    for (std::size_t x = 0; x < 8; ++x) EXPECT_DOUBLE_EQ(f1[x], ball.eigenfunction[x]);

    const auto c = cycle_space(4);
    const Design dc({0, 2}, 4);
    const auto fc = build_F(c, subset_eigen(c, std::vector<Vertex>{0}), translations_to_origin(c, dc, 0), dc.weights());
    EXPECT_EQ(fc, (Vector{1, 0, 1, 0}));
    EXPECT_THROW(build_F(c, point, translations_to_origin(c, dc, 0), dc.weights()), Error);
}

TEST(CoverChain, EvenWeightCode) {
    const auto h = hamming_space(3, 2);
    const auto rep = verify_cover_chain(h, spectral_decomposition(h, 0), even_weight_code(), 6.0, BallOmega{0});
    EXPECT_EQ(rep.chain, (std::array<double, 4>{4, 4, 4, 4}));
    EXPECT_NEAR(rep.dirichlet_lhs, 12.0, 1e-12);
    EXPECT_NEAR(rep.dirichlet_rhs, 12.0, 1e-12);
    EXPECT_TRUE(rep.ok());
}

TEST(CoverChain, CycleFour) {
    const auto c = cycle_space(4);
    const auto rep = verify_cover_chain(c, spectral_decomposition(c, 0), Design({0, 2}, 4), 4.0, BallOmega{0});
    EXPECT_EQ(rep.chain, (std::array<double, 4>{2, 2, 2, 2}));
    EXPECT_TRUE(rep.ok());
}

TEST(CoverChain, ExtendedHammingCode) {
    const auto h = hamming_space(8, 2);
    const auto rep = verify_cover_chain(h, spectral_decomposition(h, 0), load_design(data("hamming844.txt"), 256), 8.0,
                                        BallOmega{1});
    EXPECT_EQ(rep.chain[0], 144.0);
    EXPECT_EQ(rep.chain[1], 144.0);
    EXPECT_EQ(rep.chain[2], 144.0);
    EXPECT_NEAR(rep.chain[3], 256 * 2 * std::sqrt(2.0) / 8, 1e-9);
    EXPECT_NEAR(rep.lambda, 8 - 2 * std::sqrt(2.0), 1e-12);
    EXPECT_LE(rep.max_design_residual, 1e-8);
    EXPECT_LE(rep.dirichlet_lhs, rep.dirichlet_rhs + 1e-9 * dot(rep.F, rep.F));
    EXPECT_TRUE(rep.ok());
}

TEST(CoverChain, FanoPlane) {
    const auto j = johnson_space(7, 3);
    const auto rep = verify_cover_chain(j, spectral_decomposition(j, 0), load_design(data("fano.txt"), 35), 15.0, BallOmega{0});
    EXPECT_EQ(rep.chain, (std::array<double, 4>{7, 7, 7, 7}));
    EXPECT_TRUE(rep.ok());
}

TEST(CoverChain, SuppliedIsometriesMatchBuiltIn) {
    const auto c = cycle_space(6);
    const auto sd = spectral_decomposition(c, 0);
    const Design d({0, 2, 4}, 6);
    // reflections x -> y - x instead of rotations
    std::vector<std::vector<Vertex>> refl;
    for (auto y : d.points()) {
        std::vector<Vertex> p(6);
        for (Vertex x = 0; x < 6; ++x) p[x] = (y + 6 - x) % 6;
        refl.push_back(p);
    }
    const auto a = verify_cover_chain(c, sd, d, 3.0, BallOmega{1});
    const auto b = verify_cover_chain(c, sd, d, 3.0, BallOmega{1}, IsometryAction{refl, false});
    EXPECT_TRUE(a.ok());
    EXPECT_TRUE(b.ok());
    for (std::size_t x = 0; x < 6; ++x) EXPECT_NEAR(a.F[x], b.F[x], 1e-12);
}

TEST(CoverChain, Weighted) {
    const auto c = cycle_space(8);
    const auto sd = spectral_decomposition(c, 0);
    const Design d({0, 4}, {3, 3}, 8);
    const auto rep = verify_cover_chain(c, sd, d, 2.0, BallOmega{1});
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.chain[0], 6.0);
}

TEST(CoverChain, Errors) {
    const auto c = cycle_space(4);
    const auto sd = spectral_decomposition(c, 0);
    EXPECT_EQ(kind_of([&] { verify_cover_chain(c, sd, Design({0, 1}, 4), 4.0, BallOmega{0}); }), ErrorKind::NotADesign);
    EXPECT_EQ(kind_of([&] { verify_cover_chain(c, sd, Design({0, 2}, 4), 1.0, BallOmega{0}); }), ErrorKind::Vacuous);
}

// Cover chains hold for every design of every small space (gap-t values, all balls).
TEST(CoverChain, AllDesignsSmallSpaces) {
    for (const auto& s : {cycle_space(6), cycle_space(8), hamming_space(3, 2)}) {
        const auto sd = spectral_decomposition(s, 0);
        const std::size_t n = s.vertex_count();
        for (double t : oracle::gap_values(sd))
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                std::vector<Vertex> pts;
                for (std::size_t x = 0; x < n; ++x)
                    if (mask >> x & 1) pts.push_back(static_cast<Vertex>(x));
                const Design d(pts, n);
                if (!verify_design(s, sd, d, t).is_design) continue;
                for (std::size_t r = 0; r <= s.class_count(); ++r) {
                    if (!(design_bound(s, t, BallOmega{r}).lambda < t)) continue;
                    const auto rep = verify_cover_chain(s, sd, d, t, BallOmega{r});
                    EXPECT_TRUE(rep.ok()) << "mask " << mask << " t " << t << " r " << r;
                }
            }
    }
}

TEST(Search, Examples) {
    const auto c4 = cycle_space(4);
    const auto r4 = min_design_search(c4, spectral_decomposition(c4, 0), 4.0, 4);
    ASSERT_TRUE(r4.witness);
    EXPECT_EQ(*r4.witness, (std::vector<Vertex>{0, 2}));
    const auto c6 = cycle_space(6);
    const auto r6 = min_design_search(c6, spectral_decomposition(c6, 0), 3.0, 4);
    ASSERT_TRUE(r6.witness);
    EXPECT_EQ(*r6.witness, (std::vector<Vertex>{0, 3}));
    for (const auto& s : {c6, hamming_space(3, 2), johnson_space(6, 3)}) {
        const auto sd = spectral_decomposition(s, 0);
        const auto r = min_design_search(s, sd, sd.eigenvalue(1), 3);
        ASSERT_TRUE(r.witness);
        EXPECT_EQ(r.witness->size(), 1u);
    }
}

TEST(Search, NoneWithinLimit) {
    const auto h = hamming_space(3, 2);
    const auto r = min_design_search(h, spectral_decomposition(h, 0), 6.5, 3);
    EXPECT_FALSE(r.witness);
    EXPECT_EQ(r.max_size, 3u);
}

TEST(Search, Caps) {
    const auto h = hamming_space(6, 2);
    const auto sd = spectral_decomposition(h, 0);
    EXPECT_EQ(kind_of([&] { min_design_search(h, sd, 3.0, 2); }), ErrorKind::SizeCap);
    const auto c = cycle_space(8);
    EXPECT_EQ(kind_of([&] { min_design_search(c, spectral_decomposition(c, 0), 3.0, 9); }), ErrorKind::SizeCap);
}

// The search result is a design, nothing smaller is, and the bound sits below it.
TEST(Search, MatchesBruteForceAndBound) {
    for (const auto& s : {cycle_space(8), hamming_space(3, 2), hamming_space(4, 2), johnson_space(6, 2)}) {
        const auto sd = spectral_decomposition(s, 0);
        const std::size_t n = s.vertex_count();
        for (double t : oracle::gap_values(sd)) {
            const auto r = min_design_search(s, sd, t, 8, {kTol, 3});
            std::size_t best = 0;
            std::vector<Vertex> best_set;
            for (std::size_t mask = 1; mask < (std::size_t{1} << n) && n <= 16; ++mask) {
                const auto k = static_cast<std::size_t>(std::popcount(mask));
                if (k > 8 || (best && k > best)) continue;
                std::vector<Vertex> pts;
                for (std::size_t x = 0; x < n; ++x)
                    if (mask >> x & 1) pts.push_back(static_cast<Vertex>(x));
                if (!verify_design(s, sd, Design(pts, n), t).is_design) continue;
                if (!best || k < best || (k == best && pts < best_set)) {
                    best = k;
                    best_set = pts;
                }
            }
            if (!best) {
                EXPECT_FALSE(r.witness) << "t=" << t;
                continue;
            }
            ASSERT_TRUE(r.witness) << "t=" << t;
            EXPECT_EQ(*r.witness, best_set) << "t=" << t;
            const auto autob = design_bound_auto(s, t);
            for (const auto& rep : autob.per_radius) EXPECT_LE(rep.bound, static_cast<double>(best) + kTol);
        }
    }
}

TEST(Theorem, ExhaustiveSmallSpaces) {
    for (const auto& s : {cycle_space(4), cycle_space(5), cycle_space(6), cycle_space(8), hamming_space(3, 2)}) {
        const auto tally = oracle::exhaustive_theorem(s);
        EXPECT_EQ(tally.violations, 0u);
        EXPECT_EQ(tally.oracle_mismatches, 0u);
        EXPECT_GT(tally.comparisons, 0u);
    }
}

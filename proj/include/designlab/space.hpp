#pragma once

// Finite symmetric spaces: graphs and symmetric association schemes, stored as
// a dense pair classification. Built-in families are Hamming, Johnson and
// cycle schemes.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "designlab/errors.hpp"
#include "designlab/parallel.hpp"

namespace designlab {

using Vertex = std::uint32_t;
using ClassIndex = std::uint16_t;

inline constexpr std::size_t kMaxVertices = 4096;

enum class SpaceKind { Graph, Scheme, Hamming, Johnson, Cycle };

inline const char* to_string(SpaceKind k) noexcept {
    switch (k) {
        case SpaceKind::Graph: return "graph";
        case SpaceKind::Scheme: return "scheme";
        case SpaceKind::Hamming: return "hamming";
        case SpaceKind::Johnson: return "johnson";
        case SpaceKind::Cycle: return "cycle";
    }
    return "unknown";
}

struct HammingFamily {
    int n;
    int q;
};
struct JohnsonFamily {
    int n;
    int w;
    std::vector<std::uint64_t> subsets;  // vertex -> bitmask, colex (= numeric) order
};
struct CycleFamily {
    int n;
};
using Family = std::variant<std::monostate, HammingFamily, JohnsonFamily, CycleFamily>;

/// Intersection numbers p^k_{ij}: for any pair (x, y) in class k, the number
/// of z with (x, z) in class i and (z, y) in class j. Stored sparsely per k.
class IntersectionNumbers {
public:
    struct Entry {
        ClassIndex i;
        ClassIndex j;
        std::uint32_t count;
        auto operator<=>(const Entry&) const = default;
    };

    IntersectionNumbers() = default;
    explicit IntersectionNumbers(std::vector<std::vector<Entry>> per_class) : table_(std::move(per_class)) {}

    [[nodiscard]] std::uint32_t operator()(std::size_t k, std::size_t i, std::size_t j) const {
        const auto& row = table_.at(k);
        auto it = std::lower_bound(row.begin(), row.end(), std::pair{i, j}, [](const Entry& e, const auto& key) {
            return std::pair<std::size_t, std::size_t>{e.i, e.j} < key;
        });
        if (it != row.end() && it->i == i && it->j == j) return it->count;
        return 0;
    }

    [[nodiscard]] std::size_t class_count() const noexcept { return table_.size(); }
    [[nodiscard]] const std::vector<Entry>& entries(std::size_t k) const { return table_.at(k); }

private:
    std::vector<std::vector<Entry>> table_;
};

/// Immutable finite space. Copies share the classification table.
class Space {
public:
    /// `classify` is the row-major N x N class table. Classes are 0..m with
    /// class 0 exactly on the diagonal. The graph of `laplacian_class` must be
    /// connected.
    Space(std::size_t vertex_count, std::size_t class_count, std::vector<ClassIndex> classify, SpaceKind kind,
          Family family = {}, std::size_t laplacian_class = 1)
        : n_(vertex_count),
          m_(class_count),
          classify_(std::make_shared<const std::vector<ClassIndex>>(std::move(classify))),
          kind_(kind),
          family_(std::make_shared<const Family>(std::move(family))) {
        if (n_ == 0) throw Error(ErrorKind::InvalidArgument, "space must have at least one vertex");
        if (n_ > kMaxVertices)
            throw Error(ErrorKind::SizeCap,
                        "space has " + std::to_string(n_) + " vertices; cap is " + std::to_string(kMaxVertices));
        if (m_ == 0) throw Error(ErrorKind::InvalidArgument, "space must have at least one nontrivial class");
        if (classify_->size() != n_ * n_) throw Error(ErrorKind::InvalidArgument, "classification table size mismatch");
        for (std::size_t x = 0; x < n_; ++x) {
            for (std::size_t y = 0; y < n_; ++y) {
                const auto c = (*classify_)[x * n_ + y];
                if (c > m_)
                    throw Error(ErrorKind::InvalidArgument, "class index " + std::to_string(c) + " out of range at (" +
                                                                std::to_string(x) + "," + std::to_string(y) + ")");
                if ((c == 0) != (x == y))
                    throw Error(ErrorKind::InvalidArgument, "class 0 must be exactly the diagonal; violated at (" +
                                                                std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
        valencies_.assign(m_ + 1, 0);
        for (std::size_t y = 0; y < n_; ++y) ++valencies_[(*classify_)[y]];
        set_laplacian_class(laplacian_class);
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t class_count() const noexcept { return m_; }
    [[nodiscard]] SpaceKind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_scheme() const noexcept { return kind_ != SpaceKind::Graph; }
    [[nodiscard]] const Family& family() const noexcept { return *family_; }
    [[nodiscard]] std::size_t laplacian_class() const noexcept { return r_; }

    [[nodiscard]] ClassIndex classify(std::size_t x, std::size_t y) const noexcept { return (*classify_)[x * n_ + y]; }
    [[nodiscard]] std::span<const ClassIndex> classification() const noexcept { return *classify_; }

    /// Class sizes seen from vertex 0; equal for every vertex when the space is regular.
    [[nodiscard]] const std::vector<std::size_t>& valencies() const noexcept { return valencies_; }
    [[nodiscard]] std::size_t valency(std::size_t i) const { return valencies_.at(i); }

    /// Neighbours of x in the Laplacian relation.
    [[nodiscard]] const std::vector<Vertex>& neighbors(std::size_t x) const { return (*adjacency_)[x]; }
    [[nodiscard]] std::size_t degree(std::size_t x) const { return (*adjacency_)[x].size(); }

    [[nodiscard]] const std::optional<IntersectionNumbers>& intersection_numbers() const noexcept {
        return *intersections_;
    }

    [[nodiscard]] std::vector<Vertex> sphere(std::size_t origin, std::size_t cls) const {
        std::vector<Vertex> out;
        for (std::size_t y = 0; y < n_; ++y)
            if (classify(origin, y) == cls) out.push_back(static_cast<Vertex>(y));
        return out;
    }

    /// Copy of this space with intersection numbers attached.
    [[nodiscard]] Space with_intersection_numbers(IntersectionNumbers p) const {
        Space s = *this;
        s.intersections_ = std::make_shared<const std::optional<IntersectionNumbers>>(std::move(p));
        return s;
    }

    /// Copy of this space using another relation for the Laplacian.
    [[nodiscard]] Space with_laplacian_class(std::size_t r) const {
        Space s = *this;
        s.set_laplacian_class(r);
        return s;
    }

private:
    void set_laplacian_class(std::size_t r) {
        if (r == 0 || r > m_)
            throw Error(ErrorKind::InvalidArgument,
                        "laplacian relation " + std::to_string(r) + " outside 1.." + std::to_string(m_));
        r_ = r;
        auto adj = std::make_shared<std::vector<std::vector<Vertex>>>(n_);
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y)
                if (classify(x, y) == r) (*adj)[x].push_back(static_cast<Vertex>(y));

        std::vector<char> seen(n_, 0);
        std::queue<std::size_t> frontier;
        frontier.push(0);
        seen[0] = 1;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            const auto x = frontier.front();
            frontier.pop();
            for (auto y : (*adj)[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    frontier.push(y);
                }
        }
        if (reached != n_)
            throw Error(ErrorKind::NotConnected, "graph of relation " + std::to_string(r) + " is not connected (" +
                                                     std::to_string(reached) + " of " + std::to_string(n_) +
                                                     " vertices reachable from 0)");
        adjacency_ = std::move(adj);
    }

    std::size_t n_;
    std::size_t m_;
    std::shared_ptr<const std::vector<ClassIndex>> classify_;
    SpaceKind kind_;
    std::shared_ptr<const Family> family_;
    std::vector<std::size_t> valencies_;
    std::size_t r_ = 1;
    std::shared_ptr<const std::vector<std::vector<Vertex>>> adjacency_;
    std::shared_ptr<const std::optional<IntersectionNumbers>> intersections_ =
        std::make_shared<const std::optional<IntersectionNumbers>>();
};

/// Non-owning view of a raw classification table, used to validate a scheme
/// before a Space (which requires a connected Laplacian relation) exists.
class ClassTableView {
public:
    ClassTableView(std::size_t n, std::size_t m, std::span<const ClassIndex> table) : n_(n), m_(m), table_(table) {
        valencies_.assign(m_ + 1, 0);
        for (std::size_t y = 0; y < n_; ++y) ++valencies_[table_[y]];
    }
    explicit ClassTableView(const Space& s) : ClassTableView(s.vertex_count(), s.class_count(), s.classification()) {}

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t class_count() const noexcept { return m_; }
    [[nodiscard]] ClassIndex classify(std::size_t x, std::size_t y) const noexcept { return table_[x * n_ + y]; }
    [[nodiscard]] std::size_t valency(std::size_t i) const { return valencies_.at(i); }

private:
    std::size_t n_;
    std::size_t m_;
    std::span<const ClassIndex> table_;
    std::vector<std::size_t> valencies_;
};

namespace detail {

/// Sorted (i, j, count) profile of the pair (x, y).
template <typename Table>
std::vector<IntersectionNumbers::Entry> pair_profile(const Table& s, std::size_t x, std::size_t y) {
    std::vector<std::pair<ClassIndex, ClassIndex>> raw;
    raw.reserve(s.vertex_count());
    for (std::size_t z = 0; z < s.vertex_count(); ++z) raw.emplace_back(s.classify(x, z), s.classify(z, y));
    std::sort(raw.begin(), raw.end());
    std::vector<IntersectionNumbers::Entry> out;
    for (const auto& [i, j] : raw) {
        if (!out.empty() && out.back().i == i && out.back().j == j)
            ++out.back().count;
        else
            out.push_back({i, j, 1});
    }
    return out;
}

}  // namespace detail

/// Intersection numbers read off one representative pair per class from
/// vertex 0. Only meaningful when the space is already known to be a scheme.
inline IntersectionNumbers intersection_numbers_from_representatives(const Space& s) {
    std::vector<std::vector<IntersectionNumbers::Entry>> table(s.class_count() + 1);
    std::vector<char> done(s.class_count() + 1, 0);
    for (std::size_t y = 0; y < s.vertex_count(); ++y) {
        const auto k = s.classify(0, y);
        if (done[k]) continue;
        done[k] = 1;
        table[k] = detail::pair_profile(s, 0, y);
    }
    return IntersectionNumbers(std::move(table));
}

// ---------------------------------------------------------------------------
// Scheme validation

struct Violation {
    std::string axiom;    // "symmetry", "regularity", "intersection", "empty_class"
    std::string witness;  // human-readable witness
    std::vector<Vertex> vertices;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::optional<IntersectionNumbers> intersection_numbers;
    /// Schemes loaded from files are checked against the axioms only; a
    /// transitive symmetry group is assumed, not verified.
    bool transitivity_verified = false;
};

/// Checks symmetry, regularity of every class and constancy of p^k_{ij} over
/// all pairs of each class. Violations are reported with witnesses; the first
/// violation per axiom is kept.
inline ValidationReport validate_classification(const ClassTableView& s, unsigned threads = 1) {
    ValidationReport rep;
    const std::size_t n = s.vertex_count();
    const std::size_t m = s.class_count();

    for (std::size_t x = 0; x < n && rep.valid; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (s.classify(x, y) != s.classify(y, x)) {
                rep.valid = false;
                rep.violations.push_back({"symmetry",
                                          "class(" + std::to_string(x) + "," + std::to_string(y) +
                                              ")=" + std::to_string(s.classify(x, y)) + " but class(" +
                                              std::to_string(y) + "," + std::to_string(x) +
                                              ")=" + std::to_string(s.classify(y, x)),
                                          {static_cast<Vertex>(x), static_cast<Vertex>(y)}});
                break;
            }

    for (std::size_t i = 1; i <= m; ++i)
        if (s.valency(i) == 0) {
            rep.valid = false;
            rep.violations.push_back({"empty_class", "class " + std::to_string(i) + " has no pairs", {}});
        }

    bool regular = true;
    for (std::size_t x = 1; x < n && regular; ++x) {
        std::vector<std::size_t> counts(m + 1, 0);
        for (std::size_t y = 0; y < n; ++y) ++counts[s.classify(x, y)];
        for (std::size_t i = 1; i <= m; ++i)
            if (counts[i] != s.valency(i)) {
                regular = false;
                rep.valid = false;
                rep.violations.push_back({"regularity",
                                          "valency of class " + std::to_string(i) + " not constant (deg " +
                                              std::to_string(counts[i]) + " at vertex " + std::to_string(x) +
                                              " vs " + std::to_string(s.valency(i)) + " at vertex 0)",
                                          {static_cast<Vertex>(x)}});
                break;
            }
    }
    if (!rep.valid) return rep;

    // Representative profile per class, then every pair x < y compared to it.
    std::vector<std::vector<IntersectionNumbers::Entry>> table(m + 1);
    std::vector<std::pair<Vertex, Vertex>> rep_pair(m + 1);
    std::vector<char> have(m + 1, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            const auto k = s.classify(x, y);
            if (have[k]) continue;
            have[k] = 1;
            table[k] = detail::pair_profile(s, x, y);
            rep_pair[k] = {static_cast<Vertex>(x), static_cast<Vertex>(y)};
        }

    struct Mismatch {
        std::size_t y = 0;
        bool found = false;
    };
    std::vector<Mismatch> per_row(n);
    parallel_for(n, threads, [&](std::size_t x) {
        for (std::size_t y = x; y < n; ++y) {
            const auto k = s.classify(x, y);
            if (detail::pair_profile(s, x, y) != table[k]) {
                per_row[x] = {y, true};
                return;
            }
        }
    });
    for (std::size_t x = 0; x < n; ++x) {
        if (!per_row[x].found) continue;
        const std::size_t y = per_row[x].y;
        const auto k = s.classify(x, y);
        const auto prof = detail::pair_profile(s, x, y);
        // Locate a differing (i, j) for the witness message.
        std::string detail_msg;
        for (std::size_t i = 0; i <= m && detail_msg.empty(); ++i)
            for (std::size_t j = 0; j <= m && detail_msg.empty(); ++j) {
                auto lookup = [&](const std::vector<IntersectionNumbers::Entry>& v) -> std::uint32_t {
                    for (const auto& e : v)
                        if (e.i == i && e.j == j) return e.count;
                    return 0;
                };
                const auto a = lookup(table[k]);
                const auto b = lookup(prof);
                if (a != b)
                    detail_msg = "p^" + std::to_string(k) + "_{" + std::to_string(i) + "," + std::to_string(j) +
                                 "} is " + std::to_string(a) + " on pair (" + std::to_string(rep_pair[k].first) +
                                 "," + std::to_string(rep_pair[k].second) + ") but " + std::to_string(b) +
                                 " on pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
            }
        rep.valid = false;
        rep.violations.push_back({"intersection", detail_msg,
                                  {rep_pair[k].first, rep_pair[k].second, static_cast<Vertex>(x),
                                   static_cast<Vertex>(y)}});
        break;
    }
    if (rep.valid) rep.intersection_numbers = IntersectionNumbers(std::move(table));
    return rep;
}

inline ValidationReport validate_scheme(const Space& s, unsigned threads = 1) {
    auto rep = validate_classification(ClassTableView(s), threads);
    rep.transitivity_verified =
        s.kind() == SpaceKind::Hamming || s.kind() == SpaceKind::Johnson || s.kind() == SpaceKind::Cycle;
    return rep;
}

// ---------------------------------------------------------------------------
// Built-in families

/// Hamming scheme H(n, q). Vertex v encodes the word with digit i equal to
/// (v / q^i) mod q; class = Hamming distance.
inline Space hamming_space(int n, int q, std::size_t laplacian_class = 1) {
    if (n < 1 || q < 2) throw Error(ErrorKind::InvalidArgument, "hamming requires n >= 1 and q >= 2");
    std::size_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<std::size_t>(q);
        if (size > kMaxVertices)
            throw Error(ErrorKind::SizeCap, "hamming(" + std::to_string(n) + "," + std::to_string(q) +
                                                ") exceeds the vertex cap " + std::to_string(kMaxVertices));
    }
    std::vector<std::vector<int>> digits(size, std::vector<int>(static_cast<std::size_t>(n)));
    for (std::size_t v = 0; v < size; ++v) {
        std::size_t rest = v;
        for (int i = 0; i < n; ++i) {
            digits[v][static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(q));
            rest /= static_cast<std::size_t>(q);
        }
    }
    std::vector<ClassIndex> cls(size * size);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) {
            int d = 0;
            for (int i = 0; i < n; ++i) d += digits[x][static_cast<std::size_t>(i)] != digits[y][static_cast<std::size_t>(i)];
            cls[x * size + y] = static_cast<ClassIndex>(d);
        }
    Space s(size, static_cast<std::size_t>(n), std::move(cls), SpaceKind::Hamming, HammingFamily{n, q},
            laplacian_class);
    return s.with_intersection_numbers(intersection_numbers_from_representatives(s));
}

/// Johnson scheme J(n, w): w-subsets of {0..n-1} in colex order; class i
/// when |x ∩ y| = w - i.
inline Space johnson_space(int n, int w, std::size_t laplacian_class = 1) {
    if (w < 1 || 2 * w > n || n > 63)
        throw Error(ErrorKind::InvalidArgument, "johnson requires 1 <= w <= n/2 and n <= 63");
    // C(n, w) with early cap check.
    double count = 1.0;
    for (int i = 0; i < w; ++i) count = count * (n - i) / (i + 1);
    if (count > static_cast<double>(kMaxVertices) + 0.5)
        throw Error(ErrorKind::SizeCap, "johnson(" + std::to_string(n) + "," + std::to_string(w) +
                                            ") exceeds the vertex cap " + std::to_string(kMaxVertices));
    std::vector<std::uint64_t> subsets;
    std::uint64_t mask = (std::uint64_t{1} << w) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        subsets.push_back(mask);
        // Gosper's hack: next integer with the same popcount.
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    const std::size_t size = subsets.size();
    std::vector<ClassIndex> cls(size * size);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            cls[x * size + y] = static_cast<ClassIndex>(w - std::popcount(subsets[x] & subsets[y]));
    Space s(size, static_cast<std::size_t>(w), std::move(cls), SpaceKind::Johnson,
            JohnsonFamily{n, w, std::move(subsets)}, laplacian_class);
    return s.with_intersection_numbers(intersection_numbers_from_representatives(s));
}

/// Cycle C_N with circular distance classes.
inline Space cycle_space(int n, std::size_t laplacian_class = 1) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle requires N >= 3");
    const auto size = static_cast<std::size_t>(n);
    if (size > kMaxVertices)
        throw Error(ErrorKind::SizeCap, "cycle(" + std::to_string(n) + ") exceeds the vertex cap " +
                                            std::to_string(kMaxVertices));
    std::vector<ClassIndex> cls(size * size);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) {
            const std::size_t d = x > y ? x - y : y - x;
            cls[x * size + y] = static_cast<ClassIndex>(std::min(d, size - d));
        }
    Space s(size, size / 2, std::move(cls), SpaceKind::Cycle, CycleFamily{n}, laplacian_class);
    return s.with_intersection_numbers(intersection_numbers_from_representatives(s));
}

}  // namespace designlab

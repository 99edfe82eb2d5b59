#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "designlab/designlab.hpp"

namespace designlab::cli {
namespace {

enum class Format { Text, Csv };

struct RunConfig {
    double tolerance = 1e-9;
    Format format = Format::Text;
    unsigned threads = 1;
    std::size_t relation = 1;
    std::size_t origin = 0;

    [[nodiscard]] ExecOptions exec() const { return {tolerance, resolve_threads(threads)}; }
};

// Locale-independent; reals always carry a '.' or an exponent.
std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    std::string s(buf, r.ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

std::string boolean(bool b) { return b ? "true" : "false"; }

template <typename Range>
std::string join(const Range& r, const char* sep = " ") {
    std::string out;
    bool first = true;
    for (const auto& v : r) {
        if (!first) out += sep;
        first = false;
        if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>)
            out += num(v);
        else
            out += std::to_string(v);
    }
    return out;
}

// A flat list of fields: "key: value" in text, "key,value" in csv.
class Fields {
public:
    Fields& add(std::string key, std::string value) {
        rows_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    void print(std::ostream& out, Format f) const {
        if (f == Format::Csv) out << "field,value\n";
        for (const auto& [k, v] : rows_) out << k << (f == Format::Csv ? "," : ": ") << v << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print(std::ostream& out, Format f) const {
        if (f == Format::Csv) {
            out << join_cells(header, ",") << '\n';
            for (const auto& r : rows) out << join_cells(r, ",") << '\n';
            return;
        }
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) s += "  ";
                s += cells[c];
                if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
            }
            out << s << '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
    }

    static std::string join_cells(const std::vector<std::string>& cells, const char* sep) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += sep;
            s += cells[c];
        }
        return s;
    }
};

// Report lines for failed verifications.
void reason(std::ostream& err, const char* kind, const std::string& msg) {
    err << "error[" << kind << "]: " << msg << '\n';
}

void warn(std::ostream& out, std::ostream& err, Format f, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) (f == Format::Csv ? err : out) << "warning: " << w << '\n';
}

Space load(const std::string& spec, const RunConfig& cfg) {
    Space s = make_space(spec, cfg.relation, resolve_threads(cfg.threads));
    if (cfg.origin >= s.vertex_count())
        throw Error(ErrorKind::InvalidArgument, "origin " + std::to_string(cfg.origin) + " out of range");
    return s;
}

std::string family_text(const Space& s) {
    return std::visit(
        [](const auto& f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, HammingFamily>)
                return "hamming n=" + std::to_string(f.n) + " q=" + std::to_string(f.q);
            else if constexpr (std::is_same_v<F, JohnsonFamily>)
                return "johnson n=" + std::to_string(f.n) + " w=" + std::to_string(f.w);
            else if constexpr (std::is_same_v<F, CycleFamily>)
                return "cycle n=" + std::to_string(f.n);
            else
                return "none";
        },
        s.family());
}

// ---------------------------------------------------------------------------

int cmd_space_info(const std::string& spec, const RunConfig& cfg, std::ostream& out) {
    const Space s = load(spec, cfg);
    Fields()
        .add("kind", to_string(s.kind()))
        .add("family", family_text(s))
        .add("vertices", std::to_string(s.vertex_count()))
        .add("classes", std::to_string(s.class_count()))
        .add("valencies", join(s.valencies()))
        .add("laplacian_relation", std::to_string(s.laplacian_class()))
        .add("degree_at_origin", std::to_string(s.degree(cfg.origin)))
        .print(out, cfg.format);
    return 0;
}

int cmd_space_validate(const std::string& spec, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Space s = load(spec, cfg);
    const auto rep = validate_scheme(s, resolve_threads(cfg.threads));
    Fields f;
    f.add("kind", to_string(s.kind()))
        .add("valid", boolean(rep.valid))
        .add("transitivity_verified", boolean(rep.transitivity_verified))
        .add("violations", std::to_string(rep.violations.size()));
    f.print(out, cfg.format);
    if (!rep.violations.empty()) {
        Table t{{"axiom", "witness"}, {}};
        for (const auto& v : rep.violations) t.rows.push_back({v.axiom, v.witness});
        t.print(out, cfg.format);
    }
    if (!rep.valid) {
        reason(err, "scheme_axiom", rep.violations.empty() ? "invalid" : rep.violations.front().witness);
        return 1;
    }
    return 0;
}

int cmd_spectrum(const std::string& spec, const RunConfig& cfg, std::ostream& out) {
    const Space s = load(spec, cfg);
    const auto sd = spectral_decomposition(s, cfg.origin, cfg.exec());
    const std::size_t m = s.class_count();
    Table t;
    t.header = {"j", "theta", "multiplicity"};
    for (std::size_t i = 0; i <= m; ++i) t.header.push_back("z" + std::to_string(i));
    for (std::size_t i = 0; i <= m; ++i) t.header.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < sd.eigenspace_count(); ++j) {
        std::vector<std::string> row{std::to_string(j), num(sd.eigenvalue(j)), std::to_string(sd.multiplicity(j))};
        for (std::size_t i = 0; i <= m; ++i) row.push_back(num(sd.zonal()(j, i)));
        for (std::size_t i = 0; i <= m; ++i) row.push_back(num(sd.eigenmatrix()(i, j)));
        t.rows.push_back(std::move(row));
    }
    t.print(out, cfg.format);
    return 0;
}

struct OmegaFlags {
    std::optional<std::size_t> ball;
    std::vector<std::size_t> spheres;
    std::string set;
    bool auto_radius = false;
};

OmegaSpec omega_from(const OmegaFlags& f, const Space& s) {
    if (f.ball) return BallOmega{*f.ball};
    if (!f.spheres.empty()) return SpheresOmega{f.spheres};
    return SetOmega{load_subset(f.set, s.vertex_count())};
}

int cmd_subset_eig(const std::string& spec, const OmegaFlags& flags, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
    const Space s = load(spec, cfg);
    std::vector<std::string> warnings;
    const auto eig = omega_eigen(s, cfg.origin, omega_from(flags, s), cfg.tolerance, &warnings);
    warn(out, err, cfg.format, warnings);
    Fields f;
    f.add("method", to_string(eig.method)).add("size", std::to_string(eig.omega.size()));
    if (eig.spheres) f.add("spheres", join(*eig.spheres));
    f.add("lambda", num(eig.lambda));
    f.print(out, cfg.format);
    Table t{{"vertex", "psi"}, {}};
    for (auto v : eig.omega) t.rows.push_back({std::to_string(v), num(eig.eigenfunction[v])});
    t.print(out, cfg.format);
    return 0;
}

int cmd_design_verify(const std::string& spec, const std::string& file, double t, const RunConfig& cfg,
                      std::ostream& out, std::ostream& err) {
    const Space s = load(spec, cfg);
    const Design d = load_design(file, s.vertex_count());
    const auto sd = spectral_decomposition(s, cfg.origin, cfg.exec());
    const auto check = verify_design(s, sd, d, t, cfg.tolerance);
    out << boolean(check.is_design) << '\n';
    if (!check.is_design) {
        for (const auto& r : check.checked)
            if (r.residual > cfg.tolerance * norm2(d.indicator(s.vertex_count()))) {
                reason(err, "not_a_design", "residual " + num(r.residual) + " at theta = " + num(r.theta));
                break;
            }
        return 1;
    }
    return 0;
}

int cmd_design_strength(const std::string& spec, const std::string& file, std::optional<double> t,
                        const RunConfig& cfg, std::ostream& out) {
    const Space s = load(spec, cfg);
    const Design d = load_design(file, s.vertex_count());
    const auto sd = spectral_decomposition(s, cfg.origin, cfg.exec());
    const auto rep = design_strength(s, sd, d, cfg.tolerance);
    Fields f;
    f.add("points", std::to_string(d.size()))
        .add("total_weight", std::to_string(d.total_weight()))
        .add("strength", num(rep.strength));
    if (t) f.add("design_at_t", boolean(verify_design(s, sd, d, *t, cfg.tolerance).is_design));
    f.print(out, cfg.format);
    const double threshold = cfg.tolerance * norm2(d.indicator(s.vertex_count()));
    Table tab{{"theta", "residual", "vanishes"}, {}};
    for (const auto& r : rep.per_eigenspace) tab.rows.push_back({num(r.theta), num(r.residual), boolean(r.residual <= threshold)});
    tab.print(out, cfg.format);
    return 0;
}

int cmd_design_search(const std::string& spec, double t, std::size_t max_size, const RunConfig& cfg,
                      std::ostream& out, std::ostream& err) {
    const Space s = load(spec, cfg);
    const auto sd = spectral_decomposition(s, cfg.origin, cfg.exec());
    const auto res = min_design_search(s, sd, t, max_size, cfg.exec());
    const auto bound = design_bound_auto(s, t, cfg.origin, cfg.exec());
    const double best = bound.best ? bound.per_radius[*bound.best].bound : 0.0;
    Fields f;
    f.add("found", boolean(res.witness.has_value()));
    if (res.witness) f.add("min_size", std::to_string(res.witness->size())).add("witness", join(*res.witness));
    f.add("best_bound", num(best));
    if (bound.best) f.add("best_radius", std::to_string(*bound.per_radius[*bound.best].radius));
    const bool consistent = !res.witness || best <= static_cast<double>(res.witness->size()) + cfg.tolerance;
    f.add("bound_consistent", boolean(consistent));
    f.print(out, cfg.format);
    if (!consistent) {
        reason(err, "bound_violated", "design of size " + std::to_string(res.witness->size()) + " below bound " + num(best));
        return 1;
    }
    return 0;
}

int cmd_bound(const std::string& spec, double t, const OmegaFlags& flags, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
    const Space s = load(spec, cfg);
    if (flags.auto_radius) {
        const auto rep = design_bound_auto(s, t, cfg.origin, cfg.exec());
        Table tab{{"radius", "lambda", "vol_omega", "bound", "vacuous"}, {}};
        for (const auto& r : rep.per_radius)
            tab.rows.push_back({std::to_string(*r.radius), num(r.lambda), std::to_string(r.volume_omega), num(r.bound),
                                boolean(r.vacuous)});
        if (rep.best) {
            const auto& b = rep.per_radius[*rep.best];
            tab.rows.push_back({"best", num(b.lambda), std::to_string(b.volume_omega), num(b.bound), boolean(b.vacuous)});
        } else {
            tab.rows.push_back({"best", "", "", "", "true"});
        }
        if (!rep.per_radius.empty()) warn(out, err, cfg.format, rep.per_radius.front().warnings);
        tab.print(out, cfg.format);
        if (cfg.format == Format::Text && rep.best) out << "best radius: " << *rep.per_radius[*rep.best].radius << '\n';
        return 0;
    }
    const auto rep = design_bound(s, t, omega_from(flags, s), cfg.origin, cfg.exec());
    warn(out, err, cfg.format, rep.warnings);
    Fields f;
    f.add("t", num(rep.t)).add("omega", rep.omega);
    f.add("lambda", num(rep.lambda))
        .add("method", to_string(rep.method))
        .add("vol_omega", std::to_string(rep.volume_omega))
        .add("vol_space", std::to_string(rep.volume_space))
        .add("bound", num(rep.bound))
        .add("vacuous", boolean(rep.vacuous));
    f.print(out, cfg.format);
    return 0;
}

int cmd_cover(const std::string& spec, const std::string& design_file, double t, std::size_t radius,
              const std::string& isometry_file, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Space s = load(spec, cfg);
    const Design d = load_design(design_file, s.vertex_count());
    const auto sd = spectral_decomposition(s, cfg.origin, cfg.exec());
    std::optional<IsometryAction> action;
    if (!isometry_file.empty()) action = load_isometries(isometry_file, s.vertex_count());
    const auto rep = verify_cover_chain(s, sd, d, t, BallOmega{radius}, action, cfg.exec());
    Fields()
        .add("t", num(rep.t))
        .add("lambda", num(rep.lambda))
        .add("design_times_omega", num(rep.chain[0]))
        .add("union_of_translates", num(rep.chain[1]))
        .add("support_F", num(rep.chain[2]))
        .add("bound_times_omega", num(rep.chain[3]))
        .add("chain_ok", boolean(rep.chain_ok))
        .add("dirichlet_FF", num(rep.dirichlet_lhs))
        .add("lambda_FF", num(rep.dirichlet_rhs))
        .add("dirichlet_ok", boolean(rep.dirichlet_ok))
        .add("max_design_residual", num(rep.max_design_residual))
        .add("design_like_ok", boolean(rep.design_like_ok))
        .add("rayleigh_lhs", num(rep.rayleigh_lhs))
        .add("rayleigh_rhs", num(rep.rayleigh_rhs))
        .add("rayleigh_ok", boolean(rep.rayleigh_ok))
        .add("cs_lhs", num(rep.cs_lhs))
        .add("cs_rhs", num(rep.cs_rhs))
        .add("cauchy_schwarz_ok", boolean(rep.cauchy_schwarz_ok))
        .add("ok", boolean(rep.ok()))
        .print(out, cfg.format);
    if (!rep.ok()) {
        reason(err, "cover_chain", "an inequality of the covering chain failed");
        return 1;
    }
    return 0;
}

int cmd_torus_density(int dim, const RunConfig& cfg, std::ostream& out) {
    if (dim < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    Fields()
        .add("dim", std::to_string(dim))
        .add("bessel_zero", num(torus::bessel_first_zero(0.5 * dim - 1.0)))
        .add("rho_star", num(static_cast<double>(dim) / (dim + 2.0)))
        .add("density_bound", num(torus::lattice_density_bound(dim)))
        .add("density_bound_grid", num(torus::lattice_density_bound_grid(dim)))
        .print(out, cfg.format);
    return 0;
}

int cmd_torus_covolume(int dim, double shortest, const RunConfig& cfg, std::ostream& out) {
    const auto b = torus::torus_covolume_bound(dim, shortest);
    Fields()
        .add("dim", std::to_string(b.dim))
        .add("shortest", num(b.shortest))
        .add("t", num(b.t))
        .add("rho_star", num(b.rho_star))
        .add("r_star", num(b.r_star))
        .add("dual_covolume_upper", num(b.covolume_bound))
        .add("covolume_lower", num(b.covolume_lower_bound))
        .add("grid_rho", num(b.grid_rho))
        .add("grid_dual_covolume_upper", num(b.grid_covolume_bound))
        .add("density_bound", num(b.density_bound))
        .print(out, cfg.format);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral lower bounds on designs in finite symmetric spaces", "designlab"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--tol", cfg.tolerance, "Numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    app.add_option("--relation", cfg.relation, "Relation class defining the Laplacian")->check(CLI::PositiveNumber);
    app.add_option("--origin", cfg.origin, "Origin vertex");

    std::string spec, design_file, set_file, isometry_file;
    double t = 0.0;
    std::optional<double> opt_t;
    std::size_t max_size = 0, radius = 0;
    int dim = 0;
    double shortest = 0.0;
    OmegaFlags omega;

    auto add_spec = [&](CLI::App* sub) { sub->add_option("spec", spec, "Space spec, e.g. hamming:n=3,q=2")->required(); };
    auto add_omega = [&](CLI::App* sub, bool with_auto) {
        auto* g = sub->add_option_group("omega");
        g->add_option("--ball", omega.ball, "Ball of radius R around the origin");
        if (with_auto) {
            g->add_flag("--auto", omega.auto_radius, "Sweep every ball radius");
        } else {
            g->add_option("--spheres", omega.spheres, "Union of spheres, e.g. 0,1,2")->delimiter(',');
        }
        g->add_option("--set", omega.set, "Subset file");
        g->require_option(1);
    };

    auto* space = app.add_subcommand("space", "Space inspection")->require_subcommand(1);
    auto* space_info = space->add_subcommand("info", "Sizes and valencies");
    auto* space_validate = space->add_subcommand("validate", "Check the association scheme axioms");
    add_spec(space_info);
    add_spec(space_validate);

    auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenspaces, zonal functions, eigenmatrix");
    add_spec(spectrum);

    auto* subset = app.add_subcommand("subset-eig", "Dirichlet eigenvalue of a subset");
    add_spec(subset);
    add_omega(subset, false);

    auto* design = app.add_subcommand("design", "Designs of strength t")->require_subcommand(1);
    auto* verify = design->add_subcommand("verify", "Is the file a design of strength t");
    auto* strength = design->add_subcommand("strength", "Largest strength of the design");
    auto* search = design->add_subcommand("search", "Exhaustive minimum design search");
    for (auto* sub : {verify, strength}) {
        add_spec(sub);
        sub->add_option("--design", design_file, "Design file")->required();
    }
    verify->add_option("--t", t, "Strength t")->required()->check(CLI::PositiveNumber);
    strength->add_option("--t", opt_t, "Also check strength t")->check(CLI::PositiveNumber);
    add_spec(search);
    search->add_option("--t", t, "Strength t")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-size", max_size, "Largest design size tried")->required();

    auto* bound = app.add_subcommand("bound", "Lower bound on the size of a design");
    add_spec(bound);
    bound->add_option("--t", t, "Strength t")->required()->check(CLI::PositiveNumber);
    add_omega(bound, true);

    auto* cover = app.add_subcommand("cover", "Check the covering argument for a design");
    add_spec(cover);
    cover->add_option("--design", design_file, "Design file")->required();
    cover->add_option("--t", t, "Strength t")->required()->check(CLI::PositiveNumber);
    cover->add_option("--ball", radius, "Ball radius")->required();
    cover->add_option("--isometries", isometry_file, "Isometry file");

    auto* torus_cmd = app.add_subcommand("torus", "Flat torus and lattice bounds")->require_subcommand(1);
    auto* density = torus_cmd->add_subcommand("density-bound", "Lattice packing density bound");
    auto* covolume = torus_cmd->add_subcommand("covolume-bound", "Covolume bound from the shortest vector");
    for (auto* sub : {density, covolume}) sub->add_option("--dim", dim, "Dimension")->required()->check(CLI::PositiveNumber);
    covolume->add_option("--shortest", shortest, "Shortest vector length")->required()->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }
    cfg.format = format == "csv" ? Format::Csv : Format::Text;

    try {
        if (space_info->parsed()) return cmd_space_info(spec, cfg, out);
        if (space_validate->parsed()) return cmd_space_validate(spec, cfg, out, err);
        if (spectrum->parsed()) return cmd_spectrum(spec, cfg, out);
        if (subset->parsed()) return cmd_subset_eig(spec, omega, cfg, out, err);
        if (verify->parsed()) return cmd_design_verify(spec, design_file, t, cfg, out, err);
        if (strength->parsed()) return cmd_design_strength(spec, design_file, opt_t, cfg, out);
        if (search->parsed()) return cmd_design_search(spec, t, max_size, cfg, out, err);
        if (bound->parsed()) return cmd_bound(spec, t, omega, cfg, out, err);
        if (cover->parsed()) return cmd_cover(spec, design_file, t, radius, isometry_file, cfg, out, err);
        if (density->parsed()) return cmd_torus_density(dim, cfg, out);
        if (covolume->parsed()) return cmd_torus_covolume(dim, shortest, cfg, out);
    } catch (const Error& e) {
        reason(err, to_string(e.kind()), e.what());
        return 1;
    } catch (const std::exception& e) {
        reason(err, "internal", e.what());
        return 1;
    }
    err << "usage error: no command\n";
    return 2;
}

}  // namespace designlab::cli

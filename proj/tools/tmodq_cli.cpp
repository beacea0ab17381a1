// Command-line front end: construct, verify and analyze (t mod q)-arcs,
// emitting verification certificates that never trust construction
// provenance.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tmodq/arc128.hpp"
#include "tmodq/constructions.hpp"

using namespace tmodq;

namespace {

constexpr const char* kVersion = "tmodq 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTimeout = 3;

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw arc_error("cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    char buf[20];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(ss.str()));
    return buf;
}

std::string arc_digest(const Arc& arc) {
    std::ostringstream os;
    write_arc(os, arc);
    char buf[20];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(os.str()));
    return buf;
}

// every claim below is recomputed by exhaustive scan
void print_certificate(std::ostream& os, const Arc& arc, const std::string& digest) {
    os << "tool: " << kVersion << "\n";
    os << "digest: " << digest << "\n";
    os << "size: " << arc.cardinality() << "\n";
    ModResult m = classify_mod(arc);
    if (m.modular) {
        os << "t: " << m.t << "\n";
        os << "modular: yes\n";
        os << "strong: " << (is_strong(arc, m.t) ? "yes" : "no") << "\n";
        auto lifting = detect_lifting_points(arc);
        os << "lifting_points: " << lifting.size() << "\n";
        os << "lifted: " << (lifting.empty() ? "no" : "yes") << "\n";
    } else {
        os << "modular: no\n";
        os << "witness_line: " << m.witness_line << "\n";
    }
    Spectrum s = spectrum(arc);
    os << "hyperplane_spectrum:";
    for (const auto& [i, c] : s.hyperplanes) os << " a" << i << "=" << c;
    os << "\n";
    os << "point_distribution:";
    for (const auto& [i, c] : s.points) os << " l" << i << "=" << c;
    os << "\n";
}

struct SpaceArgs {
    int q = 5, p = 0, e = 0, r = 3;
    std::shared_ptr<ProjSpace> build() {
        if (p == 0) {
            p = q;
            e = 1;
            for (int d = 2; d * d <= q; ++d)
                if (q % d == 0) {
                    p = d;
                    e = 0;
                    for (int v = q; v > 1; v /= p, ++e)
                        if (v % p != 0) throw field_error("q is not a prime power");
                    break;
                }
        } else if (e == 0) {
            e = 0;
            for (int v = q; v > 1; v /= p, ++e)
                if (v % p != 0) throw field_error("q is not a power of p");
        }
        return std::make_shared<ProjSpace>(FiniteField(p, e), r);
    }
};

void emit_arc(const Arc& arc, const std::string& out) {
    std::string digest;
    if (out.empty()) {
        write_arc(std::cout, arc);
        digest = arc_digest(arc);
    } else {
        write_arc_file(out, arc);
        digest = file_digest(out);
        std::ofstream cert(out + ".cert");
        print_certificate(cert, arc, digest);
    }
    print_certificate(std::cerr, arc, digest);
}

Subspace coordinate_subspace(const ProjSpace& sp, int from, int to) {
    std::vector<std::vector<int>> rows;
    for (int i = from; i <= to; ++i) {
        std::vector<int> v(sp.r() + 1, 0);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return Subspace{rows};
}

// re-embeds an arc from PG(s,q) into the coordinate s-subspace
// x_{s+1} = ... = x_r = 0 of PG(r,q)
Arc embed_arc(const Arc& base, const std::shared_ptr<const ProjSpace>& ambient) {
    const ProjSpace& low = *base.space;
    Arc arc(ambient);
    for (long p = 0; p < low.num_points(); ++p) {
        if (base.mult[p] == 0) continue;
        std::vector<int> coords = low.point((int)p);
        coords.resize(ambient->r() + 1, 0);
        arc.mult[ambient->point_id(coords)] = base.mult[p];
    }
    return arc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and exhaustive verification of (t mod q)-arcs in PG(r,q)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    SpaceArgs sa;
    unsigned seed = 0;
    std::string out;
    app.add_option("--q", sa.q, "field order q");
    app.add_option("--p", sa.p, "characteristic (derived from q if omitted)");
    app.add_option("--e", sa.e, "extension degree (derived if omitted)");
    app.add_option("--r", sa.r, "projective dimension");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--out", out, "output file (stdout if omitted)");

    auto* c = app.add_subcommand("construct", "build an arc and emit file + certificate");
    std::string kind, quad_kind = "elliptic", arc_a, arc_b, set_kind = "baer";
    int variant = 1, alpha = 1, mn_m = 1;
    long restarts = 100000;
    c->add_option("kind", kind,
                  "quadric|hermitian|mnset|lift|plane18|plane23|plane28|plane33|sum|scale|arc128")
        ->required();
    c->add_option("--quadric", quad_kind, "quadric kind: elliptic|hyperbolic|parabolic|degenerate");
    c->add_option("--variant", variant, "quadric arc variant (1 or 2)");
    c->add_option("--a", arc_a, "first input arc file (sum/scale/lift)");
    c->add_option("--b", arc_b, "second input arc file (sum)");
    c->add_option("--alpha", alpha, "scalar for scale");
    c->add_option("--set", set_kind, "point set for mnset: baer|hermitian");
    c->add_option("--m", mn_m, "m of the (m, m+sqrt(q)) set");
    c->add_option("--restarts", restarts, "cap search restart budget");

    auto* v = app.add_subcommand("verify", "exhaustively verify an arc file");
    std::string in_file;
    int expected_t = -1;
    v->add_option("file", in_file, "arc file")->required();
    v->add_option("--t", expected_t, "expected residue t");

    auto* sp_cmd = app.add_subcommand("spectrum", "print hyperplane/line/point spectra");
    sp_cmd->add_option("file", in_file, "arc file")->required();

    auto* pr = app.add_subcommand("project", "projection profile from a 0-point");
    int center = -1;
    pr->add_option("file", in_file, "arc file")->required();
    pr->add_option("--center", center, "0-point id to project from")->required();

    auto* lp = app.add_subcommand("lifting-points", "list all single-point lifting centers");
    lp->add_option("file", in_file, "arc file")->required();

    auto* ce = app.add_subcommand("cap-extract", "extract a level set and check the cap property");
    long level = 2;
    ce->add_option("file", in_file, "arc file")->required();
    ce->add_option("--m", level, "multiplicity level");

    auto* sw = app.add_subcommand("solve-weights", "enumerate weight vectors w with wA = t*j (mod q)");
    std::string matrix_file;
    int sw_t = 3, sw_q = 5, max_w = 3;
    sw->add_option("matrix", matrix_file, "orbit matrix file (4 x 6)")->required();
    sw->add_option("--t", sw_t, "target residue");
    sw->add_option("--mod", sw_q, "modulus");
    sw->add_option("--max-w", max_w, "upper bound on the entries of w");

    auto* sc = app.add_subcommand("search-cap", "search for a complete 20-cap of PG(3,5)");
    sc->add_option("--restarts", restarts, "restart budget");

    auto* du = app.add_subcommand("dual", "sigma-dual of a quasidivisible arc");
    int dual_t = -1;
    du->add_option("file", in_file, "arc file")->required();
    du->add_option("--t", dual_t, "quasidivisibility residue (smallest admissible if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c->parsed()) {
            if (kind == "quadric") {
                auto space = sa.build();
                QuadricKind k = quad_kind == "elliptic"     ? QuadricKind::Elliptic
                                : quad_kind == "hyperbolic" ? QuadricKind::Hyperbolic
                                : quad_kind == "parabolic"  ? QuadricKind::Parabolic
                                : quad_kind == "degenerate" ? QuadricKind::Degenerate
                                                            : QuadricKind::Custom;
                QuadraticForm form = k == QuadricKind::Degenerate
                                         ? degenerate_quadric_cone(space)
                                         : standard_quadric(space, k);
                emit_arc(quadric_arc(form, variant), out);
            } else if (kind == "hermitian") {
                emit_arc(hermitian_arc(sa.build()), out);
            } else if (kind == "mnset") {
                auto space = sa.build();
                auto set = set_kind == "baer" ? baer_subplane(space) : hermitian_variety(space);
                emit_arc(mn_set_arc(space, set, mn_m), out);
            } else if (kind == "lift") {
                Arc base = read_arc_file(arc_a);
                int s = base.space->r();
                auto ambient = sa.build();
                if (sa.r <= s) throw arc_error("ambient dimension must exceed the base dimension");
                Arc embedded = embed_arc(base, ambient);
                Subspace sigma = coordinate_subspace(*ambient, 0, s);
                Subspace gamma = coordinate_subspace(*ambient, s + 1, ambient->r());
                emit_arc(lift(embedded, sigma, gamma), out);
            } else if (kind == "plane18" || kind == "plane23" || kind == "plane28" || kind == "plane33") {
                sa.q = 5;
                sa.p = 5;
                sa.e = 1;
                sa.r = 2;
                auto space = sa.build();
                Arc arc = kind == "plane18"   ? plane_arc_18(space)
                          : kind == "plane23" ? plane_arc_23(space)
                          : kind == "plane28" ? plane_arc_28(space)
                                              : plane_arc_33(space);
                emit_arc(arc, out);
            } else if (kind == "sum") {
                Arc a = read_arc_file(arc_a);
                Arc b_low = read_arc_file(arc_b);
                Arc b(a.space);
                for (long pid = 0; pid < b_low.space->num_points(); ++pid)
                    if (b_low.mult[pid] != 0)
                        b.mult[a.space->point_id(b_low.space->point((int)pid))] = b_low.mult[pid];
                emit_arc(add_arcs(a, b), out);
            } else if (kind == "scale") {
                emit_arc(scale_arc(read_arc_file(arc_a), alpha), out);
            } else if (kind == "arc128") {
                auto space = std::make_shared<ProjSpace>(FiniteField(5, 1), 3);
                emit_arc(construct_arc128(space, seed, restarts), out);
            } else {
                std::cerr << "unknown construction kind: " << kind << "\n";
                return kExitInputError;
            }
            return kExitOk;
        }

        if (v->parsed()) {
            Arc arc = read_arc_file(in_file);
            print_certificate(std::cout, arc, file_digest(in_file));
            ModResult m = classify_mod(arc);
            if (!m.modular) return kExitPropertyFailure;
            if (expected_t >= 0 && m.t != expected_t) return kExitPropertyFailure;
            return kExitOk;
        }

        if (sp_cmd->parsed()) {
            Arc arc = read_arc_file(in_file);
            Spectrum s = spectrum(arc);
            std::cout << "size: " << arc.cardinality() << "\n";
            for (const auto& [i, cnt] : s.hyperplanes) std::cout << "a_" << i << ": " << cnt << "\n";
            for (const auto& [i, cnt] : s.lines) std::cout << "line_" << i << ": " << cnt << "\n";
            for (const auto& [i, cnt] : s.points) std::cout << "lambda_" << i << ": " << cnt << "\n";
            return kExitOk;
        }

        if (pr->parsed()) {
            Arc arc = read_arc_file(in_file);
            ProjectionProfile prof = project_arc(arc, center);
            std::cout << "center: " << center << "\n";
            std::cout << "target_hyperplane: " << prof.target_hyp << "\n";
            std::cout << "induced_size: " << prof.induced.cardinality() << "\n";
            for (const auto& [type, cnt] : prof.type_histogram) {
                std::cout << "type_(";
                for (size_t i = 0; i < type.size(); ++i) std::cout << (i ? "," : "") << type[i];
                std::cout << "): " << cnt << "\n";
            }
            auto [ok, msg] = verify_projection_structure(prof);
            std::cout << "quadrangle_structure: " << (ok ? "yes" : "no") << "\n";
            std::cout << "detail: " << msg << "\n";
            return kExitOk;
        }

        if (lp->parsed()) {
            Arc arc = read_arc_file(in_file);
            auto pts = detect_lifting_points(arc);
            std::cout << "lifting_points: " << pts.size() << "\n";
            for (int p : pts) {
                for (int x : arc.space->point(p)) std::cout << x << ' ';
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (ce->parsed()) {
            Arc arc = read_arc_file(in_file);
            auto set = extract_level_set(arc, level);
            CapResult res = cap_check(*arc.space, set);
            std::cout << "level_set_size: " << set.size() << "\n";
            std::cout << "cap: " << (res.ok ? "yes" : "no") << "\n";
            if (res.ok) {
                std::cout << "plane_spectrum:";
                for (const auto& [i, cnt] : res.plane_spectrum) std::cout << " a" << i << "=" << cnt;
                std::cout << "\n";
                if (!out.empty()) write_cap_file(out, *arc.space, set);
            } else {
                std::cout << "witness_line: " << res.witness_line << "\n";
                return kExitPropertyFailure;
            }
            return kExitOk;
        }

        if (sw->parsed()) {
            OrbitMatrix A = read_orbit_matrix(matrix_file);
            for (const auto& w : solve_orbit_weights(A, sw_t, sw_q, max_w))
                std::cout << w[0] << ' ' << w[1] << ' ' << w[2] << ' ' << w[3] << "\n";
            return kExitOk;
        }

        if (sc->parsed()) {
            auto space = std::make_shared<ProjSpace>(FiniteField(5, 1), 3);
            auto cap = search_cap20(*space, seed, restarts);
            CapResult res = cap_check(*space, cap);
            std::cout << "cap_size: " << cap.size() << "\n";
            std::cout << "plane_spectrum:";
            for (const auto& [i, cnt] : res.plane_spectrum) std::cout << " a" << i << "=" << cnt;
            std::cout << "\n";
            if (!out.empty()) write_cap_file(out, *space, cap);
            return kExitOk;
        }

        if (du->parsed()) {
            Arc arc = read_arc_file(in_file);
            int t = dual_t >= 0 ? dual_t : smallest_quasidivisible_t(arc, arc.space->q());
            if (t < 0) {
                std::cerr << "arc is not quasidivisible with divisor q\n";
                return kExitPropertyFailure;
            }
            // the arc must be kept alive alongside the dual space it references
            auto orig = std::make_shared<Arc>(std::move(arc));
            DualSpace dual = dual_space(orig->space);
            emit_arc(sigma_dual(*orig, t, dual), out);
            return kExitOk;
        }
    } catch (const search_timeout& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitTimeout;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

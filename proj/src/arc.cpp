#include "tmodq/arc.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tmodq {

long Arc::cardinality() const {
    return std::accumulate(mult.begin(), mult.end(), 0L);
}

long Arc::max_mult() const {
    return mult.empty() ? 0 : *std::max_element(mult.begin(), mult.end());
}

long eval_points(const Arc& arc, const std::vector<int>& point_ids) {
    long s = 0;
    for (int id : point_ids) s += arc.mult[id];
    return s;
}

long eval_subspace(const Arc& arc, const Subspace& s) {
    return eval_points(arc, arc.space->subspace_points(s));
}

ModResult classify_mod_serial(const Arc& arc) {
    const ProjSpace& sp = *arc.space;
    const int q = sp.q();
    const int t = (int)(eval_points(arc, sp.line(0)) % q);
    for (long l = 0; l < sp.num_lines(); ++l)
        if (eval_points(arc, sp.line((int)l)) % q != t)
            return {false, -1, (int)l};
    return {true, t, -1};
}

ModResult classify_mod(const Arc& arc) {
    const ProjSpace& sp = *arc.space;
    const int q = sp.q();
    const long nl = sp.num_lines();
    const int t = (int)(eval_points(arc, sp.line(0)) % q);
    long witness = nl;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : witness) schedule(static)
#endif
    for (long l = 0; l < nl; ++l) {
        if (eval_points(arc, sp.line((int)l)) % q != t && l < witness) witness = l;
    }
    if (witness < nl) return {false, -1, (int)witness};
    return {true, t, -1};
}

bool is_strong(const Arc& arc, int t) {
    ModResult m = classify_mod(arc);
    if (!m.modular || m.t != t) throw arc_error("arc is not a (t mod q)-arc for the given t");
    return arc.max_mult() <= t;
}

Spectrum spectrum_serial(const Arc& arc) {
    const ProjSpace& sp = *arc.space;
    Spectrum s;
    for (long h = 0; h < sp.num_hyperplanes(); ++h)
        ++s.hyperplanes[eval_points(arc, sp.hyperplane((int)h).points)];
    for (long l = 0; l < sp.num_lines(); ++l)
        ++s.lines[eval_points(arc, sp.line((int)l))];
    for (long p = 0; p < sp.num_points(); ++p)
        ++s.points[arc.mult[p]];
    return s;
}

Spectrum spectrum(const Arc& arc) {
    const ProjSpace& sp = *arc.space;
    Spectrum s;
    const long nh = sp.num_hyperplanes();
    const long nl = sp.num_lines();
#ifdef _OPENMP
#pragma omp parallel
    {
        std::map<long, long> hy, li;
#pragma omp for schedule(static) nowait
        for (long h = 0; h < nh; ++h)
            ++hy[eval_points(arc, sp.hyperplane((int)h).points)];
#pragma omp for schedule(static) nowait
        for (long l = 0; l < nl; ++l)
            ++li[eval_points(arc, sp.line((int)l))];
#pragma omp critical
        {
            for (auto& [k, v] : hy) s.hyperplanes[k] += v;
            for (auto& [k, v] : li) s.lines[k] += v;
        }
    }
#else
    for (long h = 0; h < nh; ++h)
        ++s.hyperplanes[eval_points(arc, sp.hyperplane((int)h).points)];
    for (long l = 0; l < nl; ++l)
        ++s.lines[eval_points(arc, sp.line((int)l))];
#endif
    for (long p = 0; p < sp.num_points(); ++p)
        ++s.points[arc.mult[p]];
    return s;
}

Arc add_arcs(const Arc& a, const Arc& b) {
    if (a.space != b.space) throw arc_error("arcs live in different spaces");
    Arc r = a;
    for (size_t i = 0; i < r.mult.size(); ++i) r.mult[i] += b.mult[i];
    return r;
}

Arc scale_arc(const Arc& a, int alpha) {
    if (alpha < 0 || alpha > a.space->field().p() - 1)
        throw arc_error("scalar must lie in {0,...,p-1}");
    Arc r = a;
    for (long& m : r.mult) m *= alpha;
    return r;
}

Arc reduce_mod_q(const Arc& a) {
    const int q = a.space->q();
    Arc r = a;
    for (long& m : r.mult) m %= q;
    return r;
}

QuasidivisibilityReport quasidivisibility(const Arc& arc, int delta, int t) {
    if (delta < 2) throw arc_error("divisor must be >= 2");
    QuasidivisibilityReport rep;
    rep.n = arc.cardinality();
    rep.delta = delta;
    rep.t = t;
    Spectrum s = spectrum(arc);
    rep.s = s.hyperplanes.rbegin()->first;
    bool ok = (rep.s % delta) == ((rep.n + t) % delta);
    for (const auto& [i, cnt] : s.hyperplanes) {
        if (cnt == 0) continue;
        long res = ((i - rep.n) % delta + delta) % delta;
        if (res > t) { ok = false; break; }
    }
    rep.admissible = ok;
    return rep;
}

int smallest_quasidivisible_t(const Arc& arc, int delta) {
    for (int t = 0; t < delta; ++t)
        if (quasidivisibility(arc, delta, t).admissible) return t;
    return -1;
}

Arc sigma_dual(const Arc& arc, int t, const DualSpace& dual) {
    const int q = arc.space->q();
    if (!quasidivisibility(arc, q, t).admissible)
        throw arc_error("arc is not t-quasidivisible with divisor q");
    const long n = arc.cardinality();
    Arc r(dual.space);
    for (long h = 0; h < arc.space->num_hyperplanes(); ++h) {
        long v = eval_points(arc, arc.space->hyperplane((int)h).points);
        r.mult[dual.hyp_to_point[h]] = (((n + t - v) % q) + q) % q;
    }
    return r;
}

void write_arc(std::ostream& os, const Arc& arc) {
    const ProjSpace& sp = *arc.space;
    const FiniteField& F = sp.field();
    os << "q " << F.q() << " p " << F.p() << " e " << F.e() << " r " << sp.r() << "\n";
    for (long p = 0; p < sp.num_points(); ++p) {
        if (arc.mult[p] == 0) continue;
        for (int c : sp.point((int)p)) os << c << ' ';
        os << ": " << arc.mult[p] << "\n";
    }
}

Arc read_arc(std::istream& is) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(is, out)) {
            auto hash = out.find('#');
            if (hash != std::string::npos) out.erase(hash);
            if (out.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line(line)) throw arc_error("empty arc file");
    std::istringstream head(line);
    std::string kq, kp, ke, kr;
    int q, p, e, r;
    if (!(head >> kq >> q >> kp >> p >> ke >> e >> kr >> r) ||
        kq != "q" || kp != "p" || ke != "e" || kr != "r")
        throw arc_error("malformed arc header");
    long long check = 1;
    for (int i = 0; i < e; ++i) check *= p;
    if (check != q) throw arc_error("inconsistent q, p, e in arc header");
    auto space = std::make_shared<ProjSpace>(FiniteField(p, e), r);
    Arc arc(space);
    while (next_line(line)) {
        std::istringstream ls(line);
        std::vector<int> coords(r + 1);
        for (int& c : coords)
            if (!(ls >> c)) throw arc_error("malformed point record: " + line);
        std::string colon;
        long m;
        if (!(ls >> colon >> m) || colon != ":") throw arc_error("malformed point record: " + line);
        arc.mult[space->point_id(coords)] += m;
    }
    return arc;
}

void write_arc_file(const std::string& path, const Arc& arc) {
    std::ofstream os(path);
    if (!os) throw arc_error("cannot open " + path + " for writing");
    write_arc(os, arc);
}

Arc read_arc_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw arc_error("cannot open " + path);
    return read_arc(is);
}

}  // namespace tmodq

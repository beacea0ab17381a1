#ifndef TMODQ_ARC_HPP
#define TMODQ_ARC_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tmodq/pg.hpp"

namespace tmodq {

struct arc_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Multiplicity function on the points of a ProjSpace.
struct Arc {
    std::shared_ptr<const ProjSpace> space;
    std::vector<long> mult;

    explicit Arc(std::shared_ptr<const ProjSpace> sp)
        : space(std::move(sp)), mult(space->num_points(), 0) {}
    Arc(std::shared_ptr<const ProjSpace> sp, std::vector<long> m)
        : space(std::move(sp)), mult(std::move(m)) {}

    long cardinality() const;
    long operator()(int point_id) const { return mult[point_id]; }
    long max_mult() const;
};

struct ModResult {
    bool modular = false;
    int t = -1;            // residue in [0,q) when modular
    int witness_line = -1; // first offending line id otherwise
};

struct Spectrum {
    std::map<long, long> hyperplanes;  // a_i
    std::map<long, long> lines;
    std::map<long, long> points;       // lambda_i
    long a(long i) const { auto it = hyperplanes.find(i); return it == hyperplanes.end() ? 0 : it->second; }
    long lambda(long i) const { auto it = points.find(i); return it == points.end() ? 0 : it->second; }
};

struct QuasidivisibilityReport {
    long n = 0;       // |K|
    long s = 0;       // max hyperplane multiplicity
    int delta = 0;
    int t = 0;
    bool admissible = false;
};

long eval_points(const Arc& arc, const std::vector<int>& point_ids);
long eval_subspace(const Arc& arc, const Subspace& s);

/// Scans all lines; parallel kernel.
ModResult classify_mod(const Arc& arc);
/// Reference implementation, single-threaded, kept for testing.
ModResult classify_mod_serial(const Arc& arc);

/// Requires classify_mod(arc).t == t; true iff max point multiplicity <= t.
bool is_strong(const Arc& arc, int t);

Spectrum spectrum(const Arc& arc);
Spectrum spectrum_serial(const Arc& arc);

Arc add_arcs(const Arc& a, const Arc& b);
Arc scale_arc(const Arc& a, int alpha);
Arc reduce_mod_q(const Arc& a);

QuasidivisibilityReport quasidivisibility(const Arc& arc, int delta, int t);
/// Smallest t in [0, delta) making the arc t-quasidivisible, or -1.
int smallest_quasidivisible_t(const Arc& arc, int delta);

/// Sigma-dual on the dual geometry: value (n + t - K(H)) mod q at the
/// dual point of each hyperplane H. Requires t-quasidivisibility with
/// divisor q.
Arc sigma_dual(const Arc& arc, int t, const DualSpace& dual);

void write_arc(std::ostream& os, const Arc& arc);
Arc read_arc(std::istream& is);
void write_arc_file(const std::string& path, const Arc& arc);
Arc read_arc_file(const std::string& path);

}  // namespace tmodq

#endif

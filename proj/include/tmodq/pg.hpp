#ifndef TMODQ_PG_HPP
#define TMODQ_PG_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tmodq/gf.hpp"

namespace tmodq {

struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Subspace of PG(r,q) as a reduced-row-echelon basis over GF(q).
/// Projective dimension = rows - 1; an empty basis is the empty subspace.
struct Subspace {
    std::vector<std::vector<int>> basis;
    int dim() const { return (int)basis.size() - 1; }
    bool empty() const { return basis.empty(); }
    bool operator==(const Subspace& o) const { return basis == o.basis; }
};

struct HyperplaneData {
    std::vector<int> dual_coords;  // normalized, first nonzero = 1
    std::vector<int> points;       // sorted point ids
};

/// PG(r,q) with materialized point, line and hyperplane tables.
/// Point ids are lexicographic on normalized coordinate vectors
/// (first nonzero coordinate scaled to 1). Immutable after build.
class ProjSpace {
public:
    ProjSpace(FiniteField field, int r, long long max_points = 1000000);

    const FiniteField& field() const { return field_; }
    int r() const { return r_; }
    int q() const { return field_.q(); }

    long num_points() const { return (long)points_.size(); }
    long num_lines() const { return (long)lines_.size(); }
    long num_hyperplanes() const { return (long)hyperplanes_.size(); }

    const std::vector<int>& point(int id) const { return points_[id]; }
    const std::vector<int>& line(int id) const { return lines_[id]; }
    const HyperplaneData& hyperplane(int id) const { return hyperplanes_[id]; }
    const std::vector<int>& lines_through(int point_id) const { return lines_through_[point_id]; }

    /// Normalizes coords (not necessarily normalized, not all zero) and
    /// returns the point id.
    int point_id(const std::vector<int>& coords) const;
    /// Hyperplane id from its dual coordinate vector.
    int hyperplane_id(const std::vector<int>& dual_coords) const;

    /// Unique line through two distinct points.
    int line_through(int p1, int p2) const;

    bool point_on_hyperplane(int point_id, int hyp_id) const;
    int dot(const std::vector<int>& a, const std::vector<int>& b) const;

    Subspace span_points(const std::vector<int>& point_ids) const;
    Subspace span(const Subspace& s1, const Subspace& s2) const;
    Subspace meet(const Subspace& s1, const Subspace& s2) const;
    std::vector<int> subspace_points(const Subspace& s) const;
    bool subspace_contains(const Subspace& s, int point_id) const;
    Subspace hyperplane_subspace(int hyp_id) const;

    /// Image of point id under projection from `center` onto hyperplane
    /// `target` (center not on target): the point target ∩ <center, Q>.
    /// Undefined for Q = center.
    int project_point(int center, int target_hyp, int point_id) const;

    std::vector<int> normalize(std::vector<int> coords) const;

private:
    FiniteField field_;
    int r_;
    std::vector<std::vector<int>> points_;
    std::vector<std::vector<int>> lines_;
    std::vector<HyperplaneData> hyperplanes_;
    std::vector<std::vector<int>> lines_through_;
    std::vector<int> coords_to_id_;  // dense lookup keyed by base-q packing
    long long pack(const std::vector<int>& coords) const;
};

/// The dual geometry: an isomorphic copy of PG(r,q) together with the
/// hyperplane <-> point correspondence.
struct DualSpace {
    std::shared_ptr<const ProjSpace> space;
    std::vector<int> hyp_to_point;   // primal hyperplane id -> dual point id
    std::vector<int> point_to_hyp;   // primal point id -> dual hyperplane id
};

DualSpace dual_space(const std::shared_ptr<const ProjSpace>& space);

/// Reduced row echelon form over GF(q); returns the nonzero rows.
std::vector<std::vector<int>> rref(const FiniteField& F, std::vector<std::vector<int>> rows);
/// Basis of the right nullspace of `rows` (vectors x with rows * x = 0).
std::vector<std::vector<int>> nullspace(const FiniteField& F, const std::vector<std::vector<int>>& rows, int ncols);

}  // namespace tmodq

#endif

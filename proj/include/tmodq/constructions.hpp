#ifndef TMODQ_CONSTRUCTIONS_HPP
#define TMODQ_CONSTRUCTIONS_HPP

#include "tmodq/arc.hpp"

namespace tmodq {

struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class QuadricKind { Elliptic, Hyperbolic, Parabolic, Degenerate, Custom };

/// Quadratic form over GF(q), q odd, as a symmetric (r+1)x(r+1) matrix.
struct QuadraticForm {
    std::shared_ptr<const ProjSpace> space;
    std::vector<std::vector<int>> matrix;
    QuadricKind kind = QuadricKind::Custom;

    /// F evaluated on the normalized representative of the point.
    int eval(int point_id) const;
    QuadClass value_class(int point_id) const;
    int rank() const;
};

/// Canonical non-degenerate quadric of the requested kind. Elliptic and
/// hyperbolic require odd r, parabolic requires even r. For even r the
/// form is oriented so that the non-square point class is the smaller one.
QuadraticForm standard_quadric(const std::shared_ptr<const ProjSpace>& space, QuadricKind kind);

/// Rank-deficient cone (over a conic) in PG(3,q), for lifting tests.
QuadraticForm degenerate_quadric_cone(const std::shared_ptr<const ProjSpace>& space);

std::vector<int> quadric_points(const QuadraticForm& form);

/// The arc with (q+1)/2 on the quadric, and 1 on the non-square class
/// (variant 1) or the square class (variant 2).
Arc quadric_arc(const QuadraticForm& form, int variant);

/// Zero set of the canonical Hermitian form sum x_i^(sqrt(q)+1), q square.
std::vector<int> hermitian_variety(const std::shared_ptr<const ProjSpace>& space);
/// Multiplicity sqrt(q) on the Hermitian variety.
Arc hermitian_arc(const std::shared_ptr<const ProjSpace>& space);

/// Multiplicity sqrt(q) on a set of type (m, m+sqrt(q)); the line-type
/// hypothesis is verified and a witness line reported on failure.
Arc mn_set_arc(const std::shared_ptr<const ProjSpace>& space, const std::vector<int>& set, int m);

/// Points of the Baer subplane of PG(2,q), q square: coordinates in the
/// subfield GF(sqrt(q)).
std::vector<int> baer_subplane(const std::shared_ptr<const ProjSpace>& space);

/// Lifting construction: arc0 lives on the points of Sigma (inside the
/// ambient space), Gamma is disjoint from Sigma with complementary
/// dimension. Points of Gamma get multiplicity t; every other point Q
/// gets arc0 at <Gamma,Q> ∩ Sigma.
Arc lift(const Arc& arc0, const Subspace& sigma, const Subspace& gamma);

/// Points P that are valid single-point lifting centers: K(P) ≡ t and
/// every line through P is constant away from P. Empty certifies that
/// the arc is not lifted.
std::vector<int> detect_lifting_points(const Arc& arc);

/// Conic x0*x2 = x1^2 in PG(2,q), q odd.
std::vector<int> conic_points(const ProjSpace& space);
/// A point off the conic is external iff it lies on a tangent line.
std::vector<int> conic_internal_points(const ProjSpace& space, const std::vector<int>& conic);
std::vector<int> conic_external_points(const ProjSpace& space, const std::vector<int>& conic);

// The sporadic strong (3 mod 5)-arcs in PG(2,5).
Arc plane_arc_18(const std::shared_ptr<const ProjSpace>& space);
Arc plane_arc_23(const std::shared_ptr<const ProjSpace>& space);
Arc plane_arc_28(const std::shared_ptr<const ProjSpace>& space);
Arc plane_arc_33(const std::shared_ptr<const ProjSpace>& space);

}  // namespace tmodq

#endif

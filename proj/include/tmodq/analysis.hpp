#ifndef TMODQ_ANALYSIS_HPP
#define TMODQ_ANALYSIS_HPP

#include "tmodq/arc.hpp"

namespace tmodq {

/// Sorted-descending multiset of the q+1 point multiplicities on a line.
using LineType = std::vector<long>;

/// Outcome of projecting an arc from a 0-point onto a plane: the induced
/// arc (supported on the target hyperplane) and the fiber line type seen
/// at each image point.
struct ProjectionProfile {
    int center = -1;
    int target_hyp = -1;
    Arc induced;
    std::map<int, LineType> point_types;   // image point id -> fiber type
    std::map<LineType, int> type_histogram;
};

/// Projection from a 0-point of the arc; target defaults to the lowest-id
/// hyperplane not through the center.
ProjectionProfile project_arc(const Arc& arc, int center, int target_hyp = -1);

/// Checks the quadrangle/diagonal-point structure of the projection of a
/// 128-point strong (3 mod 5)-arc: the four points of fiber type
/// (3,2,2,1,0,0) form a quadrangle whose diagonal points are the three
/// points of type (3,3,1,1,0,0).
std::pair<bool, std::string> verify_projection_structure(const ProjectionProfile& profile);

/// All points of multiplicity exactly m.
std::vector<int> extract_level_set(const Arc& arc, long m);

struct CapResult {
    bool ok = false;
    int witness_line = -1;              // a line with >= 3 set points
    std::map<long, long> plane_spectrum;  // |plane ∩ cap| -> count
};

/// Verifies no three points of the set are collinear and computes the
/// plane-intersection spectrum.
CapResult cap_check(const ProjSpace& space, const std::vector<int>& set);

}  // namespace tmodq

#endif

#include "tmodq/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace tmodq {

ProjectionProfile project_arc(const Arc& arc, int center, int target_hyp) {
    const ProjSpace& sp = *arc.space;
    if (arc.mult[center] != 0) throw arc_error("projection center must be a 0-point of the arc");
    if (target_hyp < 0) {
        for (long h = 0; h < sp.num_hyperplanes(); ++h)
            if (!sp.point_on_hyperplane(center, (int)h)) { target_hyp = (int)h; break; }
    }
    if (sp.point_on_hyperplane(center, target_hyp))
        throw geometry_error("projection center lies on the target hyperplane");

    ProjectionProfile prof{center, target_hyp, Arc(arc.space), {}, {}};
    for (int lid : sp.lines_through(center)) {
        const auto& pts = sp.line(lid);
        // the fiber line maps to a single point of the target
        int image = -1;
        long total = 0;
        LineType type;
        for (int p : pts) {
            type.push_back(arc.mult[p]);
            if (p != center) {
                total += arc.mult[p];
                if (image < 0) image = sp.project_point(center, target_hyp, p);
            }
        }
        std::sort(type.rbegin(), type.rend());
        prof.induced.mult[image] = total;
        prof.point_types[image] = type;
        ++prof.type_histogram[type];
    }
    return prof;
}

std::pair<bool, std::string> verify_projection_structure(const ProjectionProfile& profile) {
    const ProjSpace& sp = *profile.induced.space;
    const LineType alpha = {3, 3, 1, 1, 0, 0};
    const LineType beta = {3, 2, 2, 1, 0, 0};
    std::vector<int> alphas, betas;
    for (const auto& [p, t] : profile.point_types) {
        if (t == alpha) alphas.push_back(p);
        if (t == beta) betas.push_back(p);
    }
    if (alphas.size() != 3 || betas.size() != 4)
        return {false, "expected 3 alpha-points and 4 beta-points, got " +
                           std::to_string(alphas.size()) + " and " + std::to_string(betas.size())};
    // quadrangle: no three of the beta-points collinear
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const auto& lp = sp.line(sp.line_through(betas[i], betas[j]));
            for (int k = 0; k < 4; ++k) {
                if (k == i || k == j) continue;
                if (std::binary_search(lp.begin(), lp.end(), betas[k]))
                    return {false, "three beta-points are collinear"};
            }
        }
    // diagonal points: intersections of the three pairs of opposite sides
    auto side_meet = [&](int a, int b, int c, int d) {
        const auto& l1 = sp.line(sp.line_through(betas[a], betas[b]));
        const auto& l2 = sp.line(sp.line_through(betas[c], betas[d]));
        for (int p : l1)
            if (std::binary_search(l2.begin(), l2.end(), p)) return p;
        return -1;
    };
    std::vector<int> diag = {side_meet(0, 1, 2, 3), side_meet(0, 2, 1, 3), side_meet(0, 3, 1, 2)};
    std::sort(diag.begin(), diag.end());
    std::sort(alphas.begin(), alphas.end());
    if (diag != alphas)
        return {false, "alpha-points are not the diagonal points of the beta-quadrangle"};
    return {true, "quadrangle and diagonal points verified"};
}

std::vector<int> extract_level_set(const Arc& arc, long m) {
    std::vector<int> pts;
    for (long p = 0; p < arc.space->num_points(); ++p)
        if (arc.mult[p] == m) pts.push_back((int)p);
    return pts;
}

CapResult cap_check(const ProjSpace& space, const std::vector<int>& set) {
    CapResult res;
    std::vector<char> in_set(space.num_points(), 0);
    for (int p : set) in_set[p] = 1;
    for (long l = 0; l < space.num_lines(); ++l) {
        int cnt = 0;
        for (int p : space.line((int)l)) cnt += in_set[p];
        if (cnt >= 3) {
            res.witness_line = (int)l;
            return res;
        }
    }
    res.ok = true;
    for (long h = 0; h < space.num_hyperplanes(); ++h) {
        long cnt = 0;
        for (int p : space.hyperplane((int)h).points) cnt += in_set[p];
        ++res.plane_spectrum[cnt];
    }
    return res;
}

}  // namespace tmodq

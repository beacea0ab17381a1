#include "tmodq/constructions.hpp"

#include <algorithm>
#include <set>

namespace tmodq {

int QuadraticForm::eval(int point_id) const {
    const FiniteField& F = space->field();
    const auto& x = space->point(point_id);
    int v = 0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            v = F.add(v, F.mul(matrix[i][j], F.mul(x[i], x[j])));
    return v;
}

QuadClass QuadraticForm::value_class(int point_id) const {
    return space->field().quad_class(eval(point_id));
}

int QuadraticForm::rank() const {
    return (int)rref(space->field(), matrix).size();
}

namespace {

std::vector<std::vector<int>> zero_matrix(int n) {
    return std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
}

// adds the cross term x_i * x_j (i != j) to a symmetric matrix
void add_cross(const FiniteField& F, std::vector<std::vector<int>>& M, int i, int j) {
    int half = F.inv(F.add(1, 1));
    M[i][j] = F.add(M[i][j], half);
    M[j][i] = F.add(M[j][i], half);
}

int least_nonsquare(const FiniteField& F) {
    for (int a = 1; a < F.q(); ++a)
        if (F.quad_class(a) == QuadClass::NonSquare) return a;
    throw construction_error("no non-square element found");
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void scale_matrix(const FiniteField& F, std::vector<std::vector<int>>& M, int s) {
    for (auto& row : M)
        for (int& x : row) x = F.mul(x, s);
}

}  // namespace

QuadraticForm standard_quadric(const std::shared_ptr<const ProjSpace>& space, QuadricKind kind) {
    const FiniteField& F = space->field();
    if (F.q() % 2 == 0) throw construction_error("quadric arcs require odd q");
    const int r = space->r();
    QuadraticForm form{space, zero_matrix(r + 1), kind};
    auto& M = form.matrix;
    switch (kind) {
        case QuadricKind::Hyperbolic:
            if (r % 2 == 0) throw construction_error("hyperbolic quadrics require odd r");
            for (int i = 0; i + 1 <= r; i += 2) add_cross(F, M, i, i + 1);
            break;
        case QuadricKind::Elliptic: {
            if (r % 2 == 0) throw construction_error("elliptic quadrics require odd r");
            for (int i = 0; i + 2 < r; i += 2) add_cross(F, M, i, i + 1);
            // irreducible binary part x^2 - n*y^2, n a non-square
            M[r - 1][r - 1] = 1;
            M[r][r] = F.neg(least_nonsquare(F));
            break;
        }
        case QuadricKind::Parabolic:
            if (r % 2 != 0) throw construction_error("parabolic quadrics require even r");
            M[0][0] = 1;
            for (int i = 1; i + 1 <= r; i += 2) add_cross(F, M, i, i + 1);
            break;
        default:
            throw construction_error("standard_quadric builds non-degenerate kinds only");
    }
    if (kind == QuadricKind::Parabolic) {
        long nonsq = 0;
        for (long p = 0; p < space->num_points(); ++p)
            if (form.value_class((int)p) == QuadClass::NonSquare) ++nonsq;
        long expected = (ipow(F.q(), r) - ipow(F.q(), r / 2)) / 2;
        if (nonsq != expected) scale_matrix(F, M, least_nonsquare(F));
    }
    return form;
}

QuadraticForm degenerate_quadric_cone(const std::shared_ptr<const ProjSpace>& space) {
    const FiniteField& F = space->field();
    if (space->r() != 3) throw construction_error("cone construction expects r = 3");
    QuadraticForm form{space, zero_matrix(4), QuadricKind::Degenerate};
    add_cross(F, form.matrix, 0, 1);
    form.matrix[2][2] = 1;
    return form;
}

std::vector<int> quadric_points(const QuadraticForm& form) {
    std::vector<int> pts;
    for (long p = 0; p < form.space->num_points(); ++p)
        if (form.eval((int)p) == 0) pts.push_back((int)p);
    return pts;
}

Arc quadric_arc(const QuadraticForm& form, int variant) {
    if (variant != 1 && variant != 2) throw construction_error("variant must be 1 or 2");
    const FiniteField& F = form.space->field();
    if (F.q() % 2 == 0) throw construction_error("quadric arcs require odd q");
    const long on_quadric = (F.q() + 1) / 2;
    const QuadClass one_class = variant == 1 ? QuadClass::NonSquare : QuadClass::Square;
    Arc arc(form.space);
    for (long p = 0; p < form.space->num_points(); ++p) {
        QuadClass c = form.value_class((int)p);
        if (c == QuadClass::Zero) arc.mult[p] = on_quadric;
        else if (c == one_class) arc.mult[p] = 1;
    }
    return arc;
}

std::vector<int> hermitian_variety(const std::shared_ptr<const ProjSpace>& space) {
    const FiniteField& F = space->field();
    if (F.e() % 2 != 0) throw construction_error("Hermitian varieties require square q");
    const int s = F.sqrt_q();
    std::vector<int> pts;
    for (long p = 0; p < space->num_points(); ++p) {
        int v = 0;
        for (int c : space->point((int)p)) v = F.add(v, F.pow(c, s + 1));
        if (v == 0) pts.push_back((int)p);
    }
    return pts;
}

Arc hermitian_arc(const std::shared_ptr<const ProjSpace>& space) {
    if (space->field().e() % 2 != 0) throw construction_error("Hermitian varieties require square q");
    const int s = space->field().sqrt_q();
    Arc arc(space);
    for (int p : hermitian_variety(space)) arc.mult[p] = s;
    return arc;
}

Arc mn_set_arc(const std::shared_ptr<const ProjSpace>& space, const std::vector<int>& set, int m) {
    const FiniteField& F = space->field();
    if (F.e() % 2 != 0) throw construction_error("(m, m+sqrt(q)) sets require square q");
    const int s = F.sqrt_q();
    std::vector<char> in_set(space->num_points(), 0);
    for (int p : set) in_set[p] = 1;
    for (long l = 0; l < space->num_lines(); ++l) {
        int cnt = 0;
        for (int p : space->line((int)l)) cnt += in_set[p];
        if (cnt != m && cnt != m + s)
            throw construction_error("set is not of type (m, m+sqrt(q)): witness line " + std::to_string(l) +
                                     " meets it in " + std::to_string(cnt) + " points");
    }
    Arc arc(space);
    for (int p : set) arc.mult[p] = s;
    return arc;
}

std::vector<int> baer_subplane(const std::shared_ptr<const ProjSpace>& space) {
    const FiniteField& F = space->field();
    if (F.e() % 2 != 0) throw construction_error("Baer subplanes require square q");
    std::vector<int> pts;
    for (long p = 0; p < space->num_points(); ++p) {
        bool sub = true;
        for (int c : space->point((int)p))
            if (F.frobenius_sqrt_q(c) != c) { sub = false; break; }
        if (sub) pts.push_back((int)p);
    }
    return pts;
}

Arc lift(const Arc& arc0, const Subspace& sigma, const Subspace& gamma) {
    const auto& space = arc0.space;
    const int q = space->q();
    const int r = space->r();
    if (sigma.dim() + gamma.dim() != r - 1) throw construction_error("dim Sigma + dim Gamma must be r - 1");
    if (!space->meet(sigma, gamma).empty()) throw construction_error("Sigma and Gamma must be disjoint");
    if (sigma.dim() < 1) throw construction_error("Sigma must contain lines");

    std::vector<int> sigma_pts = space->subspace_points(sigma);
    std::vector<char> in_sigma(space->num_points(), 0);
    for (int p : sigma_pts) in_sigma[p] = 1;
    for (long p = 0; p < space->num_points(); ++p)
        if (arc0.mult[p] != 0 && !in_sigma[p])
            throw construction_error("arc is not supported on Sigma");

    // modular class of arc0 on the lines inside Sigma
    int t = -1;
    for (long l = 0; l < space->num_lines(); ++l) {
        const auto& pts = space->line((int)l);
        if (!std::all_of(pts.begin(), pts.end(), [&](int p) { return in_sigma[p]; })) continue;
        int lt = (int)(eval_points(arc0, pts) % q);
        if (t < 0) t = lt;
        else if (t != lt) throw construction_error("arc on Sigma is not a (t mod q)-arc");
    }
    if (t < 0) throw construction_error("Sigma contains no line");

    Arc arc(space);
    std::vector<char> in_gamma(space->num_points(), 0);
    for (int p : space->subspace_points(gamma)) { in_gamma[p] = 1; arc.mult[p] = t; }
    for (long pid = 0; pid < space->num_points(); ++pid) {
        if (in_gamma[pid]) continue;
        Subspace hull = space->span(gamma, space->span_points({(int)pid}));
        Subspace R = space->meet(hull, sigma);
        if (R.dim() != 0) throw construction_error("projection to Sigma is not a single point");
        arc.mult[pid] = arc0.mult[space->point_id(R.basis[0])];
    }
    return arc;
}

std::vector<int> detect_lifting_points(const Arc& arc) {
    ModResult m = classify_mod(arc);
    if (!m.modular) throw construction_error("arc is not a (t mod q)-arc");
    const ProjSpace& sp = *arc.space;
    const int q = sp.q();
    std::vector<int> centers;
    for (long pid = 0; pid < sp.num_points(); ++pid) {
        if (arc.mult[pid] % q != m.t % q) continue;
        bool ok = true;
        for (int lid : sp.lines_through((int)pid)) {
            long v = -1;
            for (int p : sp.line(lid)) {
                if (p == pid) continue;
                if (v < 0) v = arc.mult[p];
                else if (arc.mult[p] != v) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) centers.push_back((int)pid);
    }
    return centers;
}

std::vector<int> conic_points(const ProjSpace& space) {
    const FiniteField& F = space.field();
    if (space.r() != 2) throw construction_error("conic lives in a plane");
    std::vector<int> pts;
    for (long p = 0; p < space.num_points(); ++p) {
        const auto& x = space.point((int)p);
        if (F.mul(x[0], x[2]) == F.mul(x[1], x[1])) pts.push_back((int)p);
    }
    return pts;
}

namespace {

std::vector<int> conic_offpoints_by_tangency(const ProjSpace& space, const std::vector<int>& conic, bool external) {
    std::vector<char> on_conic(space.num_points(), 0);
    for (int p : conic) on_conic[p] = 1;
    std::vector<int> conic_count(space.num_lines(), 0);
    for (long l = 0; l < space.num_lines(); ++l)
        for (int p : space.line((int)l)) conic_count[l] += on_conic[p];
    std::vector<int> result;
    for (long p = 0; p < space.num_points(); ++p) {
        if (on_conic[p]) continue;
        bool on_tangent = false;
        for (int lid : space.lines_through((int)p))
            if (conic_count[lid] == 1) { on_tangent = true; break; }
        if (on_tangent == external) result.push_back((int)p);
    }
    return result;
}

}  // namespace

std::vector<int> conic_internal_points(const ProjSpace& space, const std::vector<int>& conic) {
    return conic_offpoints_by_tangency(space, conic, false);
}

std::vector<int> conic_external_points(const ProjSpace& space, const std::vector<int>& conic) {
    return conic_offpoints_by_tangency(space, conic, true);
}

namespace {

void require_pg25(const ProjSpace& space) {
    if (space.q() != 5 || space.r() != 2)
        throw construction_error("this sporadic arc is specific to PG(2,5)");
}

}  // namespace

Arc plane_arc_18(const std::shared_ptr<const ProjSpace>& space) {
    require_pg25(*space);
    Arc arc(space);
    for (const std::vector<int>& h : {std::vector<int>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
        for (int p : space->hyperplane(space->hyperplane_id(h)).points)
            ++arc.mult[p];
    return arc;
}

Arc plane_arc_23(const std::shared_ptr<const ProjSpace>& space) {
    require_pg25(*space);
    int A = space->point_id({1, 0, 0}), B = space->point_id({0, 1, 0});
    int C = space->point_id({0, 0, 1}), D = space->point_id({1, 1, 1});
    auto common = [&](int l1, int l2) {
        const auto& a = space->line(l1);
        const auto& b = space->line(l2);
        for (int p : a)
            if (std::binary_search(b.begin(), b.end(), p)) return p;
        throw construction_error("lines do not meet");
    };
    std::vector<int> sides = {
        space->line_through(A, B), space->line_through(A, C), space->line_through(A, D),
        space->line_through(B, C), space->line_through(B, D), space->line_through(C, D)};
    int P1 = common(space->line_through(A, B), space->line_through(C, D));
    int P2 = common(space->line_through(A, C), space->line_through(B, D));
    int P3 = common(space->line_through(A, D), space->line_through(B, C));
    std::vector<int> diagonals = {
        space->line_through(P1, P2), space->line_through(P1, P3), space->line_through(P2, P3)};

    Arc arc(space);
    for (int v : {A, B, C, D}) arc.mult[v] = 2;
    for (int d : {P1, P2, P3}) arc.mult[d] = 3;
    for (int dl : diagonals)
        for (int sl : sides) {
            int p = common(dl, sl);
            if (arc.mult[p] == 0) arc.mult[p] = 1;
        }
    return arc;
}

Arc plane_arc_28(const std::shared_ptr<const ProjSpace>& space) {
    require_pg25(*space);
    auto oval = conic_points(*space);
    Arc arc(space);
    for (int p : oval) arc.mult[p] = 3;
    for (int p : conic_internal_points(*space, oval)) arc.mult[p] = 1;
    return arc;
}

Arc plane_arc_33(const std::shared_ptr<const ProjSpace>& space) {
    require_pg25(*space);
    auto oval = conic_points(*space);
    Arc arc(space);
    for (int p : oval) arc.mult[p] = 3;
    for (int p : conic_external_points(*space, oval)) arc.mult[p] = 1;
    return arc;
}

}  // namespace tmodq

#include "tmodq/pg.hpp"

#include <algorithm>
#include <cassert>

namespace tmodq {

std::vector<std::vector<int>> rref(const FiniteField& F, std::vector<std::vector<int>> rows) {
    if (rows.empty()) return rows;
    const int ncols = (int)rows[0].size();
    int pivot_row = 0;
    for (int col = 0; col < ncols && pivot_row < (int)rows.size(); ++col) {
        int sel = -1;
        for (int i = pivot_row; i < (int)rows.size(); ++i)
            if (rows[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[pivot_row], rows[sel]);
        int s = F.inv(rows[pivot_row][col]);
        for (int& x : rows[pivot_row]) x = F.mul(x, s);
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            int c = rows[i][col];
            for (int j = 0; j < ncols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[pivot_row][j]));
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::vector<std::vector<int>> nullspace(const FiniteField& F, const std::vector<std::vector<int>>& rows, int ncols) {
    auto R = rref(F, rows);
    std::vector<int> pivot_col_of_row(R.size(), -1);
    std::vector<char> is_pivot(ncols, 0);
    for (size_t i = 0; i < R.size(); ++i)
        for (int j = 0; j < ncols; ++j)
            if (R[i][j] != 0) { pivot_col_of_row[i] = j; is_pivot[j] = 1; break; }
    std::vector<std::vector<int>> basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> v(ncols, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < R.size(); ++i)
            v[pivot_col_of_row[i]] = F.neg(R[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> ProjSpace::normalize(std::vector<int> coords) const {
    int lead = -1;
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) { lead = (int)i; break; }
    if (lead < 0) throw geometry_error("cannot normalize the zero vector");
    int s = field_.inv(coords[lead]);
    for (int& c : coords) c = field_.mul(c, s);
    return coords;
}

long long ProjSpace::pack(const std::vector<int>& coords) const {
    long long v = 0;
    for (int c : coords) v = v * field_.q() + c;
    return v;
}

ProjSpace::ProjSpace(FiniteField field, int r, long long max_points)
    : field_(std::move(field)), r_(r) {
    if (r < 2) throw geometry_error("dimension must be >= 2");
    const int q = field_.q();
    const int n = r + 1;

    long long total = 1, npoints = 0;
    for (int i = 0; i < n; ++i) { total *= q; npoints = npoints * q + 1; }
    npoints = (total - 1) / (q - 1);
    if (npoints > max_points) throw geometry_error("space too large");

    // points in lexicographic order of normalized coordinates
    coords_to_id_.assign(total, -1);
    std::vector<int> v(n, 0);
    for (long long code = 1; code < total; ++code) {
        long long t = code;
        for (int i = n - 1; i >= 0; --i) { v[i] = (int)(t % q); t /= q; }
        int lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;
        coords_to_id_[code] = (int)points_.size();
        points_.push_back(v);
    }

    // lines, indexed so every line's id order follows its minimal point pair
    const int N = (int)points_.size();
    lines_through_.assign(N, {});
    std::vector<char> cov(N, 0);
    std::vector<int> line_pts;
    for (int i = 0; i < N; ++i) {
        std::fill(cov.begin(), cov.end(), 0);
        for (int lid : lines_through_[i])
            for (int pt : lines_[lid]) cov[pt] = 1;
        for (int j = i + 1; j < N; ++j) {
            if (cov[j]) continue;
            line_pts.clear();
            line_pts.push_back(i);
            const auto& Pi = points_[i];
            const auto& Pj = points_[j];
            std::vector<int> w(n);
            for (int lam = 0; lam < q; ++lam) {
                for (int k = 0; k < n; ++k) w[k] = field_.add(field_.mul(lam, Pi[k]), Pj[k]);
                line_pts.push_back(point_id(w));
            }
            std::sort(line_pts.begin(), line_pts.end());
            int lid = (int)lines_.size();
            lines_.push_back(line_pts);
            for (int pt : line_pts) {
                lines_through_[pt].push_back(lid);
                cov[pt] = 1;
            }
        }
    }

    // hyperplanes share the point enumeration via their dual coordinates
    hyperplanes_.resize(N);
    for (int h = 0; h < N; ++h) {
        hyperplanes_[h].dual_coords = points_[h];
        for (int p = 0; p < N; ++p)
            if (dot(points_[h], points_[p]) == 0) hyperplanes_[h].points.push_back(p);
    }
}

int ProjSpace::point_id(const std::vector<int>& coords) const {
    int id = coords_to_id_[pack(coords)];
    if (id < 0) id = coords_to_id_[pack(normalize(coords))];
    return id;
}

int ProjSpace::hyperplane_id(const std::vector<int>& dual_coords) const {
    return point_id(dual_coords);
}

int ProjSpace::dot(const std::vector<int>& a, const std::vector<int>& b) const {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = field_.add(s, field_.mul(a[i], b[i]));
    return s;
}

int ProjSpace::line_through(int p1, int p2) const {
    if (p1 == p2) throw geometry_error("line_through requires distinct points");
    for (int lid : lines_through_[p1]) {
        const auto& pts = lines_[lid];
        if (std::binary_search(pts.begin(), pts.end(), p2)) return lid;
    }
    throw geometry_error("no line found");  // unreachable
}

bool ProjSpace::point_on_hyperplane(int point_id, int hyp_id) const {
    return dot(points_[point_id], hyperplanes_[hyp_id].dual_coords) == 0;
}

Subspace ProjSpace::span_points(const std::vector<int>& point_ids) const {
    if (point_ids.empty()) throw geometry_error("span of an empty point list");
    std::vector<std::vector<int>> rows;
    rows.reserve(point_ids.size());
    for (int id : point_ids) rows.push_back(points_[id]);
    return Subspace{rref(field_, std::move(rows))};
}

Subspace ProjSpace::span(const Subspace& s1, const Subspace& s2) const {
    auto rows = s1.basis;
    rows.insert(rows.end(), s2.basis.begin(), s2.basis.end());
    return Subspace{rref(field_, std::move(rows))};
}

Subspace ProjSpace::meet(const Subspace& s1, const Subspace& s2) const {
    if (s1.empty() || s2.empty()) return {};
    const int n = r_ + 1;
    // constraints cutting out s2: h with B2 h = 0
    auto C = nullspace(field_, s2.basis, n);
    // coefficient vectors x with (x B1) . h = 0 for all constraints h
    std::vector<std::vector<int>> M;
    for (const auto& h : C) {
        std::vector<int> row(s1.basis.size());
        for (size_t i = 0; i < s1.basis.size(); ++i) row[i] = dot(s1.basis[i], h);
        M.push_back(std::move(row));
    }
    auto X = nullspace(field_, M, (int)s1.basis.size());
    std::vector<std::vector<int>> rows;
    for (const auto& x : X) {
        std::vector<int> vgen(n, 0);
        for (size_t i = 0; i < x.size(); ++i)
            for (int k = 0; k < n; ++k)
                vgen[k] = field_.add(vgen[k], field_.mul(x[i], s1.basis[i][k]));
        rows.push_back(std::move(vgen));
    }
    return Subspace{rref(field_, std::move(rows))};
}

std::vector<int> ProjSpace::subspace_points(const Subspace& s) const {
    std::vector<int> result;
    if (s.empty()) return result;
    const int k = (int)s.basis.size();
    const int q = field_.q();
    const int n = r_ + 1;
    std::vector<int> coeff(k, 0);
    // coefficient vectors with first nonzero entry = 1
    for (int lead = 0; lead < k; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        long long count = 1;
        for (int i = lead + 1; i < k; ++i) count *= q;
        for (long long idx = 0; idx < count; ++idx) {
            long long t = idx;
            for (int i = k - 1; i > lead; --i) { coeff[i] = (int)(t % q); t /= q; }
            std::vector<int> w(n, 0);
            for (int i = lead; i < k; ++i)
                for (int j = 0; j < n; ++j)
                    w[j] = field_.add(w[j], field_.mul(coeff[i], s.basis[i][j]));
            result.push_back(point_id(w));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool ProjSpace::subspace_contains(const Subspace& s, int point_id) const {
    std::vector<int> v = points_[point_id];
    for (const auto& row : s.basis) {
        int pc = -1;
        for (int j = 0; j < (int)row.size(); ++j)
            if (row[j] != 0) { pc = j; break; }
        if (pc < 0) continue;
        if (v[pc] != 0) {
            int c = v[pc];  // row has pivot 1
            for (int j = 0; j < (int)v.size(); ++j) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
        }
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

Subspace ProjSpace::hyperplane_subspace(int hyp_id) const {
    auto rows = nullspace(field_, {hyperplanes_[hyp_id].dual_coords}, r_ + 1);
    return Subspace{rref(field_, std::move(rows))};
}

int ProjSpace::project_point(int center, int target_hyp, int pid) const {
    const auto& h = hyperplanes_[target_hyp].dual_coords;
    const auto& P = points_[center];
    const auto& Q = points_[pid];
    int hP = dot(h, P);
    if (hP == 0) throw geometry_error("projection center lies on the target hyperplane");
    if (pid == center) throw geometry_error("cannot project the center");
    int hQ = dot(h, Q);
    std::vector<int> R(Q.size());
    for (size_t k = 0; k < Q.size(); ++k)
        R[k] = field_.sub(field_.mul(hP, Q[k]), field_.mul(hQ, P[k]));
    return point_id(R);
}

DualSpace dual_space(const std::shared_ptr<const ProjSpace>& space) {
    DualSpace d;
    d.space = std::make_shared<ProjSpace>(space->field(), space->r());
    const int N = (int)space->num_points();
    d.hyp_to_point.resize(N);
    d.point_to_hyp.resize(N);
    for (int h = 0; h < N; ++h)
        d.hyp_to_point[h] = d.space->point_id(space->hyperplane(h).dual_coords);
    for (int p = 0; p < N; ++p)
        d.point_to_hyp[p] = d.space->hyperplane_id(space->point(p));
    return d;
}

}  // namespace tmodq

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "tmodq/pg.hpp"

using namespace tmodq;

namespace {

std::shared_ptr<ProjSpace> pg(int p, int e, int r) {
    return std::make_shared<ProjSpace>(FiniteField(p, e), r);
}

// independent rank oracle over GF(p), prime p only
int rank_mod_p(std::vector<std::vector<int>> m, int p) {
    int rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && rank < (int)m.size(); ++col) {
        int sel = -1;
        for (int i = rank; i < (int)m.size(); ++i)
            if (m[i][col] % p != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[rank], m[sel]);
        for (int i = 0; i < (int)m.size(); ++i) {
            if (i == rank) continue;
            while (m[i][col] % p != 0)
                for (size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("table sizes") {
    auto s35 = pg(5, 1, 3);
    CHECK(s35->num_points() == 156);
    CHECK(s35->num_lines() == 806);
    CHECK(s35->num_hyperplanes() == 156);

    auto s25 = pg(5, 1, 2);
    CHECK(s25->num_points() == 31);
    CHECK(s25->num_lines() == 31);
}

TEST_CASE("counting axioms for small spaces") {
    for (auto [p, e, r] : {std::tuple{2, 1, 3}, {3, 1, 2}, {3, 1, 3}, {5, 1, 3}, {7, 1, 2}, {3, 1, 4}, {2, 2, 2}}) {
        auto sp = pg(p, e, r);
        const int q = sp->q();
        long expected_points = 0;
        for (int i = 0; i <= r; ++i) expected_points = expected_points * q + 1;
        CHECK(sp->num_points() == expected_points);
        long lines_per_point = 0;
        for (int i = 0; i < r; ++i) lines_per_point = lines_per_point * q + 1;
        for (long pt = 0; pt < sp->num_points(); ++pt)
            CHECK((long)sp->lines_through((int)pt).size() == lines_per_point);
        for (long l = 0; l < sp->num_lines(); ++l)
            CHECK((int)sp->line((int)l).size() == q + 1);
        // every pair of points on exactly one line
        long incidences = 0;
        for (long l = 0; l < sp->num_lines(); ++l) incidences += (q + 1L) * q / 2;
        CHECK(incidences == expected_points * (expected_points - 1) / 2);
        long hyp_points = 0;
        for (int i = 0; i < r; ++i) hyp_points = hyp_points * q + 1;
        for (long h = 0; h < sp->num_hyperplanes(); ++h)
            CHECK((long)sp->hyperplane((int)h).points.size() == hyp_points);
    }
}

TEST_CASE("line through two points") {
    auto sp = pg(5, 1, 2);
    int a = sp->point_id({1, 0, 0});
    int b = sp->point_id({0, 1, 0});
    int l = sp->line_through(a, b);
    CHECK((int)sp->line(l).size() == 6);
    for (int pid : sp->line(l)) CHECK(sp->point(pid)[2] == 0);
    CHECK(sp->line_through(b, a) == l);
    CHECK_THROWS_AS(sp->line_through(a, a), geometry_error);

    auto s35 = pg(5, 1, 3);
    CHECK((int)s35->lines_through(0).size() == 31);
}

TEST_CASE("span") {
    auto sp = pg(5, 1, 3);
    int a = sp->point_id({1, 0, 0, 0});
    int b = sp->point_id({0, 1, 0, 0});
    int c = sp->point_id({1, 1, 0, 0});  // on the line ab
    CHECK(sp->span_points({a, b, c}).dim() == 1);
    int d = sp->point_id({0, 0, 1, 0});
    CHECK(sp->span_points({a, b, d}).dim() == 2);
    CHECK_THROWS_AS(sp->span_points({}), geometry_error);

    // random quadruples against the rank oracle
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, (int)sp->num_points() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> ids = {pick(rng), pick(rng), pick(rng), pick(rng)};
        std::vector<std::vector<int>> rows;
        for (int id : ids) rows.push_back(sp->point(id));
        CHECK(sp->span_points(ids).dim() == rank_mod_p(rows, 5) - 1);
    }
}

TEST_CASE("meet and the dimension law") {
    auto sp = pg(5, 1, 3);
    Subspace pi1 = sp->hyperplane_subspace(0);
    Subspace pi2 = sp->hyperplane_subspace(1);
    Subspace l = sp->meet(pi1, pi2);
    CHECK(l.dim() == 1);  // two distinct planes meet in a line
    CHECK((int)sp->subspace_points(l).size() == 6);

    // plane pi and <P,Q> with P off pi: a single point
    int P = -1;
    for (long p = 0; p < sp->num_points(); ++p)
        if (!sp->subspace_contains(pi1, (int)p)) { P = (int)p; break; }
    int Q = sp->subspace_points(pi1)[3];
    Subspace pq = sp->span_points({P, Q});
    Subspace m = sp->meet(pi1, pq);
    CHECK(m.dim() == 0);
    CHECK(sp->point_id(m.basis[0]) == Q);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, (int)sp->num_points() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        Subspace s1 = sp->span_points({pick(rng), pick(rng)});
        Subspace s2 = sp->span_points({pick(rng), pick(rng), pick(rng)});
        Subspace mt = sp->meet(s1, s2);
        Subspace sn = sp->span(s1, s2);
        if (!mt.empty())
            CHECK(s1.dim() + s2.dim() == sn.dim() + mt.dim());
        else
            CHECK(sn.dim() == s1.dim() + s2.dim() + 1);
    }
}

TEST_CASE("subspace points match hyperplane tables") {
    auto sp = pg(3, 1, 3);
    for (int h = 0; h < 5; ++h)
        CHECK(sp->subspace_points(sp->hyperplane_subspace(h)) == sp->hyperplane(h).points);
}

TEST_CASE("duality") {
    auto sp = pg(5, 1, 3);
    DualSpace d = dual_space(sp);
    CHECK(d.space->num_points() == 156);
    // double dual is the identity on ids
    for (int h = 0; h < 156; ++h) CHECK(d.point_to_hyp[d.hyp_to_point[h]] == h);
    // incidence preservation, exhaustive
    for (int h = 0; h < 156; ++h)
        for (int p = 0; p < 156; ++p)
            CHECK(sp->point_on_hyperplane(p, h) ==
                  d.space->point_on_hyperplane(d.hyp_to_point[h], d.point_to_hyp[p]));
}

TEST_CASE("projection from a point") {
    auto sp = pg(5, 1, 3);
    int center = 0;
    int target = -1;
    for (long h = 0; h < sp->num_hyperplanes(); ++h)
        if (!sp->point_on_hyperplane(center, (int)h)) { target = (int)h; break; }
    REQUIRE(target >= 0);
    int through_center = -1;
    for (long h = 0; h < sp->num_hyperplanes(); ++h)
        if (sp->point_on_hyperplane(center, (int)h)) { through_center = (int)h; break; }
    CHECK_THROWS_AS(sp->project_point(center, through_center, 1), geometry_error);

    // fibers: each of the 31 lines through the center maps to one point,
    // covering 5 source points each
    std::map<int, int> fiber_size;
    for (long p = 0; p < sp->num_points(); ++p) {
        if ((int)p == center) continue;
        ++fiber_size[sp->project_point(center, target, (int)p)];
    }
    CHECK((int)fiber_size.size() == 31);
    for (auto& [img, cnt] : fiber_size) {
        CHECK(cnt == 5);
        CHECK(sp->point_on_hyperplane(img, target));
    }
    // points of the target map to themselves
    for (int p : sp->hyperplane(target).points)
        CHECK(sp->project_point(center, target, p) == p);
}

TEST_CASE("space too large") {
    CHECK_THROWS_AS(ProjSpace(FiniteField(5, 1), 3, 100), geometry_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "tmodq/arc128.hpp"
#include "tmodq/constructions.hpp"

using namespace tmodq;

#ifndef TMODQ_DATA_DIR
#error "TMODQ_DATA_DIR must point at the data directory"
#endif

namespace {

std::shared_ptr<ProjSpace> pg35() {
    static auto sp = std::make_shared<ProjSpace>(FiniteField(5, 1), 3);
    return sp;
}

const Arc& arc128() {
    static Arc arc = construct_arc128(pg35(), 12345);
    return arc;
}

}  // namespace

TEST_CASE("the assembled 128-point arc is strong, non-lifted, with known spectrum") {
    const Arc& arc = arc128();
    CHECK(arc.cardinality() == 128);
    ModResult m = classify_mod(arc);
    CHECK(m.modular);
    CHECK(m.t == 3);
    CHECK(is_strong(arc, 3));
    CHECK(detect_lifting_points(arc).empty());

    Spectrum s = spectrum(arc);
    CHECK(s.a(18) == 20);
    CHECK(s.a(23) == 80);
    CHECK(s.a(28) == 16);
    CHECK(s.a(33) == 40);
    CHECK(s.lambda(0) == 80);
    CHECK(s.lambda(1) == 40);
    CHECK(s.lambda(2) == 20);
    CHECK(s.lambda(3) == 16);
}

TEST_CASE("projection of the 128-arc from a 0-point") {
    const Arc& arc = arc128();
    auto zeros = extract_level_set(arc, 0);
    REQUIRE(zeros.size() == 80);
    ProjectionProfile prof = project_arc(arc, zeros[0]);

    CHECK(prof.induced.cardinality() == 128);
    // fiber types: 3 points of type alpha, 4 of beta, and 6/12/6 others
    LineType alpha = {3, 3, 1, 1, 0, 0};
    LineType beta = {3, 2, 2, 1, 0, 0};
    CHECK(prof.type_histogram.at(alpha) == 3);
    CHECK(prof.type_histogram.at(beta) == 4);
    long eights = 0, threes = 0;
    for (const auto& [pt, type] : prof.point_types) {
        long s = 0;
        for (long v : type) s += v;
        CHECK(s == prof.induced.mult[pt]);
        if (s == 8) ++eights;
        if (s == 3) ++threes;
    }
    CHECK(eights == 7);
    CHECK(threes == 24);

    auto [ok, msg] = verify_projection_structure(prof);
    CHECK(ok);
    CHECK(msg == "quadrangle and diagonal points verified");
}

TEST_CASE("projection structure check rejects other arcs") {
    auto sp = pg35();
    Arc f1 = quadric_arc(standard_quadric(sp, QuadricKind::Elliptic), 1);
    auto zeros = extract_level_set(f1, 0);
    REQUIRE(!zeros.empty());
    auto [ok, msg] = verify_projection_structure(project_arc(f1, zeros[0]));
    CHECK(!ok);
    CHECK(!msg.empty());

    // corrupted profile: drop one alpha point
    ProjectionProfile prof = project_arc(arc128(), extract_level_set(arc128(), 0)[0]);
    LineType alpha = {3, 3, 1, 1, 0, 0};
    for (auto& [pt, type] : prof.point_types) {
        if (type == alpha) {
            type = {3, 3, 2, 0, 0, 0};
            break;
        }
    }
    prof.type_histogram[alpha] -= 1;
    CHECK(!verify_projection_structure(prof).first);
}

TEST_CASE("level sets") {
    const Arc& arc = arc128();
    CHECK(extract_level_set(arc, 2).size() == 20);
    CHECK(extract_level_set(arc, 3).size() == 16);
    CHECK(extract_level_set(arc, 7).empty());
}

TEST_CASE("cap_check") {
    auto sp = pg35();

    // an elliptic quadric is a 26-cap with all planes meeting in 1 or 6
    auto ovoid = quadric_points(standard_quadric(sp, QuadricKind::Elliptic));
    CapResult res = cap_check(*sp, ovoid);
    CHECK(res.ok);
    CHECK(res.plane_spectrum.at(1) == 26);
    CHECK(res.plane_spectrum.at(6) == 130);

    // a line is not a cap
    CapResult bad = cap_check(*sp, sp->line(0));
    CHECK(!bad.ok);
    CHECK(bad.witness_line == 0);
}

TEST_CASE("cap search finds a 20-cap with the right spectrum") {
    auto sp = pg35();
    auto cap = search_cap20(*sp, 999, 100000);
    REQUIRE(cap.size() == 20);
    CapResult res = cap_check(*sp, cap);
    CHECK(res.ok);
    CHECK(res.plane_spectrum.at(6) == 40);
    CHECK(res.plane_spectrum.at(4) == 80);
    CHECK(res.plane_spectrum.at(3) == 20);
    CHECK(res.plane_spectrum.at(0) == 16);

    // deterministic for a fixed seed
    CHECK(search_cap20(*sp, 999, 100000) == cap);

    CHECK_THROWS_AS(search_cap20(*sp, 999, 0), search_timeout);
}

TEST_CASE("invariant partition refines to classes 40/80/20/16 quickly") {
    auto sp = pg35();
    auto cap = search_cap20(*sp, 999, 100000);
    int rounds = -1;
    auto classes = partition_by_invariants(*sp, cap, &rounds);
    CHECK(classes[0].size() == 40);
    CHECK(classes[1].size() == 80);
    CHECK(classes[2].size() == 20);
    CHECK(classes[3].size() == 16);
    CHECK(rounds <= 3);

    // the 20-class is the cap itself
    auto sorted_cap = cap;
    std::sort(sorted_cap.begin(), sorted_cap.end());
    CHECK(classes[2] == sorted_cap);

    // classes partition the point set
    std::set<int> all;
    for (const auto& c : classes) all.insert(c.begin(), c.end());
    CHECK((long)all.size() == sp->num_points());
}

TEST_CASE("orbit matrix and weight solving") {
    OrbitMatrix A = read_orbit_matrix(std::string(TMODQ_DATA_DIR) + "/orbit_matrix.txt");
    REQUIRE(A.size() == 4);
    for (const auto& row : A) REQUIRE(row.size() == 6);
    for (int j = 0; j < 6; ++j) {
        int col = 0;
        for (int i = 0; i < 4; ++i) col += A[i][j];
        CHECK(col == 6);  // six planes through each line class rep
    }

    auto w3 = solve_orbit_weights(A, 3, 5, 3);
    REQUIRE(w3.size() == 2);
    CHECK(w3[0] == WeightVector{1, 0, 2, 3});
    CHECK(w3[1] == WeightVector{3, 3, 3, 3});

    auto w4 = solve_orbit_weights(A, 4, 5, 4);
    auto has = [&](WeightVector w) { return std::find(w4.begin(), w4.end(), w) != w4.end(); };
    CHECK(has({0, 3, 2, 4}));
    CHECK(has({1, 2, 0, 4}));
    CHECK(has({2, 1, 3, 4}));
    CHECK(has({3, 0, 1, 4}));

    auto w0 = solve_orbit_weights(A, 0, 5, 0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0] == WeightVector{0, 0, 0, 0});
}

TEST_CASE("alternative weight vectors assemble to the known cardinalities") {
    auto sp = pg35();
    auto cap = search_cap20(*sp, 999, 100000);
    auto classes = partition_by_invariants(*sp, cap);

    Arc full = assemble_weighted_arc(sp, classes, {3, 3, 3, 3});
    CHECK(full.cardinality() == 468);
    CHECK(classify_mod(full).t == 3);

    const std::pair<WeightVector, long> cases[] = {
        {{0, 3, 2, 4}, 344}, {{1, 2, 0, 4}, 264}, {{2, 1, 3, 4}, 284}, {{3, 0, 1, 4}, 204}};
    for (const auto& [w, n] : cases) {
        Arc arc = assemble_weighted_arc(sp, classes, w);
        CHECK(arc.cardinality() == n);
        ModResult m = classify_mod(arc);
        CHECK(m.modular);
        CHECK(m.t == 4);
    }
}

TEST_CASE("0-points of the 128-arc against the plane types") {
    const Arc& arc = arc128();
    Spectrum s = spectrum(arc);
    auto zeros = extract_level_set(arc, 0);
    std::vector<char> is_zero(arc.space->num_points(), 0);
    for (int p : zeros) is_zero[p] = 1;

    // zeros per plane by plane multiplicity: 16/18/15/12 for 18/23/28/33
    std::map<long, std::set<long>> zcounts;
    for (long h = 0; h < arc.space->num_hyperplanes(); ++h) {
        const auto& hp = arc.space->hyperplane((int)h);
        long k = 0, z = 0;
        for (int p : hp.points) {
            k += arc.mult[p];
            z += is_zero[p];
        }
        zcounts[k].insert(z);
    }
    CHECK(zcounts[18] == std::set<long>{16});
    CHECK(zcounts[23] == std::set<long>{18});
    CHECK(zcounts[28] == std::set<long>{15});
    CHECK(zcounts[33] == std::set<long>{12});

    // each 0-point lies on six 33-planes, three 28-planes, eighteen
    // 23-planes and four 18-planes
    for (int p : zeros) {
        std::map<long, int> through;
        for (long h = 0; h < arc.space->num_hyperplanes(); ++h) {
            if (!arc.space->point_on_hyperplane(p, (int)h)) continue;
            const auto& hp = arc.space->hyperplane((int)h);
            long k = 0;
            for (int x : hp.points) k += arc.mult[x];
            ++through[k];
        }
        CHECK(through[33] == 6);
        CHECK(through[28] == 3);
        CHECK(through[23] == 18);
        CHECK(through[18] == 4);
    }
}

TEST_CASE("cap file round trip") {
    auto sp = pg35();
    auto cap = search_cap20(*sp, 999, 100000);
    std::string path = "cap20_roundtrip.txt";
    write_cap_file(path, *sp, cap);
    auto back = read_cap_file(path, *sp);
    auto sorted_cap = cap;
    std::sort(sorted_cap.begin(), sorted_cap.end());
    std::sort(back.begin(), back.end());
    CHECK(back == sorted_cap);
    std::remove(path.c_str());
}

#include "tmodq/arc128.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace tmodq {

namespace {

const std::map<long, long> kCapSpectrum = {{6, 40}, {4, 80}, {3, 20}, {0, 16}};

}  // namespace

std::vector<int> search_cap20(const ProjSpace& space, unsigned seed, long restarts) {
    const int N = (int)space.num_points();
    std::mt19937 rng(seed);
    std::vector<int> order(N);
    std::vector<int> line_count(space.num_lines());
    for (int i = 0; i < N; ++i) order[i] = i;

    for (long attempt = 0; attempt < restarts; ++attempt) {
        std::shuffle(order.begin(), order.end(), rng);
        std::fill(line_count.begin(), line_count.end(), 0);
        std::vector<int> cap;
        for (int p : order) {
            bool addable = true;
            for (int lid : space.lines_through(p))
                if (line_count[lid] >= 2) { addable = false; break; }
            if (!addable) continue;
            cap.push_back(p);
            for (int lid : space.lines_through(p)) ++line_count[lid];
        }
        // greedy always ends on a complete (maximal) cap
        if (cap.size() != 20) continue;
        CapResult res = cap_check(space, cap);
        if (res.ok && res.plane_spectrum == kCapSpectrum) {
            std::sort(cap.begin(), cap.end());
            return cap;
        }
    }
    throw search_timeout("cap search budget exhausted after " + std::to_string(restarts) + " restarts");
}

std::array<std::vector<int>, 4> partition_by_invariants(const ProjSpace& space, const std::vector<int>& cap,
                                                        int* rounds_out) {
    const int N = (int)space.num_points();
    std::vector<int> cls(N, 1);
    for (int p : cap) cls[p] = 0;
    int ncls = 2;

    int rounds = 0;
    for (int round = 0; round < 10; ++round) {
        ++rounds;
        // line signature: multiset of its point classes
        std::map<std::vector<int>, int> line_sig_id;
        std::vector<int> line_sig(space.num_lines());
        for (long l = 0; l < space.num_lines(); ++l) {
            std::vector<int> sig;
            for (int p : space.line((int)l)) sig.push_back(cls[p]);
            std::sort(sig.begin(), sig.end());
            auto [it, _] = line_sig_id.try_emplace(sig, (int)line_sig_id.size());
            line_sig[l] = it->second;
        }
        // point signature: own class plus the multiset of line signatures through it
        std::map<std::pair<int, std::vector<int>>, int> point_sig_id;
        std::vector<int> next(N);
        for (int p = 0; p < N; ++p) {
            std::vector<int> sig;
            for (int lid : space.lines_through(p)) sig.push_back(line_sig[lid]);
            std::sort(sig.begin(), sig.end());
            auto [it, _] = point_sig_id.try_emplace({cls[p], std::move(sig)}, (int)point_sig_id.size());
            next[p] = it->second;
        }
        int nnext = (int)point_sig_id.size();
        bool stable = (nnext == ncls);
        cls = std::move(next);
        ncls = nnext;
        if (stable) break;
    }
    if (rounds_out) *rounds_out = rounds;

    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < N; ++p) groups[cls[p]].push_back(p);
    if (groups.size() != 4)
        throw partition_mismatch("invariant refinement produced " + std::to_string(groups.size()) +
                                 " classes instead of 4");
    std::array<std::vector<int>, 4> out;
    const std::array<size_t, 4> sizes = {40, 80, 20, 16};
    for (auto& [_, pts] : groups) {
        bool placed = false;
        for (int i = 0; i < 4 && !placed; ++i)
            if (pts.size() == sizes[i] && out[i].empty()) {
                out[i] = pts;
                placed = true;
            }
        if (!placed)
            throw partition_mismatch("class of size " + std::to_string(pts.size()) +
                                     " does not match the expected sizes 40/80/20/16");
    }
    return out;
}

OrbitMatrix read_orbit_matrix(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    OrbitMatrix A;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> row;
        int x;
        while (ls >> x) row.push_back(x);
        if (!row.empty()) A.push_back(std::move(row));
    }
    if (A.size() != 4 || std::any_of(A.begin(), A.end(), [](const auto& r) { return r.size() != 6; }))
        throw std::runtime_error("orbit matrix must be 4 x 6");
    return A;
}

std::vector<WeightVector> solve_orbit_weights(const OrbitMatrix& A, int t, int q, int max_w) {
    const int cols = (int)A[0].size();
    const int hi = std::min(max_w, q - 1);
    std::vector<WeightVector> sols;
    WeightVector w{};
    for (w[0] = 0; w[0] <= hi; ++w[0])
        for (w[1] = 0; w[1] <= hi; ++w[1])
            for (w[2] = 0; w[2] <= hi; ++w[2])
                for (w[3] = 0; w[3] <= hi; ++w[3]) {
                    bool ok = true;
                    for (int j = 0; j < cols && ok; ++j) {
                        int s = 0;
                        for (int i = 0; i < 4; ++i) s += w[i] * A[i][j];
                        ok = (s % q) == (t % q);
                    }
                    if (ok) sols.push_back(w);
                }
    return sols;
}

Arc assemble_weighted_arc(const std::shared_ptr<const ProjSpace>& space,
                          const std::array<std::vector<int>, 4>& partition, const WeightVector& w) {
    Arc arc(space);
    for (int i = 0; i < 4; ++i)
        for (int p : partition[i]) arc.mult[p] = w[i];
    return arc;
}

Arc construct_arc128(const std::shared_ptr<const ProjSpace>& space, unsigned seed, long restarts) {
    auto cap = search_cap20(*space, seed, restarts);
    auto partition = partition_by_invariants(*space, cap);
    return assemble_weighted_arc(space, partition, {1, 0, 2, 3});
}

void write_cap_file(const std::string& path, const ProjSpace& space, const std::vector<int>& cap) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    for (int p : cap) {
        for (int c : space.point(p)) os << c << ' ';
        os << "\n";
    }
}

std::vector<int> read_cap_file(const std::string& path, const ProjSpace& space) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::vector<int> cap;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> coords;
        int x;
        while (ls >> x) coords.push_back(x);
        if (coords.empty()) continue;
        if ((int)coords.size() != space.r() + 1) throw std::runtime_error("bad cap record: " + line);
        cap.push_back(space.point_id(coords));
    }
    std::sort(cap.begin(), cap.end());
    return cap;
}

}  // namespace tmodq

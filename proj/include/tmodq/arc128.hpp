#ifndef TMODQ_ARC128_HPP
#define TMODQ_ARC128_HPP

#include <array>
#include <optional>

#include "tmodq/analysis.hpp"

namespace tmodq {

struct search_timeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct partition_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Randomized greedy search for a complete 20-cap of PG(3,5) with plane
/// spectrum (a6,a4,a3,a0) = (40,80,20,16). Deterministic for a fixed
/// seed; `restarts` bounds the number of greedy attempts.
std::vector<int> search_cap20(const ProjSpace& space, unsigned seed, long restarts);

/// Partitions the points of PG(3,5) into the four classes of sizes
/// 40/80/20/16 induced by a valid 20-cap, via iterative refinement of
/// line-type signatures. Classes are returned in size order 40,80,20,16;
/// the 20-class is the cap itself.
std::array<std::vector<int>, 4> partition_by_invariants(const ProjSpace& space, const std::vector<int>& cap,
                                                        int* rounds_out = nullptr);

using OrbitMatrix = std::vector<std::vector<int>>;  // 4 x 6
using WeightVector = std::array<int, 4>;

OrbitMatrix read_orbit_matrix(const std::string& path);

/// All w with w*A ≡ t*(1,...,1) (mod q) and 0 <= w_i <= max_w, in
/// lexicographic order. Brute force over q^4 vectors.
std::vector<WeightVector> solve_orbit_weights(const OrbitMatrix& A, int t, int q, int max_w);

/// Arc assigning w_i to every point of the i-th class.
Arc assemble_weighted_arc(const std::shared_ptr<const ProjSpace>& space,
                          const std::array<std::vector<int>, 4>& partition, const WeightVector& w);

/// Full pipeline: cap search, partition, weights (1,0,2,3).
Arc construct_arc128(const std::shared_ptr<const ProjSpace>& space, unsigned seed, long restarts = 100000);

void write_cap_file(const std::string& path, const ProjSpace& space, const std::vector<int>& cap);
std::vector<int> read_cap_file(const std::string& path, const ProjSpace& space);

}  // namespace tmodq

#endif

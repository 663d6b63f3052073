#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fsurg/farey.hpp"
#include "fsurg/parallel.hpp"
#include "fsurg/rationals.hpp"

namespace fsurg {

// Batch verification kernels. Every sweep runs either serially (the
// reference) or under OpenMP; both modes produce identical reports, and the
// bench target compares their wall time.

struct SweepReport {
    std::string name;
    Int items = 0;
    Int checks = 0;
    std::vector<std::string> failures;  // ordered by item, deterministic
    bool ok() const noexcept { return failures.empty(); }
};

// The closed ball of the dual tree around base, as (triangle, BFS depth),
// in deterministic BFS order.
std::vector<std::pair<FareyTriangle, Int>> triangles_within(const FareyTriangle& base,
                                                            Int radius);

// All coprime p/q with p >= 0, q >= 1 and 1 <= S(p,q) <= max_sum.
std::vector<SurgeryCoefficient> slopes_with_sum_at_most(Int max_sum);

// Deterministic random triangle pairs at dual-tree distance <= max_separation
// (random walks from the base triangle).
std::vector<std::pair<FareyTriangle, FareyTriangle>>
random_triangle_pairs(Int count, Int max_separation, std::uint64_t seed);

// geodesic_distance vs the BFS oracle over the whole ball of given radius.
SweepReport oracle_agreement_sweep(Int radius, ExecMode mode);

// geodesic_distance vs pairwise bfs_distance (plus symmetry) on random pairs.
SweepReport random_pair_sweep(Int pairs, Int max_separation, std::uint64_t seed,
                              ExecMode mode);

// flip_path invariants on random pairs: geodesic length, adjacency, no repeats.
SweepReport flip_path_sweep(Int pairs, Int max_separation, std::uint64_t seed,
                            ExecMode mode);

// Per-slope distance identities, formula/pipeline agreement, and the
// exceptional omega values, over all slopes with S(p,q) <= max_sum.
SweepReport slope_identity_sweep(Int max_sum, ExecMode mode);

// Continued fraction round-trip, tail-convention independence, and the
// S(p,q) = [p/q] + S(rem, q) recursion on random coprime pairs.
SweepReport cf_property_sweep(Int samples, Int max_q, std::uint64_t seed,
                              ExecMode mode);

}  // namespace fsurg

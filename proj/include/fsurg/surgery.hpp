#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsurg/assembly.hpp"
#include "fsurg/farey.hpp"
#include "fsurg/rationals.hpp"

namespace fsurg {

// Figure-eight surgeries are hyperbolic except at the five integer slopes
// 0..4 (infinity never reaches this module).
enum class Hyperbolicity { hyperbolic, exceptional };

// Raised when a checked distance identity or the formula/pipeline agreement
// fails for a slope.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct DistanceIdentities {
    Int d_m_0 = 0;  // d(triangle_m, base 0)   == S(p,q) - 1
    Int d_v_0 = 0;  // d(triangle_v, base 0)   == S(p,q) - 2
    Int d_v_z = 0;  // d(triangle_v, base z)   == d_v_0 - z
};

// Everything computed for one surgery slope. Triangle and distance fields
// are empty for exceptional slopes, where the construction does not run.
struct OmegaReport {
    SurgeryCoefficient slope;
    Int a_value = 0;
    Int omega = 0;
    Hyperbolicity hyperbolicity = Hyperbolicity::hyperbolic;
    Int z = 0;
    std::optional<FareyTriangle> triangle_m;
    std::optional<FareyTriangle> triangle_v;
    std::optional<Int> d_m_0;
    std::optional<Int> d_v_0;
    std::optional<Int> d_v_z;
    std::optional<Int> pipeline_vertices;
    Int integer_correction = 0;
    std::optional<Int> complexity_claim;  // = omega, present iff omega <= 12
    std::vector<CostStep> cost_breakdown;
};

Hyperbolicity classify(const SurgeryCoefficient& x) noexcept;

// 6 at slope 4, 7 at other integers, 8 otherwise.
Int a_value(const SurgeryCoefficient& x) noexcept;

// omega(p/q) = a(p/q) + max([p/q] - 3, 0) + S(rem(p,q), q).
Int omega(const SurgeryCoefficient& x);

// Re-derives omega by building the spine: knot exterior block at level
// z = min([p/q], 3) assembled with the solid torus block for slope p/q.
// Checks the distance identities and the formula agreement along the way.
OmegaReport pipeline(const SurgeryCoefficient& x);

// The three checked distances for a hyperbolic slope; throws
// IdentityViolation when any of them disagrees with the expected values.
DistanceIdentities distance_identities(const SurgeryCoefficient& x);

// pipeline() for hyperbolic slopes, formula-only report for exceptional ones.
OmegaReport analyze(const SurgeryCoefficient& x);

// Proof log for the enumeration cut: every pruned frontier candidate is
// evaluated and must come out above the bound.
struct EnumerationAudit {
    Int bound = 0;
    Int frontier_checks = 0;
    Int min_frontier_omega = 0;
    bool proven = false;
    std::vector<std::string> lines;
};

// All coprime slopes p >= 0, q >= 1 with omega <= n, sorted by (omega, value).
// Candidate generation walks canonical continued fractions with bounded
// quotient sum; hyperbolic reports fan out in parallel.
std::vector<OmegaReport> enumerate_omega_le(Int n, EnumerationAudit* audit = nullptr);

}  // namespace fsurg

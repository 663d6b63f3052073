#include "fsurg/surgery.hpp"

#include <algorithm>
#include <utility>

#include "fsurg/parallel.hpp"

namespace fsurg {

Hyperbolicity classify(const SurgeryCoefficient& x) noexcept {
    return (x.q() == 1 && x.p() <= 4) ? Hyperbolicity::exceptional
                                      : Hyperbolicity::hyperbolic;
}

Int a_value(const SurgeryCoefficient& x) noexcept {
    if (x.q() == 1)
        return x.p() == 4 ? 6 : 7;
    return 8;
}

Int omega(const SurgeryCoefficient& x) {
    Int ip = x.integer_part();
    SurgeryCoefficient frac = SurgeryCoefficient::normalize(x.remainder(), x.q());
    return a_value(x) + std::max<Int>(ip - 3, 0) + s_sum(frac);
}

namespace {

[[noreturn]] void identity_fail(const SurgeryCoefficient& x, const std::string& what,
                                Int got, Int expected) {
    throw IdentityViolation("slope " + x.str() + ": " + what + " = " +
                            std::to_string(got) + ", expected " +
                            std::to_string(expected));
}

}  // namespace

OmegaReport pipeline(const SurgeryCoefficient& x) {
    if (classify(x) == Hyperbolicity::exceptional)
        throw std::domain_error("pipeline not applicable to exceptional slope " +
                                x.str() + "; omega given directly");

    OmegaReport r;
    r.slope = x;
    r.a_value = a_value(x);
    r.omega = omega(x);
    r.hyperbolicity = Hyperbolicity::hyperbolic;
    r.z = std::min<Int>(x.integer_part(), 3);

    Slope s = Slope::of(x);
    FareyTriangle base0 = base_triangle(0);
    FareyTriangle tm = closest_triangle_with_vertex(s, base0);
    FareyTriangle tv = neighbor(tm, s);

    Block knot = knot_exterior_block(r.z);
    Block torus = solid_torus_block(s, base0);
    if (!(torus.boundaries[0].theta == tv))
        throw std::logic_error("solid torus theta class disagrees with neighbor(triangle_m)");
    AssemblyResult glued = assemble(knot, "cusp", torus, "boundary");

    r.triangle_m = tm;
    r.triangle_v = tv;
    r.d_m_0 = geodesic_distance(tm, base0);
    r.d_v_0 = geodesic_distance(tv, base0);
    r.d_v_z = geodesic_distance(tv, base_triangle(r.z));
    r.pipeline_vertices = glued.block.interior_vertices;
    r.integer_correction = x.is_integer() ? 1 : 0;
    r.cost_breakdown = std::move(glued.cost_breakdown);
    if (r.omega <= 12)
        r.complexity_claim = r.omega;

    // Checked, never assumed: the distance identities behind the formula and
    // the agreement of the assembled vertex count with omega.
    Int s_pq = s_sum(x);
    if (*r.d_m_0 != s_pq - 1)
        identity_fail(x, "d(triangle_m, base 0)", *r.d_m_0, s_pq - 1);
    if (*r.d_v_0 != s_pq - 2)
        identity_fail(x, "d(triangle_v, base 0)", *r.d_v_0, s_pq - 2);
    if (*r.d_v_z != *r.d_v_0 - r.z)
        identity_fail(x, "d(triangle_v, base z)", *r.d_v_z, *r.d_v_0 - r.z);
    if (*r.pipeline_vertices != 10 + *r.d_v_z)
        identity_fail(x, "assembled vertex count", *r.pipeline_vertices, 10 + *r.d_v_z);
    if (*r.pipeline_vertices - r.integer_correction != r.omega)
        identity_fail(x, "pipeline vertices minus correction",
                      *r.pipeline_vertices - r.integer_correction, r.omega);

    return r;
}

DistanceIdentities distance_identities(const SurgeryCoefficient& x) {
    OmegaReport r = pipeline(x);
    return DistanceIdentities{*r.d_m_0, *r.d_v_0, *r.d_v_z};
}

OmegaReport analyze(const SurgeryCoefficient& x) {
    if (classify(x) == Hyperbolicity::hyperbolic)
        return pipeline(x);
    OmegaReport r;
    r.slope = x;
    r.a_value = a_value(x);
    r.omega = omega(x);
    r.hyperbolicity = Hyperbolicity::exceptional;
    r.z = std::min<Int>(x.integer_part(), 3);
    r.integer_correction = 0;
    r.complexity_claim = r.omega;  // the five exceptional values are census facts
    return r;
}

namespace {

struct FrontierLog {
    EnumerationAudit* audit;
    Int bound;

    void check(const SurgeryCoefficient& x, const std::string& label) {
        Int w = omega(x);
        if (audit != nullptr) {
            ++audit->frontier_checks;
            if (audit->min_frontier_omega == 0 || w < audit->min_frontier_omega)
                audit->min_frontier_omega = w;
            if (audit->lines.size() < 200)
                audit->lines.push_back(label + ": omega(" + x.str() + ") = " +
                                       std::to_string(w) + " > " + std::to_string(bound));
            else if (audit->lines.size() == 200)
                audit->lines.push_back("... (further frontier checks elided)");
        }
        if (w <= bound)
            throw std::logic_error("enumeration cut disproved: omega(" + x.str() +
                                   ") = " + std::to_string(w) + " <= " +
                                   std::to_string(bound));
    }
};

// Depth-first walk over canonical fractional tails [0; a1, ..., am] with
// quotient sum <= budget. Emits each canonical tail (last quotient >= 2) and
// proves the cut at every pruned child.
void walk_fraction_tails(std::vector<Int>& prefix, Int used, Int budget,
                         FrontierLog& frontier,
                         std::vector<SurgeryCoefficient>& fractions) {
    for (Int a = 1; a + used <= budget; ++a) {
        prefix.push_back(a);
        if (a >= 2)
            fractions.push_back(ContinuedFraction::evaluate_quotients(prefix));
        walk_fraction_tails(prefix, used + a, budget, frontier, fractions);
        prefix.pop_back();
    }
    // First excluded quotient on this branch. When it folds to an integer
    // (only [0; 1] -> 1, already enumerated as an integer slope), the
    // smallest genuine fraction past the cut is checked instead.
    Int excluded = budget - used + 1;
    prefix.push_back(excluded);
    SurgeryCoefficient v = ContinuedFraction::evaluate_quotients(prefix);
    prefix.pop_back();
    if (!v.is_integer()) {
        frontier.check(v, "pruned tail");
    } else {
        prefix.push_back(excluded + 1);
        frontier.check(ContinuedFraction::evaluate_quotients(prefix),
                       "pruned tail (integer-valued branch skipped)");
        prefix.pop_back();
    }
}

}  // namespace

std::vector<OmegaReport> enumerate_omega_le(Int n, EnumerationAudit* audit) {
    if (n < 7)
        throw std::invalid_argument("enumeration bound must be >= 7 (the minimum of omega)");
    if (n > 24)
        throw std::invalid_argument("enumeration bound above 24 is impractical "
                                    "(candidate count grows as 2^(n-8))");
    if (audit != nullptr) {
        *audit = EnumerationAudit{};
        audit->bound = n;
    }
    FrontierLog frontier{audit, n};

    std::vector<SurgeryCoefficient> candidates;

    // Integer slopes: 0..4 always (omega = 7 <= n), then p while p + 4 <= n.
    for (Int p = 0; p <= 4; ++p)
        candidates.push_back(SurgeryCoefficient::normalize(p, 1));
    for (Int p = 5; p + 4 <= n; ++p)
        candidates.push_back(SurgeryCoefficient::normalize(p, 1));
    frontier.check(SurgeryCoefficient::normalize(std::max<Int>(5, n - 3), 1),
                   "first excluded integer");

    // Non-integer slopes k + r/q: omega = 8 + max(k-3, 0) + S(r, q), so the
    // fractional part needs S(r, q) <= n - 8 and the integer part is capped
    // per fraction.
    Int budget = n - 8;
    std::vector<SurgeryCoefficient> fractions;
    if (budget >= 1) {
        std::vector<Int> prefix{0};
        walk_fraction_tails(prefix, 0, budget, frontier, fractions);
    } else {
        // No fraction fits: the cheapest one is 1/2 with omega = 10 > n.
        frontier.check(SurgeryCoefficient::normalize(1, 2), "cheapest fraction");
    }
    for (const SurgeryCoefficient& f : fractions) {
        Int s_f = s_sum(f);
        Int k_max = 3 + (budget - s_f);
        for (Int k = 0; k <= k_max; ++k)
            candidates.push_back(
                SurgeryCoefficient::normalize(k * f.q() + f.p(), f.q()));
        frontier.check(
            SurgeryCoefficient::normalize((k_max + 1) * f.q() + f.p(), f.q()),
            "first excluded integer part of " + f.str());
    }

    // Every candidate is analyzed (the pipeline re-checks its identities per
    // slope); work fans out since slopes are independent.
    std::vector<OmegaReport> reports(candidates.size());
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(effective_thread_count())
#endif
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        try {
            reports[i] = analyze(candidates[i]);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (failure == nullptr)
                failure = std::current_exception();
        }
    }
    if (failure != nullptr)
        std::rethrow_exception(failure);

    for (const OmegaReport& r : reports)
        if (r.omega > n)
            throw std::logic_error("enumeration produced omega(" + r.slope.str() +
                                   ") = " + std::to_string(r.omega) + " > " +
                                   std::to_string(n));

    std::sort(reports.begin(), reports.end(),
              [](const OmegaReport& a, const OmegaReport& b) {
                  if (a.omega != b.omega)
                      return a.omega < b.omega;
                  return SurgeryCoefficient::compare(a.slope, b.slope) < 0;
              });

    if (audit != nullptr)
        audit->proven = true;
    return reports;
}

}  // namespace fsurg

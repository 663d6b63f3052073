#include "fsurg/render.hpp"

#include <sstream>

namespace fsurg {

namespace {

const char* hyperbolicity_name(Hyperbolicity h) {
    return h == Hyperbolicity::hyperbolic ? "hyperbolic" : "exceptional";
}

}  // namespace

std::string omega_line(const OmegaReport& r) {
    std::string line = "omega(" + r.slope.str() + ") = " + std::to_string(r.omega);
    if (r.hyperbolicity == Hyperbolicity::exceptional)
        return line + "; complexity = " + std::to_string(r.omega);
    if (r.complexity_claim.has_value())
        return line + "; complexity = " + std::to_string(*r.complexity_claim) +
               " (omega <= 12)";
    return line + "; upper bound only (omega > 12)";
}

std::string report_explain_text(const OmegaReport& r) {
    std::ostringstream out;
    out << omega_line(r) << "\n";
    out << "  hyperbolicity:      " << hyperbolicity_name(r.hyperbolicity) << "\n";
    out << "  a_value:            " << r.a_value << "\n";
    out << "  continued fraction: " << ContinuedFraction::expand(r.slope).str()
        << "  (S = " << s_sum(r.slope) << ")\n";
    if (r.hyperbolicity == Hyperbolicity::exceptional) {
        out << "  spine construction skipped: complexity 7 is a census value\n";
        return out.str();
    }
    out << "  z:                  " << r.z << "\n";
    out << "  triangle_m:         " << r.triangle_m->str() << "\n";
    out << "  triangle_v:         " << r.triangle_v->str() << "\n";
    out << "  d(m, base 0):       " << *r.d_m_0 << "\n";
    out << "  d(v, base 0):       " << *r.d_v_0 << "\n";
    out << "  d(v, base z):       " << *r.d_v_z << "\n";
    out << "  assembly:\n";
    for (const CostStep& step : r.cost_breakdown)
        out << "    " << step.description << ": " << step.vertices << "\n";
    out << "  pipeline vertices:  " << *r.pipeline_vertices << "\n";
    out << "  integer correction: " << r.integer_correction << "\n";
    return out.str();
}

nlohmann::json report_to_json(const OmegaReport& r, bool include_breakdown) {
    nlohmann::json j{
        {"slope", r.slope.str()},
        {"p", r.slope.p()},
        {"q", r.slope.q()},
        {"a_value", r.a_value},
        {"omega", r.omega},
        {"hyperbolicity", hyperbolicity_name(r.hyperbolicity)},
        {"z", r.z},
        {"integer_correction", r.integer_correction},
    };
    if (r.triangle_m.has_value())
        j["triangle_m"] = r.triangle_m->str();
    if (r.triangle_v.has_value())
        j["triangle_v"] = r.triangle_v->str();
    if (r.d_m_0.has_value())
        j["d_m_0"] = *r.d_m_0;
    if (r.d_v_0.has_value())
        j["d_v_0"] = *r.d_v_0;
    if (r.d_v_z.has_value())
        j["d_v_z"] = *r.d_v_z;
    if (r.pipeline_vertices.has_value())
        j["pipeline_vertices"] = *r.pipeline_vertices;
    if (r.complexity_claim.has_value())
        j["complexity_claim"] = *r.complexity_claim;
    if (include_breakdown) {
        nlohmann::json steps = nlohmann::json::array();
        for (const CostStep& step : r.cost_breakdown)
            steps.push_back({{"step", step.description}, {"vertices", step.vertices}});
        j["cost_breakdown"] = std::move(steps);
    }
    return j;
}

std::string report_csv_header() {
    return "p,q,omega,hyperbolic,z,d_m_0,d_v_0,d_v_z,pipeline_vertices,complexity_claim";
}

std::string report_csv_row(const OmegaReport& r) {
    auto opt = [](const std::optional<Int>& v) {
        return v.has_value() ? std::to_string(*v) : std::string();
    };
    std::ostringstream out;
    out << r.slope.p() << ',' << r.slope.q() << ',' << r.omega << ','
        << (r.hyperbolicity == Hyperbolicity::hyperbolic ? "true" : "false") << ','
        << r.z << ',' << opt(r.d_m_0) << ',' << opt(r.d_v_0) << ',' << opt(r.d_v_z)
        << ',' << opt(r.pipeline_vertices) << ',' << opt(r.complexity_claim);
    return out.str();
}

nlohmann::json audit_to_json(const EnumerationAudit& audit) {
    return nlohmann::json{
        {"bound", audit.bound},
        {"frontier_checks", audit.frontier_checks},
        {"min_frontier_omega", audit.min_frontier_omega},
        {"proven", audit.proven},
        {"lines", audit.lines},
    };
}

nlohmann::json sweep_to_json(const SweepReport& report) {
    return nlohmann::json{
        {"name", report.name},
        {"items", report.items},
        {"checks", report.checks},
        {"failures", report.failures},
        {"ok", report.ok()},
    };
}

}  // namespace fsurg

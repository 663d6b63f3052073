#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsurg/parallel.hpp"
#include "fsurg/render.hpp"
#include "fsurg/surgery.hpp"
#include "fsurg/sweeps.hpp"

namespace {

using namespace fsurg;

constexpr std::uint64_t kDefaultSeed = 1;

int run_omega(const std::string& slope_text, bool explain, const std::string& format) {
    SurgeryCoefficient x = parse_surgery_coefficient(slope_text);
    OmegaReport r = analyze(x);
    if (format == "json") {
        std::cout << report_to_json(r, explain).dump(2) << "\n";
    } else if (explain) {
        std::cout << report_explain_text(r);
    } else {
        std::cout << omega_line(r) << "\n";
    }
    return 0;
}

int run_cf(const std::string& slope_text, const std::string& format) {
    SurgeryCoefficient x = parse_surgery_coefficient(slope_text);
    ContinuedFraction cf = ContinuedFraction::expand(x);
    if (format == "json") {
        nlohmann::json j{{"p", x.p()},
                         {"q", x.q()},
                         {"quotients", cf.quotients()},
                         {"sum", cf.sum()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << x.str() << " = " << cf.str() << "  S = " << cf.sum() << "\n";
    }
    return 0;
}

int run_distance(const std::string& t1_text, const std::string& t2_text, bool with_path) {
    FareyTriangle t1 = parse_triangle(t1_text);
    FareyTriangle t2 = parse_triangle(t2_text);
    std::cout << geodesic_distance(t1, t2) << "\n";
    if (with_path)
        for (const FareyTriangle& t : flip_path(t1, t2).triangles)
            std::cout << t.str() << "\n";
    return 0;
}

int run_flip_path(const std::string& t1_text, const std::string& t2_text,
                  const std::string& format) {
    FareyTriangle t1 = parse_triangle(t1_text);
    FareyTriangle t2 = parse_triangle(t2_text);
    FlipPath path = flip_path(t1, t2);
    if (format == "json") {
        nlohmann::json steps = nlohmann::json::array();
        for (const FareyTriangle& t : path.triangles)
            steps.push_back(t.str());
        std::cout << nlohmann::json{{"length", path.length()}, {"triangles", steps}}.dump(2)
                  << "\n";
    } else {
        std::cout << "length " << path.length() << "\n";
        for (const FareyTriangle& t : path.triangles)
            std::cout << t.str() << "\n";
    }
    return 0;
}

int run_enumerate(Int max_omega, const std::string& format) {
    EnumerationAudit audit;
    std::vector<OmegaReport> reports = enumerate_omega_le(max_omega, &audit);
    Int hyperbolic_count = 0;
    for (const OmegaReport& r : reports)
        hyperbolic_count += r.hyperbolicity == Hyperbolicity::hyperbolic ? 1 : 0;

    std::ostringstream summary;
    summary << "hyperbolic count = " << hyperbolic_count;
    if (max_omega == 12) {
        summary << " (census tally at max omega 12: 46; "
                << (hyperbolic_count == 46 ? "agrees" : "disagrees") << ")";
    } else {
        summary << " (census comparison applies at max omega 12, tally 46)";
    }

    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const OmegaReport& r : reports)
            rows.push_back(report_to_json(r));
        nlohmann::json j{{"max_omega", max_omega},
                         {"count", reports.size()},
                         {"hyperbolic_count", hyperbolic_count},
                         {"census_tally_at_12", 46},
                         {"reports", std::move(rows)},
                         {"audit", audit_to_json(audit)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << report_csv_header() << "\n";
        for (const OmegaReport& r : reports)
            std::cout << report_csv_row(r) << "\n";
        std::cerr << summary.str() << "\n";
        return 0;
    }
    std::cout << std::left << std::setw(10) << "slope" << std::setw(7) << "omega"
              << std::setw(13) << "hyperbolic" << std::setw(4) << "z" << std::setw(7)
              << "d_m_0" << std::setw(7) << "d_v_0" << std::setw(7) << "d_v_z"
              << std::setw(10) << "vertices" << "claim\n";
    for (const OmegaReport& r : reports) {
        auto opt = [](const std::optional<Int>& v) {
            return v.has_value() ? std::to_string(*v) : std::string("-");
        };
        std::cout << std::left << std::setw(10) << r.slope.str() << std::setw(7)
                  << r.omega << std::setw(13)
                  << (r.hyperbolicity == Hyperbolicity::hyperbolic ? "hyperbolic"
                                                                   : "exceptional")
                  << std::setw(4) << r.z << std::setw(7) << opt(r.d_m_0) << std::setw(7)
                  << opt(r.d_v_0) << std::setw(7) << opt(r.d_v_z) << std::setw(10)
                  << opt(r.pipeline_vertices) << opt(r.complexity_claim) << "\n";
    }
    std::cout << reports.size() << " slopes with omega <= " << max_omega << "; "
              << summary.str() << "\n";
    std::cout << "search cut proven: " << audit.frontier_checks
              << " frontier candidates, min omega beyond the cut = "
              << audit.min_frontier_omega << "\n";
    return 0;
}

int run_verify(Int radius, Int pairs, std::uint64_t seed, bool serial) {
    ExecMode mode = serial ? ExecMode::serial : ExecMode::parallel;
    std::vector<SweepReport> sweeps;
    sweeps.push_back(oracle_agreement_sweep(radius, mode));
    sweeps.push_back(slope_identity_sweep(radius, mode));
    if (pairs > 0) {
        sweeps.push_back(random_pair_sweep(pairs, std::min<Int>(radius, 10), seed, mode));
        sweeps.push_back(flip_path_sweep(pairs, std::min<Int>(radius, 10), seed, mode));
    }

    bool ok = true;
    Int total_checks = 0;
    for (const SweepReport& s : sweeps) {
        total_checks += s.checks;
        std::cout << (s.ok() ? "ok   " : "FAIL ") << s.name << ": items=" << s.items
                  << " checks=" << s.checks << "\n";
        for (const std::string& f : s.failures)
            std::cout << "     " << f << "\n";
        ok = ok && s.ok();
    }
    std::cout << (ok ? "verify passed" : "verify FAILED") << " (" << total_checks
              << " checks, " << effective_thread_count() << " threads)\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"omega(p/q): exact upper complexity bounds for surgeries on the "
                 "figure-eight knot, with the Farey spine assembly rederivation"};
    app.require_subcommand(1);

    std::function<int()> runner;

    auto* cmd_omega = app.add_subcommand("omega", "Bound for one surgery slope");
    {
        auto slope = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("plain");
        auto explain = std::make_shared<bool>(false);
        cmd_omega->add_option("slope", *slope, "surgery slope p/q, p, never inf")->required();
        cmd_omega->add_flag("--explain", *explain, "full report with triangles and assembly cost");
        cmd_omega->add_option("--format", *format)->check(CLI::IsMember({"plain", "json"}));
        cmd_omega->callback([=, &runner] {
            runner = [=] { return run_omega(*slope, *explain, *format); };
        });
    }

    auto* cmd_cf = app.add_subcommand("cf", "Continued fraction and quotient sum");
    {
        auto slope = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("plain");
        cmd_cf->add_option("slope", *slope)->required();
        cmd_cf->add_option("--format", *format)->check(CLI::IsMember({"plain", "json"}));
        cmd_cf->callback([=, &runner] {
            runner = [=] { return run_cf(*slope, *format); };
        });
    }

    auto* cmd_distance = app.add_subcommand("distance", "Flip distance between two theta classes");
    {
        auto t1 = std::make_shared<std::string>();
        auto t2 = std::make_shared<std::string>();
        auto with_path = std::make_shared<bool>(false);
        cmd_distance->add_option("t1", *t1, "triangle a/b,c/d,e/f")->required();
        cmd_distance->add_option("t2", *t2)->required();
        cmd_distance->add_flag("--path", *with_path, "also print the geodesic");
        cmd_distance->callback([=, &runner] {
            runner = [=] { return run_distance(*t1, *t2, *with_path); };
        });
    }

    auto* cmd_path = app.add_subcommand("flip-path", "Geodesic triangle sequence");
    {
        auto t1 = std::make_shared<std::string>();
        auto t2 = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("plain");
        cmd_path->add_option("t1", *t1)->required();
        cmd_path->add_option("t2", *t2)->required();
        cmd_path->add_option("--format", *format)->check(CLI::IsMember({"plain", "json"}));
        cmd_path->callback([=, &runner] {
            runner = [=] { return run_flip_path(*t1, *t2, *format); };
        });
    }

    auto* cmd_enum = app.add_subcommand("enumerate", "All slopes with omega <= N");
    {
        auto max_omega = std::make_shared<Int>(12);
        auto format = std::make_shared<std::string>("plain");
        cmd_enum->add_option("--max-omega", *max_omega)->required()->check(CLI::Range(7, 24));
        cmd_enum->add_option("--format", *format)
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        cmd_enum->callback([=, &runner] {
            runner = [=] { return run_enumerate(*max_omega, *format); };
        });
    }

    auto* cmd_verify = app.add_subcommand(
        "verify", "Oracle agreement and identity sweeps; exit 1 on any mismatch");
    {
        auto radius = std::make_shared<Int>(10);
        auto pairs = std::make_shared<Int>(0);
        auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
        auto serial = std::make_shared<bool>(false);
        cmd_verify->add_option("--radius", *radius, "BFS radius and quotient-sum bound")
            ->required()
            ->check(CLI::Range(1, 14));
        cmd_verify->add_option("--pairs", *pairs, "extra random triangle pairs")
            ->check(CLI::Range(Int(0), Int(1000000)));
        cmd_verify->add_option("--seed", *seed, "seed for randomized sweeps");
        cmd_verify->add_flag("--serial", *serial, "run the serial reference kernels");
        cmd_verify->callback([=, &runner] {
            runner = [=] { return run_verify(*radius, *pairs, *seed, *serial); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return runner();
    } catch (const IdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 1;
    } catch (const BfsCapExceeded& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

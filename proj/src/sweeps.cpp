#include "fsurg/sweeps.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>
#include <unordered_set>

#include "fsurg/surgery.hpp"

namespace fsurg {

namespace {

// Runs kernel(i, item, failures) over all items and merges per-item failure
// messages in index order, so serial and parallel runs report identically.
template <typename Item, typename Kernel>
void run_items(SweepReport& report, const std::vector<Item>& items, Kernel kernel,
               ExecMode mode) {
    report.items = Int(items.size());
    if (mode == ExecMode::serial) {
        std::vector<std::string> scratch;
        for (Int i = 0; i < Int(items.size()); ++i) {
            scratch.clear();
            report.checks += kernel(i, items[std::size_t(i)], scratch);
            for (std::string& msg : scratch)
                report.failures.push_back(std::move(msg));
        }
        return;
    }

    std::vector<std::pair<Int, std::string>> indexed;
    Int total_checks = 0;
#ifdef _OPENMP
#pragma omp parallel num_threads(effective_thread_count())
#endif
    {
        std::vector<std::pair<Int, std::string>> local;
        std::vector<std::string> scratch;
        Int local_checks = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
        for (Int i = 0; i < Int(items.size()); ++i) {
            scratch.clear();
            local_checks += kernel(i, items[std::size_t(i)], scratch);
            for (std::string& msg : scratch)
                local.emplace_back(i, std::move(msg));
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            total_checks += local_checks;
            for (auto& entry : local)
                indexed.push_back(std::move(entry));
        }
    }
    std::stable_sort(indexed.begin(), indexed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    report.checks = total_checks;
    for (auto& [i, msg] : indexed)
        report.failures.push_back(std::move(msg));
}

bool fault_injection_enabled() {
    return std::getenv("FAREY_SURGERY_INJECT_FAULT") != nullptr;
}

}  // namespace

std::vector<std::pair<FareyTriangle, Int>> triangles_within(const FareyTriangle& base,
                                                            Int radius) {
    std::vector<std::pair<FareyTriangle, Int>> ball;
    std::unordered_set<FareyTriangle, FareyTriangleHash> seen{base};
    std::deque<std::pair<FareyTriangle, Int>> queue{{base, 0}};
    while (!queue.empty()) {
        auto [t, d] = queue.front();
        queue.pop_front();
        ball.emplace_back(t, d);
        if (d == radius)
            continue;
        for (const Slope& v : t.vertices()) {
            FareyTriangle next = neighbor(t, v);
            if (seen.insert(next).second)
                queue.emplace_back(std::move(next), d + 1);
        }
    }
    return ball;
}

std::vector<SurgeryCoefficient> slopes_with_sum_at_most(Int max_sum) {
    std::vector<SurgeryCoefficient> slopes;
    // Canonical expansions [a0; a1, ..., am] with total quotient sum <= max_sum.
    std::vector<Int> prefix;
    auto walk = [&](auto&& self, Int used) -> void {
        for (Int a = (prefix.empty() ? 0 : 1); a + used <= max_sum; ++a) {
            prefix.push_back(a);
            bool canonical_tail = prefix.size() == 1 || a >= 2;
            if (canonical_tail && used + a >= 1)
                slopes.push_back(ContinuedFraction::evaluate_quotients(prefix));
            self(self, used + a);
            prefix.pop_back();
        }
    };
    walk(walk, 0);
    return slopes;
}

std::vector<std::pair<FareyTriangle, FareyTriangle>>
random_triangle_pairs(Int count, Int max_separation, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_vertex(0, 2);
    std::uniform_int_distribution<Int> pick_start_len(0, 12);
    std::uniform_int_distribution<Int> pick_sep(0, max_separation);

    auto walk_from = [&](FareyTriangle t, Int steps) {
        for (Int s = 0; s < steps; ++s)
            t = neighbor(t, t.vertices()[std::size_t(pick_vertex(rng))]);
        return t;
    };

    std::vector<std::pair<FareyTriangle, FareyTriangle>> pairs;
    pairs.reserve(std::size_t(count));
    FareyTriangle base = base_triangle(0);
    for (Int i = 0; i < count; ++i) {
        FareyTriangle t1 = walk_from(base, pick_start_len(rng));
        FareyTriangle t2 = walk_from(t1, pick_sep(rng));
        pairs.emplace_back(std::move(t1), std::move(t2));
    }
    return pairs;
}

SweepReport oracle_agreement_sweep(Int radius, ExecMode mode) {
    SweepReport report;
    report.name = "oracle-agreement(radius=" + std::to_string(radius) + ")";
    FareyTriangle base = base_triangle(0);
    auto ball = triangles_within(base, radius);
    bool inject = fault_injection_enabled();

    run_items(report, ball,
              [&base, radius, inject](Int i, const std::pair<FareyTriangle, Int>& item,
                                      std::vector<std::string>& failures) -> Int {
                  const auto& [t, depth] = item;
                  Int checks = 0;
                  try {
                      Int g = geodesic_distance(base, t);
                      if (inject && i == 0)
                          g += 1;
                      ++checks;
                      if (g != depth)
                          failures.push_back("geodesic(" + base.str() + "; " + t.str() +
                                             ") = " + std::to_string(g) +
                                             ", BFS says " + std::to_string(depth));
                      // Tie the recorded depth to the pairwise oracle on a
                      // sparse subsample; the full ball is one BFS already.
                      if (i % 512 == 0) {
                          ++checks;
                          Int b = bfs_distance(base, t, radius);
                          if (b != depth)
                              failures.push_back("bfs_distance(" + t.str() + ") = " +
                                                 std::to_string(b) + ", ball depth " +
                                                 std::to_string(depth));
                      }
                  } catch (const std::exception& e) {
                      failures.push_back("triangle " + t.str() + ": " + e.what());
                  }
                  return checks;
              },
              mode);
    return report;
}

SweepReport random_pair_sweep(Int pairs, Int max_separation, std::uint64_t seed,
                              ExecMode mode) {
    SweepReport report;
    report.name = "random-pairs(n=" + std::to_string(pairs) +
                  ", sep<=" + std::to_string(max_separation) + ")";
    auto items = random_triangle_pairs(pairs, max_separation, seed);

    run_items(report, items,
              [max_separation](Int, const std::pair<FareyTriangle, FareyTriangle>& item,
                               std::vector<std::string>& failures) -> Int {
                  const auto& [t1, t2] = item;
                  Int checks = 0;
                  try {
                      Int g = geodesic_distance(t1, t2);
                      Int b = bfs_distance(t1, t2, max_separation);
                      ++checks;
                      if (g != b)
                          failures.push_back("pair (" + t1.str() + "; " + t2.str() +
                                             "): geodesic " + std::to_string(g) +
                                             " != bfs " + std::to_string(b));
                      ++checks;
                      if (geodesic_distance(t2, t1) != g)
                          failures.push_back("pair (" + t1.str() + "; " + t2.str() +
                                             "): distance not symmetric");
                  } catch (const std::exception& e) {
                      failures.push_back("pair (" + t1.str() + "; " + t2.str() +
                                         "): " + e.what());
                  }
                  return checks;
              },
              mode);
    return report;
}

SweepReport flip_path_sweep(Int pairs, Int max_separation, std::uint64_t seed,
                            ExecMode mode) {
    SweepReport report;
    report.name = "flip-paths(n=" + std::to_string(pairs) + ")";
    auto items = random_triangle_pairs(pairs, max_separation, seed);

    run_items(report, items,
              [](Int, const std::pair<FareyTriangle, FareyTriangle>& item,
                 std::vector<std::string>& failures) -> Int {
                  const auto& [t1, t2] = item;
                  auto complain = [&](const std::string& what) {
                      failures.push_back("path (" + t1.str() + " -> " + t2.str() +
                                         "): " + what);
                  };
                  Int checks = 0;
                  try {
                      FlipPath path = flip_path(t1, t2);
                      ++checks;
                      if (path.length() != geodesic_distance(t1, t2))
                          complain("length != distance");
                      ++checks;
                      if (!(path.triangles.front() == t1) || !(path.triangles.back() == t2))
                          complain("endpoints wrong");
                      ++checks;
                      for (std::size_t k = 1; k < path.triangles.size(); ++k) {
                          const auto& a = path.triangles[k - 1].vertices();
                          const auto& b = path.triangles[k];
                          int shared = 0;
                          for (const Slope& s : a)
                              shared += b.has_vertex(s) ? 1 : 0;
                          if (shared != 2) {
                              complain("step " + std::to_string(k) + " is not a flip");
                              break;
                          }
                      }
                      ++checks;
                      std::unordered_set<FareyTriangle, FareyTriangleHash> distinct(
                          path.triangles.begin(), path.triangles.end());
                      if (Int(distinct.size()) != path.length() + 1)
                          complain("repeated triangle");
                  } catch (const std::exception& e) {
                      complain(e.what());
                  }
                  return checks;
              },
              mode);
    return report;
}

SweepReport slope_identity_sweep(Int max_sum, ExecMode mode) {
    SweepReport report;
    report.name = "slope-identities(S<=" + std::to_string(max_sum) + ")";
    auto slopes = slopes_with_sum_at_most(max_sum);
    FareyTriangle base0 = base_triangle(0);
    SurgeryCoefficient one = SurgeryCoefficient::normalize(1, 1);

    run_items(report, slopes,
              [&base0, one](Int, const SurgeryCoefficient& x,
                            std::vector<std::string>& failures) -> Int {
                  Int checks = 0;
                  try {
                      if (!(x == one)) {
                          // distance law d(triangle_m, base) = S(p,q) - 1
                          FareyTriangle tm =
                              closest_triangle_with_vertex(Slope::of(x), base0);
                          ++checks;
                          if (geodesic_distance(tm, base0) != s_sum(x) - 1)
                              failures.push_back("slope " + x.str() +
                                                 ": d(triangle_m, base) != S - 1");
                      }
                      if (classify(x) == Hyperbolicity::hyperbolic) {
                          // pipeline() hard-checks the remaining identities
                          // and the formula agreement internally.
                          OmegaReport r = pipeline(x);
                          ++checks;
                          if (*r.pipeline_vertices - r.integer_correction != omega(x))
                              failures.push_back("slope " + x.str() +
                                                 ": pipeline disagrees with formula");
                      } else {
                          ++checks;
                          if (omega(x) != 7)
                              failures.push_back("slope " + x.str() +
                                                 ": exceptional omega != 7");
                      }
                  } catch (const std::exception& e) {
                      failures.push_back("slope " + x.str() + ": " + e.what());
                  }
                  return checks;
              },
              mode);
    return report;
}

SweepReport cf_property_sweep(Int samples, Int max_q, std::uint64_t seed,
                              ExecMode mode) {
    SweepReport report;
    report.name = "cf-properties(n=" + std::to_string(samples) + ")";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> pick_q(1, max_q);
    std::uniform_int_distribution<Int> pick_p(0, kInputLimit);
    std::vector<SurgeryCoefficient> items;
    items.reserve(std::size_t(samples));
    for (Int i = 0; i < samples; ++i)
        items.push_back(SurgeryCoefficient::normalize(pick_p(rng), pick_q(rng)));

    run_items(report, items,
              [](Int, const SurgeryCoefficient& x,
                 std::vector<std::string>& failures) -> Int {
                  auto complain = [&](const std::string& what) {
                      failures.push_back("slope " + x.str() + ": " + what);
                  };
                  Int checks = 0;
                  try {
                      ContinuedFraction cf = ContinuedFraction::expand(x);
                      const auto& qs = cf.quotients();

                      ++checks;
                      if (!(cf.evaluate() == x))
                          complain("round-trip failed for " + cf.str());

                      ++checks;
                      bool canonical = qs[0] >= 0;
                      for (std::size_t k = 1; k < qs.size(); ++k)
                          canonical = canonical && qs[k] >= 1;
                      if (qs.size() > 1 && qs.back() < 2)
                          canonical = false;
                      if (!canonical)
                          complain("expansion " + cf.str() + " not canonical");

                      // Same value and same quotient sum under the
                      // [..., an] vs [..., an - 1, 1] tail convention.
                      if (cf.sum() >= 1) {
                          std::vector<Int> alt(qs);
                          alt.back() -= 1;
                          alt.push_back(1);
                          checks += 2;
                          SurgeryCoefficient same =
                              ContinuedFraction::evaluate_quotients(alt);
                          if (!(same == x))
                              complain("alternate tail changes the value");
                          Int alt_sum = 0;
                          for (Int a : alt)
                              alt_sum += a;
                          if (alt_sum != cf.sum())
                              complain("alternate tail changes the quotient sum");
                      }

                      ++checks;
                      if (x.q() >= 2) {
                          SurgeryCoefficient frac =
                              SurgeryCoefficient::normalize(x.remainder(), x.q());
                          if (s_sum(x) != x.integer_part() + s_sum(frac))
                              complain("S(p,q) != [p/q] + S(rem, q)");
                      } else if (s_sum(x) != x.p()) {
                          complain("S(p,1) != p");
                      }
                  } catch (const std::exception& e) {
                      complain(e.what());
                  }
                  return checks;
              },
              mode);
    return report;
}

}  // namespace fsurg

#include <doctest.h>

#include <random>
#include <unordered_set>

#include "fsurg/farey.hpp"
#include "fsurg/sweeps.hpp"

using namespace fsurg;

namespace {

Slope sl(Int a, Int b) { return Slope::make(a, b); }

FareyTriangle tri(Int a1, Int b1, Int a2, Int b2, Int a3, Int b3) {
    return FareyTriangle(sl(a1, b1), sl(a2, b2), sl(a3, b3));
}

FareyTriangle random_triangle(std::mt19937_64& rng, Int walk_len) {
    std::uniform_int_distribution<int> pick(0, 2);
    FareyTriangle t = base_triangle(0);
    for (Int i = 0; i < walk_len; ++i)
        t = neighbor(t, t.vertices()[std::size_t(pick(rng))]);
    return t;
}

}  // namespace

TEST_CASE("slope normalization") {
    CHECK(sl(2, -4) == sl(-1, 2));
    CHECK(sl(-3, 0) == Slope::infinity());
    CHECK(sl(0, -5) == sl(0, 1));
    CHECK(sl(4, 6) == sl(2, 3));
    CHECK_THROWS_AS(Slope::make(0, 0), std::invalid_argument);
}

TEST_CASE("unimodularity") {
    CHECK(unimodular(sl(1, 2), sl(1, 3)));
    CHECK_FALSE(unimodular(sl(1, 2), sl(3, 4)));
    for (Int k = -5; k <= 5; ++k)
        CHECK(unimodular(Slope::infinity(), sl(k, 1)));
}

TEST_CASE("slope order on the boundary circle") {
    CHECK(slope_cmp(sl(0, 1), sl(1, 1)) < 0);
    CHECK(slope_cmp(sl(-1, 1), sl(0, 1)) < 0);
    CHECK(slope_cmp(Slope::infinity(), sl(1000000, 1)) > 0);
    CHECK(slope_cmp(sl(1, 2), sl(1, 2)) == 0);
    CHECK(slope_cmp(sl(2, 5), sl(1, 2)) < 0);
}

TEST_CASE("base triangles") {
    CHECK(base_triangle(0) == tri(0, 1, 1, 1, 1, 0));
    CHECK(base_triangle(3) == tri(3, 1, 4, 1, 1, 0));
    CHECK(base_triangle(-1) == tri(-1, 1, 0, 1, 1, 0));
}

TEST_CASE("triangle construction validates") {
    CHECK_THROWS_AS(tri(0, 1, 1, 1, 5, 2), std::invalid_argument);   // not unimodular
    CHECK_THROWS_AS(tri(0, 1, 0, 1, 1, 0), std::invalid_argument);   // repeated vertex
    CHECK(tri(1, 0, 0, 1, 1, 1) == base_triangle(0));                // order ignored
}

TEST_CASE("neighbor across each edge of the base triangle") {
    FareyTriangle t0 = base_triangle(0);
    CHECK(neighbor(t0, Slope::infinity()) == tri(0, 1, 1, 2, 1, 1));
    CHECK(neighbor(t0, sl(0, 1)) == base_triangle(1));
    CHECK(neighbor(t0, sl(1, 1)) == tri(-1, 1, 0, 1, 1, 0));
    CHECK_THROWS_AS(neighbor(t0, sl(5, 1)), std::invalid_argument);
}

TEST_CASE("neighbor is an involution across a fixed edge") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<Int> len(0, 18);
    for (int i = 0; i < 500; ++i) {
        FareyTriangle t = random_triangle(rng, len(rng));
        const Slope removed = t.vertices()[std::size_t(pick(rng))];
        FareyTriangle across = neighbor(t, removed);
        // the replacement vertex is the one not shared with t
        for (const Slope& v : across.vertices())
            if (!t.has_vertex(v))
                CHECK(neighbor(across, v) == t);
    }
}

TEST_CASE("flip is neighbor on the kept edge") {
    FareyTriangle t0 = base_triangle(0);
    CHECK(flip(t0, sl(0, 1), sl(1, 1)) == neighbor(t0, Slope::infinity()));
    CHECK(flip(t0, sl(1, 1), Slope::infinity()) == neighbor(t0, sl(0, 1)));
    CHECK_THROWS_AS(flip(t0, sl(0, 1), sl(5, 1)), std::invalid_argument);
}

TEST_CASE("bfs distance examples and cap") {
    FareyTriangle t0 = base_triangle(0);
    CHECK(bfs_distance(t0, t0, 0) == 0);
    CHECK(bfs_distance(t0, base_triangle(3), 15) == 3);
    CHECK(bfs_distance(t0, base_triangle(3), 3) == 3);  // success exactly at the cap
    CHECK(bfs_distance(t0, tri(0, 1, 1, 2, 1, 1), 15) == 1);
    CHECK_THROWS_AS(bfs_distance(t0, base_triangle(5), 2), BfsCapExceeded);
}

TEST_CASE("geodesic distance examples") {
    FareyTriangle t0 = base_triangle(0);
    CHECK(geodesic_distance(base_triangle(1), t0) == 1);
    CHECK(geodesic_distance(t0, t0) == 0);
    CHECK(geodesic_distance(tri(4, 1, 5, 1, 1, 0), t0) == 4);
}

TEST_CASE("geodesic agrees with BFS on the whole radius-8 ball") {
    FareyTriangle t0 = base_triangle(0);
    for (const auto& [t, depth] : triangles_within(t0, 8)) {
        CHECK(geodesic_distance(t0, t) == depth);
        CHECK(geodesic_distance(t, t0) == depth);
    }
}

TEST_CASE("distance is a metric within BFS range") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Int> len(0, 10);
    for (int i = 0; i < 300; ++i) {
        FareyTriangle a = random_triangle(rng, len(rng));
        FareyTriangle b = random_triangle(rng, len(rng));
        FareyTriangle c = random_triangle(rng, len(rng));
        Int ab = geodesic_distance(a, b);
        Int ba = geodesic_distance(b, a);
        Int bc = geodesic_distance(b, c);
        Int ac = geodesic_distance(a, c);
        CHECK(ab == ba);
        CHECK((ab == 0) == (a == b));
        CHECK(ac <= ab + bc);
    }
}

TEST_CASE("distance 1 iff exactly two shared vertices") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Int> len(0, 8);
    for (int i = 0; i < 500; ++i) {
        FareyTriangle a = random_triangle(rng, len(rng));
        FareyTriangle b = random_triangle(rng, len(rng));
        int shared = 0;
        for (const Slope& v : a.vertices())
            shared += b.has_vertex(v) ? 1 : 0;
        CHECK((geodesic_distance(a, b) == 1) == (shared == 2));
    }
}

TEST_CASE("flip path examples and invariants") {
    FareyTriangle t0 = base_triangle(0);
    FlipPath trivial = flip_path(t0, t0);
    CHECK(trivial.length() == 0);
    CHECK(trivial.triangles == std::vector<FareyTriangle>{t0});

    FlipPath two = flip_path(t0, base_triangle(2));
    CHECK(two.triangles ==
          std::vector<FareyTriangle>{t0, base_triangle(1), base_triangle(2)});

    std::mt19937_64 rng(29);
    std::uniform_int_distribution<Int> len(0, 12);
    for (int i = 0; i < 200; ++i) {
        FareyTriangle a = random_triangle(rng, len(rng));
        FareyTriangle b = random_triangle(rng, len(rng));
        FlipPath path = flip_path(a, b);
        CHECK(path.length() == geodesic_distance(a, b));
        std::unordered_set<FareyTriangle, FareyTriangleHash> distinct(
            path.triangles.begin(), path.triangles.end());
        CHECK(Int(distinct.size()) == path.length() + 1);
        for (std::size_t k = 1; k < path.triangles.size(); ++k)
            CHECK(geodesic_distance(path.triangles[k - 1], path.triangles[k]) == 1);
    }
}

TEST_CASE("closest triangle with a given vertex") {
    FareyTriangle t0 = base_triangle(0);

    FareyTriangle m5 = closest_triangle_with_vertex(sl(5, 1), t0);
    CHECK(m5 == tri(4, 1, 5, 1, 1, 0));
    CHECK(geodesic_distance(m5, t0) == 4);

    FareyTriangle m12 = closest_triangle_with_vertex(sl(1, 2), t0);
    CHECK(m12 == tri(0, 1, 1, 2, 1, 1));
    CHECK(geodesic_distance(m12, t0) == 1);

    FareyTriangle m25 = closest_triangle_with_vertex(sl(2, 5), t0);
    CHECK(m25.has_vertex(sl(2, 5)));
    CHECK(geodesic_distance(m25, t0) == 3);
    CHECK(bfs_distance(t0, m25, 12) == 3);

    CHECK_THROWS_AS(closest_triangle_with_vertex(sl(0, 1), t0), std::invalid_argument);
    CHECK_THROWS_AS(closest_triangle_with_vertex(Slope::infinity(), t0),
                    std::invalid_argument);
}

TEST_CASE("closest triangle is minimal over the whole star") {
    // every triangle in the radius-6 ball that has the vertex is no closer
    FareyTriangle t0 = base_triangle(0);
    for (Slope v : {sl(2, 5), sl(5, 2), sl(3, 4), sl(7, 3)}) {
        FareyTriangle entry = closest_triangle_with_vertex(v, t0);
        Int best = geodesic_distance(entry, t0);
        for (const auto& [t, depth] : triangles_within(t0, 6))
            if (t.has_vertex(v))
                CHECK(depth >= best);
    }
}

TEST_CASE("triangle parsing") {
    CHECK(parse_triangle("0,1,inf") == base_triangle(0));
    CHECK(parse_triangle("0/1,1/1,1/0") == base_triangle(0));
    CHECK(parse_triangle("0,1/2,1") == tri(0, 1, 1, 2, 1, 1));
    CHECK(parse_triangle(" 3 , 4 , inf ") == base_triangle(3));
    CHECK_THROWS_AS(parse_triangle("0,1,5/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_triangle("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_triangle("0,1,inf,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_triangle("0,1,2000000000"), std::out_of_range);
}

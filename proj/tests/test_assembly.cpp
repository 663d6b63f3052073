#include <doctest.h>

#include "fsurg/assembly.hpp"

using namespace fsurg;

namespace {

Slope sl(Int a, Int b) { return Slope::make(a, b); }

}  // namespace

TEST_CASE("solid torus block") {
    FareyTriangle t0 = base_triangle(0);

    Block b5 = solid_torus_block(sl(5, 1), t0);
    CHECK(b5.interior_vertices == 0);
    REQUIRE(b5.boundaries.size() == 1);
    CHECK(b5.boundaries[0].theta == base_triangle(3));
    CHECK(geodesic_distance(b5.boundaries[0].theta, t0) == 3);
    CHECK_FALSE(b5.boundaries[0].theta.has_vertex(sl(5, 1)));

    Block bhalf = solid_torus_block(sl(1, 2), t0);
    CHECK(bhalf.interior_vertices == 0);
    CHECK(bhalf.boundaries[0].theta == t0);

    CHECK_THROWS_AS(solid_torus_block(sl(0, 1), t0), std::invalid_argument);
}

TEST_CASE("solid torus theta stays one flip from the meridian's entry triangle") {
    FareyTriangle t0 = base_triangle(0);
    for (auto [p, q] : {std::pair<Int, Int>{7, 2}, {3, 4}, {11, 5}, {9, 1}}) {
        Slope m = sl(p, q);
        Block b = solid_torus_block(m, t0);
        FareyTriangle entry = closest_triangle_with_vertex(m, t0);
        CHECK(geodesic_distance(b.boundaries[0].theta, entry) == 1);
        CHECK_FALSE(b.boundaries[0].theta.has_vertex(m));
    }
}

TEST_CASE("flip block") {
    Block fb = flip_block(base_triangle(0), base_triangle(1));
    CHECK(fb.interior_vertices == 1);
    CHECK(fb.boundaries.size() == 2);

    CHECK(flip_block(base_triangle(0), FareyTriangle(sl(0, 1), sl(1, 2), sl(1, 1)))
              .interior_vertices == 1);

    CHECK_THROWS_AS(flip_block(base_triangle(0), base_triangle(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(flip_block(base_triangle(0), base_triangle(2)),
                    std::invalid_argument);
}

TEST_CASE("knot exterior block") {
    for (Int i = 0; i <= 3; ++i) {
        Block b = knot_exterior_block(i);
        CHECK(b.interior_vertices == 10);
        REQUIRE(b.boundaries.size() == 1);
        CHECK(b.boundaries[0].theta == base_triangle(i));
        CHECK(b.boundaries[0].label == "cusp");
    }
    CHECK_THROWS_AS(knot_exterior_block(4), std::invalid_argument);
    CHECK_THROWS_AS(knot_exterior_block(-1), std::invalid_argument);
}

TEST_CASE("assembling the knot exterior with a solid torus") {
    FareyTriangle t0 = base_triangle(0);
    AssemblyResult r = assemble(knot_exterior_block(0), "cusp",
                                solid_torus_block(sl(5, 1), t0), "boundary");
    CHECK(r.block.interior_vertices == 13);  // 10 + 0 + 3, the z = 0 assembly
    CHECK(r.block.boundaries.empty());
    REQUIRE(r.cost_breakdown.size() == 3);
    CHECK(r.cost_breakdown[0].vertices == 10);
    CHECK(r.cost_breakdown[1].vertices == 0);
    CHECK(r.cost_breakdown[2].vertices == 3);
}

TEST_CASE("assembling two flip blocks over the shared torus") {
    Block f01 = flip_block(base_triangle(0), base_triangle(1));
    Block f12 = flip_block(base_triangle(1), base_triangle(2));
    AssemblyResult r = assemble(f01, "top", f12, "bottom");
    CHECK(r.block.interior_vertices == 2);  // 1 + 1 + 0
    CHECK(r.block.boundaries.size() == 2);
    CHECK(r.block.find_boundary("bottom") != nullptr);
    CHECK(r.block.find_boundary("top") != nullptr);
}

TEST_CASE("assemble errors") {
    Block f01 = flip_block(base_triangle(0), base_triangle(1));
    CHECK_THROWS_AS(assemble(f01, "side", f01, "top"), std::invalid_argument);
    CHECK_THROWS_AS(assemble(f01, "top", f01, "top"), std::invalid_argument);
}

TEST_CASE("assemble cost is symmetric") {
    FareyTriangle t0 = base_triangle(0);
    Block knot = knot_exterior_block(2);
    Block torus = solid_torus_block(sl(7, 3), t0);
    Int a = assemble(knot, "cusp", torus, "boundary").block.interior_vertices;
    Int b = assemble(torus, "boundary", knot, "cusp").block.interior_vertices;
    CHECK(a == b);
}

TEST_CASE("a geodesic chain of flip blocks costs its length") {
    FlipPath path = flip_path(base_triangle(0), base_triangle(3));
    REQUIRE(path.length() == 3);
    Block chain = flip_block(path.triangles[0], path.triangles[1]);
    for (std::size_t k = 2; k < path.triangles.size(); ++k) {
        Block next = flip_block(path.triangles[k - 1], path.triangles[k]);
        chain = assemble(chain, "top", next, "bottom").block;
    }
    CHECK(chain.interior_vertices == Int(path.length()));
}

TEST_CASE("inserting a geodesic flip block does not change the total") {
    FareyTriangle t0 = base_triangle(0);
    Block knot = knot_exterior_block(0);
    Block torus = solid_torus_block(sl(5, 1), t0);
    Int direct = assemble(knot, "cusp", torus, "boundary").block.interior_vertices;

    // first flip along the geodesic from theta^(0) toward the torus theta
    FlipPath path = flip_path(base_triangle(0), torus.boundaries[0].theta);
    REQUIRE(path.length() >= 1);
    Block step = flip_block(path.triangles[0], path.triangles[1]);
    Block partial = assemble(knot, "cusp", step, "bottom").block;
    Int via_flip =
        assemble(partial, "top", torus, "boundary").block.interior_vertices;
    CHECK(via_flip == direct);
}

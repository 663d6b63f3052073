#pragma once

#include <string>
#include <vector>

#include "fsurg/farey.hpp"

namespace fsurg {

// One torus boundary component together with the class of its theta-curve,
// recorded as the Farey triangle of the curve's three slopes.
struct BoundaryTorus {
    std::string label;
    FareyTriangle theta;
};

// A manifold-with-boundary-pattern piece, abstracted to its boundary theta
// classes and its interior true-vertex budget.
struct Block {
    std::string name;
    std::vector<BoundaryTorus> boundaries;
    Int interior_vertices = 0;

    const BoundaryTorus* find_boundary(const std::string& label) const noexcept;
};

struct CostStep {
    std::string description;
    Int vertices = 0;
};

struct AssemblyResult {
    Block block;
    std::vector<CostStep> cost_breakdown;
};

// Solid torus glued so its meridian is the given slope, carrying the spine
// with no interior true vertices. Its boundary theta class is the flip of
// the entry triangle of the meridian's star away from the meridian vertex.
Block solid_torus_block(const Slope& meridian, const FareyTriangle& base);

// T x [0,1] spanning exactly one flip; one interior true vertex.
Block flip_block(const FareyTriangle& theta_from, const FareyTriangle& theta_to);

// Figure-eight knot exterior with boundary theta class i,i+1,inf and 10
// interior true vertices; available for i in {0,1,2,3}.
Block knot_exterior_block(Int i);

// Glues the labeled tori; the result has v + v' + d(theta, theta') interior
// true vertices. Both theta classes must already be expressed in the same
// coordinate frame.
AssemblyResult assemble(const Block& b1, const std::string& t1_label,
                        const Block& b2, const std::string& t2_label);

}  // namespace fsurg

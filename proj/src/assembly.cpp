#include "fsurg/assembly.hpp"

namespace fsurg {

const BoundaryTorus* Block::find_boundary(const std::string& label) const noexcept {
    for (const BoundaryTorus& b : boundaries)
        if (b.label == label)
            return &b;
    return nullptr;
}

Block solid_torus_block(const Slope& meridian, const FareyTriangle& base) {
    if (base.has_vertex(meridian))
        throw std::invalid_argument("meridian on base triangle");
    FareyTriangle entry = closest_triangle_with_vertex(meridian, base);
    FareyTriangle theta = neighbor(entry, meridian);
    if (theta.has_vertex(meridian))
        throw std::logic_error("solid torus theta class contains its meridian");
    if (geodesic_distance(entry, theta) != 1)
        throw std::logic_error("solid torus theta class not adjacent to the entry triangle");
    return Block{"solid_torus(" + meridian.str() + ")",
                 {BoundaryTorus{"boundary", theta}},
                 0};
}

Block flip_block(const FareyTriangle& theta_from, const FareyTriangle& theta_to) {
    if (geodesic_distance(theta_from, theta_to) != 1)
        throw std::invalid_argument("a flip block spans exactly one flip");
    return Block{"flip(" + theta_from.str() + " -> " + theta_to.str() + ")",
                 {BoundaryTorus{"bottom", theta_from}, BoundaryTorus{"top", theta_to}},
                 1};
}

Block knot_exterior_block(Int i) {
    if (i < 0 || i > 3)
        throw std::invalid_argument("no spine constant available for i = " +
                                    std::to_string(i));
    return Block{"figure8_exterior(theta_" + std::to_string(i) + ")",
                 {BoundaryTorus{"cusp", base_triangle(i)}},
                 10};
}

AssemblyResult assemble(const Block& b1, const std::string& t1_label,
                        const Block& b2, const std::string& t2_label) {
    const BoundaryTorus* t1 = b1.find_boundary(t1_label);
    const BoundaryTorus* t2 = b2.find_boundary(t2_label);
    if (t1 == nullptr)
        throw std::invalid_argument("block '" + b1.name + "' has no boundary '" +
                                    t1_label + "'");
    if (t2 == nullptr)
        throw std::invalid_argument("block '" + b2.name + "' has no boundary '" +
                                    t2_label + "'");
    if (b1.name == b2.name && t1_label == t2_label)
        throw std::invalid_argument("cannot glue a boundary torus to itself");

    Int d = geodesic_distance(t1->theta, t2->theta);

    Block glued;
    glued.name = b1.name + " + " + b2.name;
    glued.interior_vertices = b1.interior_vertices + b2.interior_vertices + d;
    for (const BoundaryTorus& b : b1.boundaries)
        if (b.label != t1_label)
            glued.boundaries.push_back(b);
    for (const BoundaryTorus& b : b2.boundaries)
        if (b.label != t2_label)
            glued.boundaries.push_back(b);

    AssemblyResult result;
    result.block = std::move(glued);
    result.cost_breakdown = {
        {"interior vertices of " + b1.name, b1.interior_vertices},
        {"interior vertices of " + b2.name, b2.interior_vertices},
        {"flip distance d(" + t1->theta.str() + ", " + t2->theta.str() + ")", d},
    };
    return result;
}

}  // namespace fsurg

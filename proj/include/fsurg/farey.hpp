#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsurg/rationals.hpp"

namespace fsurg {

// A vertex of the Farey tessellation: a/b in lowest terms with b >= 0,
// where 1/0 is the single point at infinity.
struct Slope {
    Int num = 0;
    Int den = 1;

    static Slope make(Int num, Int den);
    static Slope infinity() noexcept { return Slope{1, 0}; }
    static Slope of(const SurgeryCoefficient& x) noexcept { return Slope{x.p(), x.q()}; }

    bool is_infinite() const noexcept { return den == 0; }
    friend bool operator==(const Slope&, const Slope&) = default;
    std::string str() const;  // "a/b", "a" when b = 1, "inf" for 1/0
};

// a*d - b*c for a/b, c/d; exact in 128 bits.
inline Wide slope_det(const Slope& s1, const Slope& s2) noexcept {
    return Wide(s1.num) * s2.den - Wide(s1.den) * s2.num;
}

inline bool unimodular(const Slope& s1, const Slope& s2) noexcept {
    Wide d = slope_det(s1, s2);
    return d == 1 || d == -1;
}

// Total order on the boundary circle R ∪ {inf}: finite slopes by value,
// inf greatest. Requires canonical slopes (den >= 0).
inline int slope_cmp(const Slope& a, const Slope& b) noexcept {
    Wide d = slope_det(a, b);
    return d > 0 ? 1 : d < 0 ? -1 : 0;
}

// Three pairwise-unimodular distinct slopes; every such triple is a face of
// the tessellation. Vertices are kept sorted (inf last) so equality and
// hashing are structural.
class FareyTriangle {
public:
    FareyTriangle(const Slope& a, const Slope& b, const Slope& c);

    const std::array<Slope, 3>& vertices() const noexcept { return v_; }
    bool has_vertex(const Slope& s) const noexcept;

    friend bool operator==(const FareyTriangle&, const FareyTriangle&) = default;
    std::string str() const;  // "a/b,c/d,e/f" with compact slope forms

private:
    std::array<Slope, 3> v_;
};

struct FareyTriangleHash {
    std::size_t operator()(const FareyTriangle& t) const noexcept;
};

// Geodesic in the dual tree: consecutive triangles one flip apart, no repeats.
struct FlipPath {
    std::vector<FareyTriangle> triangles;
    Int length() const noexcept { return Int(triangles.size()) - 1; }
};

class BfsCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Frontier grows ~3*2^(d-1); 15 keeps the oracle around 50k nodes.
inline constexpr Int kDefaultBfsRadiusCap = 15;

// The triangle with vertices i, i+1, inf.
FareyTriangle base_triangle(Int i);

// The other triangle sharing the edge of t that does not contain `opposite`.
FareyTriangle neighbor(const FareyTriangle& t, const Slope& opposite);

// neighbor() expressed on the kept edge, the way flips of theta-curves read.
FareyTriangle flip(const FareyTriangle& t, const Slope& keep1, const Slope& keep2);

// Breadth-first search over triangle adjacency. Trusted reference for
// geodesic_distance; throws BfsCapExceeded when the distance is > radius_cap.
Int bfs_distance(const FareyTriangle& from, const FareyTriangle& to,
                 Int radius_cap = kDefaultBfsRadiusCap);

// Exact dual-tree distance by walking across the edge that separates the
// current triangle from the target on the boundary circle.
Int geodesic_distance(const FareyTriangle& from, const FareyTriangle& to);

// The geodesic triangle sequence from..to (length = geodesic_distance).
FlipPath flip_path(const FareyTriangle& from, const FareyTriangle& to);

// Among the fan of triangles incident to v, the one nearest to base: the
// triangle through which the dual-tree geodesic from base enters the star
// of v. Requires v not a vertex of base.
FareyTriangle closest_triangle_with_vertex(const Slope& v, const FareyTriangle& base);

// "p/q", "p", or "inf"; strict, bounds-checked.
Slope parse_slope(const std::string& text);

// "a/b,c/d,e/f" with "inf" allowed; validates unimodularity.
FareyTriangle parse_triangle(const std::string& text);

}  // namespace fsurg

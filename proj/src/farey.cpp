#include "fsurg/farey.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

namespace fsurg {

Slope Slope::make(Int num, Int den) {
    if (num == 0 && den == 0)
        throw std::invalid_argument("slope 0/0 is undefined");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0)
        return Slope{1, 0};
    Int g = gcd_nonneg(num < 0 ? -num : num, den);
    return Slope{num / g, den / g};
}

std::string Slope::str() const {
    if (den == 0)
        return "inf";
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

FareyTriangle::FareyTriangle(const Slope& a, const Slope& b, const Slope& c)
    : v_{a, b, c} {
    std::sort(v_.begin(), v_.end(),
              [](const Slope& x, const Slope& y) { return slope_cmp(x, y) < 0; });
    if (v_[0] == v_[1] || v_[1] == v_[2])
        throw std::invalid_argument("triangle vertices must be distinct");
    for (int i = 0; i < 3; ++i)
        if (!unimodular(v_[i], v_[(i + 1) % 3]))
            throw std::invalid_argument("vertices " + v_[i].str() + " and " +
                                        v_[(i + 1) % 3].str() + " are not unimodular");
}

bool FareyTriangle::has_vertex(const Slope& s) const noexcept {
    return v_[0] == s || v_[1] == s || v_[2] == s;
}

std::string FareyTriangle::str() const {
    return v_[0].str() + "," + v_[1].str() + "," + v_[2].str();
}

std::size_t FareyTriangleHash::operator()(const FareyTriangle& t) const noexcept {
    std::size_t h = 0x243f6a8885a308d3ull;
    auto mix = [&h](Int x) {
        h ^= std::size_t(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const Slope& s : t.vertices()) {
        mix(s.num);
        mix(s.den);
    }
    return h;
}

FareyTriangle base_triangle(Int i) {
    return FareyTriangle(Slope{i, 1}, Slope{i + 1, 1}, Slope::infinity());
}

FareyTriangle neighbor(const FareyTriangle& t, const Slope& opposite) {
    if (!t.has_vertex(opposite))
        throw std::invalid_argument("slope " + opposite.str() +
                                    " is not a vertex of " + t.str());
    Slope edge[2];
    int k = 0;
    for (const Slope& s : t.vertices())
        if (!(s == opposite))
            edge[k++] = s;
    // The two triangles on an edge {x, y} have third vertices at the mediant
    // (a+c)/(b+d) and at (a-c)/(b-d); one of them is `opposite`.
    Slope mediant = Slope::make(edge[0].num + edge[1].num, edge[0].den + edge[1].den);
    Slope other = Slope::make(edge[0].num - edge[1].num, edge[0].den - edge[1].den);
    Slope replacement = (opposite == mediant) ? other : mediant;
    return FareyTriangle(edge[0], edge[1], replacement);
}

FareyTriangle flip(const FareyTriangle& t, const Slope& keep1, const Slope& keep2) {
    if (!t.has_vertex(keep1) || !t.has_vertex(keep2) || keep1 == keep2)
        throw std::invalid_argument("kept edge is not an edge of the triangle");
    for (const Slope& s : t.vertices())
        if (!(s == keep1) && !(s == keep2))
            return neighbor(t, s);
    throw std::logic_error("unreachable: triangle has three distinct vertices");
}

Int bfs_distance(const FareyTriangle& from, const FareyTriangle& to, Int radius_cap) {
    if (radius_cap < 0)
        throw std::invalid_argument("radius_cap must be >= 0");
    if (from == to)
        return 0;
    std::unordered_set<FareyTriangle, FareyTriangleHash> seen{from};
    std::deque<std::pair<FareyTriangle, Int>> queue;
    queue.emplace_back(from, 0);
    while (!queue.empty()) {
        auto [t, d] = queue.front();
        queue.pop_front();
        if (d == radius_cap)
            continue;
        for (const Slope& v : t.vertices()) {
            FareyTriangle next = neighbor(t, v);
            if (!seen.insert(next).second)
                continue;
            if (next == to)
                return d + 1;
            queue.emplace_back(std::move(next), d + 1);
        }
    }
    throw BfsCapExceeded("cap exceeded: triangles are more than " +
                         std::to_string(radius_cap) + " flips apart");
}

namespace {

// Is s strictly inside the open interval (lo, hi) of the linearized circle
// (finite slopes by value, inf greatest)?
bool strictly_between(const Slope& s, const Slope& lo, const Slope& hi) noexcept {
    return slope_cmp(lo, s) < 0 && slope_cmp(s, hi) < 0;
}

// The edge {x, y} of a triangle splits the circle into two arcs; `far` is
// membership in the open arc on the opposite side from the third vertex w.
// Endpoint slopes must be excluded by the caller.
bool in_far_arc(const Slope& s, const Slope& x, const Slope& y, const Slope& w) noexcept {
    const Slope& lo = slope_cmp(x, y) < 0 ? x : y;
    const Slope& hi = slope_cmp(x, y) < 0 ? y : x;
    return strictly_between(s, lo, hi) != strictly_between(w, lo, hi);
}

// Vertex of t opposite the unique edge that separates t from every target
// slope, or -1 when no edge does (the walk has arrived).
template <typename Targets>
int separating_edge_index(const FareyTriangle& t, const Targets& targets) {
    const auto& v = t.vertices();
    for (int i = 0; i < 3; ++i) {
        const Slope& w = v[i];
        const Slope& x = v[(i + 1) % 3];
        const Slope& y = v[(i + 2) % 3];
        bool any = false;
        bool all = true;
        for (const Slope& s : targets) {
            if (s == x || s == y)
                continue;
            any = true;
            if (!in_far_arc(s, x, y, w)) {
                all = false;
                break;
            }
        }
        if (any && all)
            return i;
    }
    return -1;
}

}  // namespace

Int geodesic_distance(const FareyTriangle& from, const FareyTriangle& to) {
    FareyTriangle t = from;
    Int d = 0;
    while (!(t == to)) {
        int i = separating_edge_index(t, to.vertices());
        if (i < 0)
            throw std::logic_error("no separating edge for distinct triangles " +
                                   t.str() + " and " + to.str());
        t = neighbor(t, t.vertices()[std::size_t(i)]);
        ++d;
    }
    return d;
}

FlipPath flip_path(const FareyTriangle& from, const FareyTriangle& to) {
    FlipPath path;
    path.triangles.push_back(from);
    FareyTriangle t = from;
    while (!(t == to)) {
        int i = separating_edge_index(t, to.vertices());
        if (i < 0)
            throw std::logic_error("no separating edge for distinct triangles " +
                                   t.str() + " and " + to.str());
        t = neighbor(t, t.vertices()[std::size_t(i)]);
        path.triangles.push_back(t);
    }
    return path;
}

FareyTriangle closest_triangle_with_vertex(const Slope& v, const FareyTriangle& base) {
    if (base.has_vertex(v))
        throw std::invalid_argument("degenerate: slope " + v.str() +
                                    " on base triangle " + base.str());
    FareyTriangle t = base;
    std::array<Slope, 1> target{v};
    while (!t.has_vertex(v)) {
        int i = separating_edge_index(t, target);
        if (i < 0)
            throw std::logic_error("walk toward " + v.str() + " stalled at " + t.str());
        t = neighbor(t, t.vertices()[std::size_t(i)]);
    }
    return t;
}

namespace {

std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Slope parse_slope(const std::string& text) {
    std::string t = trim_copy(text);
    if (t == "inf")
        return Slope::infinity();
    std::size_t slash = t.find('/');
    auto parse_part = [](const std::string& tok, bool allow_negative) -> Int {
        if (tok.empty())
            throw std::invalid_argument("empty number in slope");
        std::size_t i = 0;
        bool neg = false;
        if (tok[0] == '-') {
            if (!allow_negative)
                throw std::invalid_argument("denominator must be non-negative");
            neg = true;
            i = 1;
            if (tok.size() == 1)
                throw std::invalid_argument("bare '-' is not a number");
        }
        Int v = 0;
        for (; i < tok.size(); ++i) {
            char c = tok[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("invalid digit in '" + tok + "'");
            v = v * 10 + (c - '0');
            if (v > kInputLimit)
                throw std::out_of_range("'" + tok + "' exceeds the input limit of 10^9");
        }
        return neg ? -v : v;
    };
    if (slash == std::string::npos)
        return Slope::make(parse_part(t, true), 1);
    if (t.find('/', slash + 1) != std::string::npos)
        throw std::invalid_argument("more than one '/' in slope '" + t + "'");
    Int num = parse_part(t.substr(0, slash), true);
    Int den = parse_part(t.substr(slash + 1), false);
    if (den == 0 && !(num == 1))
        throw std::invalid_argument("infinity is written 'inf' or '1/0', got '" + t + "'");
    return Slope::make(num, den);
}

FareyTriangle parse_triangle(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw std::invalid_argument("a triangle needs exactly three slopes, got '" +
                                    text + "'");
    return FareyTriangle(parse_slope(parts[0]), parse_slope(parts[1]),
                         parse_slope(parts[2]));
}

}  // namespace fsurg

#pragma once

// Convex polygons and polyhedra with rational coordinates, and the four
// conditions characterizing convex bodies that tile by translations:
// (i) convex polytope, (ii) centrally symmetric, (iii) centrally symmetric
// facets, (iv) every belt has 4 or 6 facets.

#include "weaktile/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace weaktile {

using Vec = std::vector<Rational>;

namespace vec {

inline Vec add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}
inline Vec sub(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}
inline Vec scale(const Vec& a, const Rational& s)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * s;
    }
    return r;
}
inline Vec neg(const Vec& a) { return scale(a, Rational(-1)); }
inline Rational dot(const Vec& a, const Vec& b)
{
    Rational r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r += a[i] * b[i];
    }
    return r;
}
inline Vec cross(const Vec& a, const Vec& b)
{
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Rational cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }
inline bool is_zero(const Vec& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}
// Representative of the line through a: divided by its first nonzero entry.
inline Vec direction_class(const Vec& a)
{
    for (const auto& x : a) {
        if (!x.is_zero()) {
            return scale(a, Rational(1) / x);
        }
    }
    throw std::invalid_argument("zero vector has no direction");
}
inline std::string str(const Vec& a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (i ? ", " : "") + a[i].str();
    }
    return s + ")";
}

}  // namespace vec

class PolytopeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FacetInfo {
    Vec normal;            // outward; d=2: (dy, -dx), d=3: area vector
    Rational measure_sq;   // squared length (d=2) or squared area (d=3)
    Vec centroid;          // vertex average
    std::optional<std::size_t> partner;
};

class Polytope {
  public:
    // Vertices in cyclic order, either orientation; stored counterclockwise.
    static Polytope polygon(std::vector<Vec> vertices)
    {
        Polytope p;
        p.dim_ = 2;
        const std::size_t n = vertices.size();
        if (n < 3) {
            throw PolytopeError("a polygon needs at least 3 vertices");
        }
        for (const auto& v : vertices) {
            if (v.size() != 2) {
                throw PolytopeError("polygon vertices must have 2 coordinates");
            }
        }
        Rational twice_area;
        for (std::size_t i = 0; i < n; ++i) {
            twice_area += vec::cross2(vertices[i], vertices[(i + 1) % n]);
        }
        if (twice_area.is_zero()) {
            throw PolytopeError("degenerate polygon (zero area)");
        }
        if (twice_area.sign() < 0) {
            std::reverse(vertices.begin(), vertices.end());
            twice_area = -twice_area;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Vec e1 = vec::sub(vertices[(i + 1) % n], vertices[i]);
            const Vec e2 = vec::sub(vertices[(i + 2) % n], vertices[(i + 1) % n]);
            if (vec::cross2(e1, e2).sign() <= 0) {
                throw PolytopeError("polygon is not strictly convex at vertex " + std::to_string((i + 1) % n));
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (vec::cross2(e1, vec::sub(vertices[j], vertices[i])).sign() < 0) {
                    throw PolytopeError("polygon is not convex: vertex " + std::to_string(j) +
                                        " lies outside edge " + std::to_string(i));
                }
            }
        }
        p.vertices_ = std::move(vertices);
        p.volume_ = twice_area / Rational(2);
        for (std::size_t i = 0; i < n; ++i) {
            p.facets_.push_back({i, (i + 1) % n});
        }
        p.build_facet_info();
        return p;
    }

    // Facets are vertex index cycles, counterclockwise seen from outside.
    static Polytope polyhedron(std::vector<Vec> vertices, std::vector<std::vector<std::size_t>> facets)
    {
        Polytope p;
        p.dim_ = 3;
        if (vertices.size() < 4 || facets.size() < 4) {
            throw PolytopeError("a polyhedron needs at least 4 vertices and 4 facets");
        }
        for (const auto& v : vertices) {
            if (v.size() != 3) {
                throw PolytopeError("polyhedron vertices must have 3 coordinates");
            }
        }
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> directed;
        std::vector<bool> used(vertices.size(), false);
        Rational six_volume;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            const auto& cyc = facets[f];
            const std::string tag = "facet " + std::to_string(f);
            if (cyc.size() < 3) {
                throw PolytopeError(tag + " has fewer than 3 vertices");
            }
            for (auto i : cyc) {
                if (i >= vertices.size()) {
                    throw PolytopeError(tag + " refers to missing vertex " + std::to_string(i));
                }
                used[i] = true;
            }
            if (std::set<std::size_t>(cyc.begin(), cyc.end()).size() != cyc.size()) {
                throw PolytopeError(tag + " repeats a vertex");
            }
            const Vec n = area_vector(vertices, cyc);
            if (vec::is_zero(n)) {
                throw PolytopeError(tag + " has zero area");
            }
            const Vec& p0 = vertices[cyc[0]];
            for (auto i : cyc) {
                if (!vec::dot(n, vec::sub(vertices[i], p0)).is_zero()) {
                    throw PolytopeError(tag + " is not planar");
                }
            }
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                const Vec e1 = vec::sub(vertices[cyc[(k + 1) % cyc.size()]], vertices[cyc[k]]);
                const Vec e2 =
                    vec::sub(vertices[cyc[(k + 2) % cyc.size()]], vertices[cyc[(k + 1) % cyc.size()]]);
                if (vec::dot(vec::cross(e1, e2), n).sign() <= 0) {
                    throw PolytopeError(tag + " is not a strictly convex polygon");
                }
            }
            for (std::size_t q = 0; q < vertices.size(); ++q) {
                if (vec::dot(n, vec::sub(vertices[q], p0)).sign() > 0) {
                    throw PolytopeError("vertex " + std::to_string(q) + " lies outside " + tag +
                                        " (not convex, or the facet is not counterclockwise from outside)");
                }
            }
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                const auto e = std::make_pair(cyc[k], cyc[(k + 1) % cyc.size()]);
                if (++directed[e] > 1) {
                    throw PolytopeError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                        " is traversed twice in the same direction");
                }
            }
            six_volume += Rational(2) * vec::dot(n, p0);
        }
        for (const auto& [e, c] : directed) {
            if (!directed.contains({e.second, e.first})) {
                throw PolytopeError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                    " belongs to only one facet");
            }
        }
        for (std::size_t i = 0; i < used.size(); ++i) {
            if (!used[i]) {
                throw PolytopeError("vertex " + std::to_string(i) + " is on no facet");
            }
        }
        p.vertices_ = std::move(vertices);
        p.facets_ = std::move(facets);
        p.volume_ = six_volume / Rational(6);
        if (p.volume_.sign() <= 0) {
            throw PolytopeError("polyhedron has nonpositive volume");
        }
        p.build_facet_info();
        return p;
    }

    int dimension() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    // d=2: edges (i, i+1); d=3: vertex cycles
    const std::vector<std::vector<std::size_t>>& facets() const { return facets_; }
    const std::vector<FacetInfo>& facet_info() const { return info_; }
    const Rational& volume() const { return volume_; }

    // max |x|^2 over vertices
    Rational max_radius_sq() const
    {
        Rational r;
        for (const auto& v : vertices_) {
            r = std::max(r, vec::dot(v, v));
        }
        return r;
    }

    // 1/2 sum p_i x p_{i+1}
    static Vec area_vector(const std::vector<Vec>& vs, const std::vector<std::size_t>& cyc)
    {
        Vec n{Rational(0), Rational(0), Rational(0)};
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            n = vec::add(n, vec::cross(vs[cyc[k]], vs[cyc[(k + 1) % cyc.size()]]));
        }
        return vec::scale(n, Rational(1, 2));
    }

  private:
    Polytope() = default;

    void build_facet_info()
    {
        for (const auto& f : facets_) {
            FacetInfo fi;
            Vec c(static_cast<std::size_t>(dim_), Rational(0));
            for (auto i : f) {
                c = vec::add(c, vertices_[i]);
            }
            fi.centroid = vec::scale(c, Rational(1) / Rational(static_cast<long>(f.size())));
            if (dim_ == 2) {
                const Vec d = vec::sub(vertices_[f[1]], vertices_[f[0]]);
                fi.normal = Vec{d[1], -d[0]};
                fi.measure_sq = vec::dot(d, d);
            } else {
                fi.normal = area_vector(vertices_, f);
                fi.measure_sq = vec::dot(fi.normal, fi.normal);
            }
            info_.push_back(std::move(fi));
        }
        // an antiparallel facet of equal measure has exactly the opposite normal
        for (std::size_t i = 0; i < info_.size(); ++i) {
            const Vec target = vec::neg(info_[i].normal);
            for (std::size_t j = 0; j < info_.size(); ++j) {
                if (j != i && info_[j].normal == target) {
                    info_[i].partner = j;
                    break;
                }
            }
        }
    }

    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<std::vector<std::size_t>> facets_;
    std::vector<FacetInfo> info_;
    Rational volume_;
};

inline std::optional<Vec> point_set_center(const std::vector<Vec>& pts)
{
    const std::size_t d = pts.front().size();
    Vec c(d, Rational(0));
    for (const auto& p : pts) {
        c = vec::add(c, p);
    }
    c = vec::scale(c, Rational(1) / Rational(static_cast<long>(pts.size())));
    const std::set<Vec> all(pts.begin(), pts.end());
    for (const auto& p : pts) {
        if (!all.contains(vec::sub(vec::scale(c, Rational(2)), p))) {
            return std::nullopt;
        }
    }
    return c;
}

inline std::optional<Vec> central_symmetry(const Polytope& p) { return point_set_center(p.vertices()); }

struct FacetSymmetryReport {
    std::vector<bool> symmetric;
    std::vector<std::size_t> failing;
    bool trivial = false;  // d = 2: edges are always symmetric
    bool all() const { return failing.empty(); }
};

inline FacetSymmetryReport facet_symmetry(const Polytope& p)
{
    FacetSymmetryReport r;
    r.trivial = p.dimension() == 2;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        bool ok = true;
        if (!r.trivial) {
            std::vector<Vec> pts;
            for (auto i : p.facets()[f]) {
                pts.push_back(p.vertices()[i]);
            }
            ok = point_set_center(pts).has_value();
        }
        r.symmetric.push_back(ok);
        if (!ok) {
            r.failing.push_back(f);
        }
    }
    return r;
}

struct MinkowskiReport {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unmatched;
    // antiparallel facets whose measures differ
    std::vector<std::pair<std::size_t, std::size_t>> unequal_measure;
    bool all_matched() const { return unmatched.empty(); }
};

inline MinkowskiReport minkowski_pairing(const Polytope& p)
{
    MinkowskiReport r;
    const auto& info = p.facet_info();
    for (std::size_t i = 0; i < info.size(); ++i) {
        if (info[i].partner) {
            if (i < *info[i].partner) {
                r.pairs.emplace_back(i, *info[i].partner);
            }
            continue;
        }
        r.unmatched.push_back(i);
        const Vec dir = vec::direction_class(info[i].normal);
        for (std::size_t j = i + 1; j < info.size(); ++j) {
            if (vec::direction_class(info[j].normal) == dir &&
                vec::dot(info[i].normal, info[j].normal).sign() < 0) {
                r.unequal_measure.emplace_back(i, j);
            }
        }
    }
    return r;
}

struct Belt {
    Vec direction;                    // edge direction class; empty for d = 2
    std::vector<std::size_t> facets;  // facets with an edge in this class
};

struct BeltReport {
    std::vector<Belt> belts;
    bool pass() const
    {
        return std::all_of(belts.begin(), belts.end(),
                           [](const Belt& b) { return b.facets.size() == 4 || b.facets.size() == 6; });
    }
};

inline BeltReport belts(const Polytope& p)
{
    BeltReport r;
    if (p.dimension() == 2) {
        Belt b;
        for (std::size_t f = 0; f < p.facets().size(); ++f) {
            b.facets.push_back(f);
        }
        r.belts.push_back(std::move(b));
        return r;
    }
    std::map<Vec, std::set<std::size_t>> classes;
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        const auto& cyc = p.facets()[f];
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const Vec d = vec::sub(p.vertices()[cyc[(k + 1) % cyc.size()]], p.vertices()[cyc[k]]);
            classes[vec::direction_class(d)].insert(f);
        }
    }
    for (auto& [dir, fs] : classes) {
        r.belts.push_back(Belt{dir, std::vector<std::size_t>(fs.begin(), fs.end())});
    }
    return r;
}

struct VenkovMcMullenReport {
    bool convex = true;  // (i), guaranteed by construction
    std::optional<Vec> center;
    FacetSymmetryReport facets;
    MinkowskiReport minkowski;
    BeltReport belt_report;
    std::vector<std::string> failed;  // subset of {"ii", "iii", "iv"}
    bool tiles() const { return failed.empty(); }
};

inline VenkovMcMullenReport venkov_mcmullen(const Polytope& p)
{
    VenkovMcMullenReport r;
    r.center = central_symmetry(p);
    r.facets = facet_symmetry(p);
    r.minkowski = minkowski_pairing(p);
    r.belt_report = belts(p);
    if (!r.center) {
        r.failed.emplace_back("ii");
    }
    if (!r.facets.all()) {
        r.failed.emplace_back("iii");
    }
    if (!r.belt_report.pass()) {
        r.failed.emplace_back("iv");
    }
    return r;
}

}  // namespace weaktile

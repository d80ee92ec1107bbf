/**
 * Open covers of spheres by sets containing no antipodal pair.
 *
 * A cover set is a small predicate tree. Caps {x : <x, n> < c} are the
 * leaves; bands, latitude zones and unions are built on top of them by the
 * lifting construction, which takes a cover of S^h (viewed as the equator
 * of S^{h+1}) to a cover of S^{h+1} with one more set and multiplicity at
 * most one higher.
 *
 * Coordinates: a point of S^{h+1} is (cos t * e, sin t) with e in S^h its
 * equatorial foot and t in [-pi/2, pi/2] its latitude; lifting always
 * appends the new coordinate last.
 */
#ifndef ANTIPODAL_SPHERE_COVERS_HPP
#define ANTIPODAL_SPHERE_COVERS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simplicial.hpp"

namespace antipodal {

inline constexpr double unit_norm_tolerance = 1e-12;
inline constexpr double normal_load_tolerance = 1e-9;
/// Points this close to a pole (relative foot length) lie in no band.
inline constexpr double pole_tolerance = 1e-12;

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

} // namespace detail

class SpherePoint
{
public:
    explicit SpherePoint(std::vector<double> coords)
        : coords_(std::move(coords))
    {
        if (coords_.empty())
            throw std::invalid_argument("SpherePoint: no coordinates");
        if (std::abs(detail::norm(coords_) - 1.0) > unit_norm_tolerance)
            throw std::invalid_argument("SpherePoint: coordinates are not a unit vector");
    }

    /// Scales a nonzero vector onto the sphere.
    static SpherePoint normalized(std::vector<double> v)
    {
        const double n = detail::norm(v);
        if (!(n > 0.0))
            throw std::invalid_argument("SpherePoint: cannot normalize the zero vector");
        for (double& x : v) x /= n;
        return SpherePoint(std::move(v));
    }

    int dimension() const noexcept { return static_cast<int>(coords_.size()) - 1; }
    std::span<const double> coords() const noexcept { return coords_; }
    double operator[](std::size_t i) const { return coords_.at(i); }

    SpherePoint antipode() const
    {
        SpherePoint out = *this;
        for (double& x : out.coords_) x = -x;
        return out;
    }

    /// Latitude arcsin(last coordinate), computed as atan2 for accuracy.
    double latitude() const
    {
        return std::atan2(coords_.back(), detail::norm(std::span(coords_).first(coords_.size() - 1)));
    }

    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

private:
    std::vector<double> coords_;
};

class CoverSet;

/// {x : <x, normal> < threshold}; antipodal-free whenever threshold <= 0.
struct Cap
{
    std::vector<double> normal;
    double threshold = 0.0;
};

/// Points whose latitude lies in (lower, upper) and whose equatorial foot
/// belongs to `base`, a set on the sphere one dimension down.
struct Band
{
    std::shared_ptr<const CoverSet> base;
    double lower = 0.0;
    double upper = 0.0;
};

struct LatitudeAbove
{
    double bound = 0.0;
};

struct LatitudeBelow
{
    double bound = 0.0;
};

struct Union
{
    std::vector<CoverSet> parts;
};

class CoverSet
{
public:
    using Node = std::variant<Cap, Band, LatitudeAbove, LatitudeBelow, Union>;

    static CoverSet cap(std::vector<double> normal, double threshold)
    {
        if (normal.size() < 2)
            throw std::invalid_argument("Cap: the normal needs at least two coordinates");
        if (std::abs(detail::norm(normal) - 1.0) > normal_load_tolerance)
            throw std::invalid_argument("Cap: normal is not a unit vector");
        return CoverSet(Cap{std::move(normal), threshold});
    }

    static CoverSet band(CoverSet base, double lower, double upper)
    {
        constexpr double half_pi = std::numbers::pi / 2;
        if (!(lower < upper) || !(upper < half_pi) || !(lower > -half_pi))
            throw std::invalid_argument("Band: need -pi/2 < lower < upper < pi/2");
        return CoverSet(Band{std::make_shared<const CoverSet>(std::move(base)), lower, upper});
    }

    static CoverSet latitude_above(double bound) { return CoverSet(LatitudeAbove{bound}); }
    static CoverSet latitude_below(double bound) { return CoverSet(LatitudeBelow{bound}); }

    static CoverSet union_of(std::vector<CoverSet> parts)
    {
        if (parts.empty())
            throw std::invalid_argument("Union: at least one part is required");
        CoverSet out(Union{std::move(parts)});
        out.sphere_dim(); // consistency check
        return out;
    }

    const Node& node() const noexcept { return node_; }

    /**
     * Dimension of the sphere this set lives on, when the tree pins it
     * down; latitude zones alone fit any sphere of dimension >= 1.
     */
    std::optional<int> sphere_dim() const
    {
        struct Visitor
        {
            std::optional<int> operator()(const Cap& c) const { return static_cast<int>(c.normal.size()) - 1; }
            std::optional<int> operator()(const Band& b) const
            {
                auto inner = b.base->sphere_dim();
                if (!inner) return std::nullopt;
                return *inner + 1;
            }
            std::optional<int> operator()(const LatitudeAbove&) const { return std::nullopt; }
            std::optional<int> operator()(const LatitudeBelow&) const { return std::nullopt; }
            std::optional<int> operator()(const Union& u) const
            {
                std::optional<int> dim;
                for (const auto& p : u.parts)
                {
                    auto d = p.sphere_dim();
                    if (d && dim && *d != *dim)
                        throw std::invalid_argument("Union: parts live on spheres of different dimensions");
                    if (d) dim = d;
                }
                return dim;
            }
        };
        return std::visit(Visitor{}, node_);
    }

    /// Membership of the point coords / scale.
    bool contains_scaled(std::span<const double> coords, double scale) const
    {
        struct Visitor
        {
            std::span<const double> x;
            double scale;

            bool operator()(const Cap& c) const { return detail::dot(x, c.normal) / scale < c.threshold; }

            bool operator()(const Band& b) const
            {
                const auto foot = x.first(x.size() - 1);
                const double r = detail::norm(foot);
                if (r / scale < pole_tolerance) return false;
                const double t = std::atan2(x.back(), r);
                return b.lower < t && t < b.upper && b.base->contains_scaled(foot, r);
            }

            bool operator()(const LatitudeAbove& z) const { return latitude() > z.bound; }
            bool operator()(const LatitudeBelow& z) const { return latitude() < z.bound; }

            bool operator()(const Union& u) const
            {
                for (const auto& p : u.parts)
                    if (p.contains_scaled(x, scale)) return true;
                return false;
            }

            double latitude() const { return std::atan2(x.back(), detail::norm(x.first(x.size() - 1))); }
        };
        return std::visit(Visitor{coords, scale}, node_);
    }

private:
    explicit CoverSet(Node n)
        : node_(std::move(n))
    {}

    Node node_;
};

inline bool membership(const CoverSet& s, const SpherePoint& x)
{
    if (auto d = s.sphere_dim(); d && *d != x.dimension())
        throw std::invalid_argument("membership: set lives on S^" + std::to_string(*d) + " but the point is on S^" + std::to_string(x.dimension()));
    if (x.dimension() < 1)
        throw std::invalid_argument("membership: points must lie on a sphere of dimension at least 1");
    return s.contains_scaled(x.coords(), 1.0);
}

struct Cover
{
    int sphere_dim = 0;
    std::vector<CoverSet> sets;
    std::optional<double> epsilon; ///< set by lift_cover

    Cover(int dim, std::vector<CoverSet> s, std::optional<double> eps = std::nullopt)
        : sphere_dim(dim), sets(std::move(s)), epsilon(eps)
    {
        if (sphere_dim < 1)
            throw std::invalid_argument("Cover: sphere dimension must be at least 1");
        for (const auto& set : sets)
        {
            auto d = set.sphere_dim();
            if (d && *d != sphere_dim)
                throw std::invalid_argument("Cover: a set lives on S^" + std::to_string(*d) + ", expected S^" + std::to_string(sphere_dim));
        }
    }

    std::size_t size() const noexcept { return sets.size(); }
};

/// Vertices of a regular simplex inscribed in S^h: h+2 unit vectors with
/// pairwise inner product -1/(h+1) summing to zero.
inline std::vector<SpherePoint> regular_simplex_vertices(int h)
{
    if (h < 1)
        throw std::invalid_argument("regular_simplex_vertices: need h >= 1");
    const auto n = static_cast<std::size_t>(h) + 2;
    // Coordinates in the orthonormal Helmert basis of the sum-zero
    // hyperplane of R^{h+2}, rescaled to unit length.
    const double scale = std::sqrt(static_cast<double>(n) / static_cast<double>(n - 1));
    std::vector<SpherePoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::vector<double> w(n - 1, 0.0);
        for (std::size_t j = 1; j < n; ++j)
        {
            const double jd = static_cast<double>(j);
            const double denom = std::sqrt(jd * (jd + 1.0));
            if (i < j) w[j - 1] = 1.0 / denom;
            else if (i == j) w[j - 1] = -jd / denom;
        }
        for (double& x : w) x *= scale;
        out.push_back(SpherePoint::normalized(std::move(w)));
    }
    return out;
}

/// h+2 open caps {<x, w_i> < 0} opposite the vertices of an inscribed
/// regular simplex. Exactly antipodal-free, covering, multiplicity h+1.
inline Cover cap_cover(int h)
{
    std::vector<CoverSet> sets;
    for (const auto& w : regular_simplex_vertices(h))
        sets.push_back(CoverSet::cap(std::vector<double>(w.coords().begin(), w.coords().end()), 0.0));
    return Cover(h, std::move(sets));
}

inline constexpr double default_lift_epsilon = 0.05;

/**
 * Lifts an n-set cover of S^h to an (n+1)-set cover of S^{h+1}:
 *   V_i     = band(U_i, -2e, 4e)                      for i < n
 *   V_n     = band(U_n, -2e, 4e) + latitude above 3e
 *   V_{n+1} = latitude below -e
 * Antipodal-freeness of U carries over, and the multiplicity grows by at
 * most one.
 */
inline Cover lift_cover(const Cover& base, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon < std::numbers::pi / 8))
        throw std::invalid_argument("lift_cover: epsilon must lie in (0, pi/8)");
    if (base.sets.empty())
        throw std::invalid_argument("lift_cover: the base cover has no sets");
    std::vector<CoverSet> sets;
    sets.reserve(base.size() + 1);
    for (std::size_t i = 0; i < base.size(); ++i)
    {
        CoverSet b = CoverSet::band(base.sets[i], -2.0 * epsilon, 4.0 * epsilon);
        if (i + 1 == base.size())
            sets.push_back(CoverSet::union_of({std::move(b), CoverSet::latitude_above(3.0 * epsilon)}));
        else
            sets.push_back(std::move(b));
    }
    sets.push_back(CoverSet::latitude_below(-epsilon));
    return Cover(base.sphere_dim + 1, std::move(sets), epsilon);
}

/// cap_cover(1) lifted up to S^h.
inline Cover lifted_cap_cover(int h, double epsilon = default_lift_epsilon)
{
    if (h < 1)
        throw std::invalid_argument("lifted_cap_cover: need h >= 1");
    Cover c = cap_cover(1);
    for (int d = 2; d <= h; ++d) c = lift_cover(c, epsilon);
    return c;
}

// ---------------------------------------------------------------------------
// Sampling

struct AntipodalPair
{
    SpherePoint point;
    SpherePoint antipode;

    explicit AntipodalPair(SpherePoint p)
        : point(std::move(p)), antipode(point.antipode())
    {}
};

struct SampleSet
{
    int sphere_dim = 0;
    std::size_t random_count = 0;
    std::uint64_t seed = 0;
    std::size_t battery_count = 0;
    std::vector<AntipodalPair> pairs; ///< structured battery first, then random pairs
};

namespace detail {

// Uniform double in (0, 1] from the top 53 bits.
inline double unit_uniform(std::mt19937_64& rng)
{
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

inline std::vector<SpherePoint> lift_points(const std::vector<SpherePoint>& lower, std::span<const double> latitudes)
{
    std::vector<SpherePoint> out;
    for (const auto& p : lower)
    {
        for (double t : latitudes)
        {
            std::vector<double> v;
            v.reserve(p.coords().size() + 1);
            for (double x : p.coords()) v.push_back(std::cos(t) * x);
            v.push_back(std::sin(t));
            out.push_back(SpherePoint::normalized(std::move(v)));
        }
    }
    return out;
}

// One representative per antipodal pair, without duplicates.
inline std::vector<SpherePoint> structured_battery(int h, std::span<const double> latitudes)
{
    std::vector<SpherePoint> reps;
    std::set<std::vector<double>> seen;
    auto add = [&](SpherePoint p) {
        std::vector<double> key(p.coords().begin(), p.coords().end());
        std::vector<double> anti(key);
        for (double& x : anti) x = -x;
        if (seen.contains(key) || seen.contains(anti)) return;
        seen.insert(std::move(key));
        reps.push_back(std::move(p));
    };

    const auto n = static_cast<std::size_t>(h) + 1;
    const auto w = regular_simplex_vertices(h);
    for (const auto& v : w) add(v);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
        {
            std::vector<double> m(n);
            for (std::size_t c = 0; c < n; ++c) m[c] = w[i][c] + w[j][c];
            add(SpherePoint::normalized(std::move(m)));
        }
    for (std::size_t axis = 0; axis < n; ++axis)
    {
        std::vector<double> e(n, 0.0);
        e[axis] = 1.0;
        add(SpherePoint(std::move(e)));
    }
    if (h >= 2 && !latitudes.empty())
    {
        std::vector<SpherePoint> lower;
        for (const auto& p : structured_battery(h - 1, latitudes))
        {
            lower.push_back(p);
            lower.push_back(p.antipode());
        }
        for (auto& p : lift_points(lower, latitudes)) add(std::move(p));
    }
    return reps;
}

} // namespace detail

/**
 * `count` seeded pseudo-random antipodal pairs on S^h, preceded by a fixed
 * battery: the inscribed simplex vertices, normalized midpoints of vertex
 * pairs, and the coordinate poles. When `battery_latitudes` is nonempty the
 * battery of S^{h-1} is also lifted to each of those latitudes, recursively,
 * so that every latitude zone of a lifted cover is probed. Deterministic in
 * (h, count, seed, battery_latitudes).
 */
inline SampleSet sample_sphere(int h, std::size_t count, std::uint64_t seed, std::span<const double> battery_latitudes = {})
{
    if (h < 1)
        throw std::invalid_argument("sample_sphere: need h >= 1");
    if (count < 1)
        throw std::invalid_argument("sample_sphere: need at least one sample");
    SampleSet s;
    s.sphere_dim = h;
    s.random_count = count;
    s.seed = seed;
    for (auto& p : detail::structured_battery(h, battery_latitudes))
        s.pairs.emplace_back(std::move(p));
    s.battery_count = s.pairs.size();

    std::mt19937_64 rng(seed);
    const auto n = static_cast<std::size_t>(h) + 1;
    s.pairs.reserve(s.battery_count + count);
    std::vector<double> g(n + 1);
    while (s.pairs.size() < s.battery_count + count)
    {
        // Box-Muller, two normals per draw.
        for (std::size_t i = 0; i < n; i += 2)
        {
            const double r = std::sqrt(-2.0 * std::log(detail::unit_uniform(rng)));
            const double phi = 2.0 * std::numbers::pi * detail::unit_uniform(rng);
            g[i] = r * std::cos(phi);
            g[i + 1] = r * std::sin(phi);
        }
        std::vector<double> v(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
        if (detail::norm(v) < 1e-6) continue;
        s.pairs.emplace_back(SpherePoint::normalized(std::move(v)));
    }
    return s;
}

namespace detail {

struct LatitudeCollector
{
    std::set<double>& out;
    void operator()(const Cap&) const {}
    void operator()(const Band& b) const
    {
        out.insert(b.lower);
        out.insert(b.upper);
        std::visit(*this, b.base->node());
    }
    void operator()(const LatitudeAbove& z) const { out.insert(z.bound); }
    void operator()(const LatitudeBelow& z) const { out.insert(z.bound); }
    void operator()(const Union& u) const
    {
        for (const auto& p : u.parts) std::visit(*this, p.node());
    }
};

} // namespace detail

/// Midpoints between consecutive latitude thresholds found anywhere in the
/// cover's predicate trees; one latitude per zone in which the set of
/// active bands and polar zones is constant.
inline std::vector<double> battery_latitudes(const Cover& c)
{
    std::set<double> thresholds;
    for (const auto& s : c.sets) std::visit(detail::LatitudeCollector{thresholds}, s.node());
    std::vector<double> t(thresholds.begin(), thresholds.end());
    std::vector<double> mids;
    for (std::size_t i = 1; i < t.size(); ++i) mids.push_back(0.5 * (t[i - 1] + t[i]));
    return mids;
}

/// sample_sphere with the battery adapted to the cover's latitude zones.
inline SampleSet sample_for_cover(const Cover& c, std::size_t count, std::uint64_t seed)
{
    const auto lats = battery_latitudes(c);
    return sample_sphere(c.sphere_dim, count, seed, lats);
}

// ---------------------------------------------------------------------------
// Verification

struct AntipodalViolation
{
    SpherePoint point;
    std::size_t set_index;
};

struct MultiplicityWitness
{
    SpherePoint point;
    std::vector<std::size_t> sets;
};

struct SampleReport
{
    std::size_t samples_used = 0; ///< antipodal pairs examined
    std::size_t battery_count = 0;
    std::uint64_t seed = 0;
    bool covered = true;
    std::size_t uncovered_points = 0;
    std::optional<SpherePoint> uncovered_witness;
    bool antipodal_free = true;
    std::size_t antipodal_violations = 0;
    std::optional<AntipodalViolation> antipodal_witness;
    std::size_t max_multiplicity = 0;
    std::optional<MultiplicityWitness> multiplicity_witness;
    std::vector<std::size_t> multiplicity_histogram; ///< [m] = points in exactly m sets

    bool passes() const noexcept { return covered && antipodal_free; }
};

namespace detail {

inline std::vector<std::size_t> members(const Cover& c, const SpherePoint& x)
{
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < c.sets.size(); ++i)
        if (c.sets[i].contains_scaled(x.coords(), 1.0)) in.push_back(i);
    return in;
}

inline void check_dims(const Cover& c, const SampleSet& s)
{
    if (c.sphere_dim != s.sphere_dim)
        throw std::invalid_argument("verify_cover: samples live on S^" + std::to_string(s.sphere_dim) + " but the cover on S^" + std::to_string(c.sphere_dim));
}

} // namespace detail

inline SampleReport verify_cover(const Cover& c, const SampleSet& samples)
{
    detail::check_dims(c, samples);
    SampleReport r;
    r.samples_used = samples.pairs.size();
    r.battery_count = samples.battery_count;
    r.seed = samples.seed;
    r.multiplicity_histogram.assign(c.size() + 1, 0);

    std::vector<unsigned char> in_point(c.size());
    for (const auto& pair : samples.pairs)
    {
        std::vector<std::size_t> a = detail::members(c, pair.point);
        std::vector<std::size_t> b = detail::members(c, pair.antipode);
        for (const auto* pt : {&pair.point, &pair.antipode})
        {
            const auto& in = pt == &pair.point ? a : b;
            ++r.multiplicity_histogram[in.size()];
            if (in.empty())
            {
                ++r.uncovered_points;
                if (!r.uncovered_witness) r.uncovered_witness = *pt;
            }
            if (!r.multiplicity_witness || in.size() > r.max_multiplicity)
            {
                r.max_multiplicity = in.size();
                r.multiplicity_witness = MultiplicityWitness{*pt, in};
            }
        }
        for (std::size_t i : a)
        {
            if (std::binary_search(b.begin(), b.end(), i))
            {
                ++r.antipodal_violations;
                if (!r.antipodal_witness) r.antipodal_witness = AntipodalViolation{pair.point, i};
            }
        }
    }
    r.covered = r.uncovered_points == 0;
    r.antipodal_free = r.antipodal_violations == 0;
    return r;
}

struct EmpiricalNerve
{
    std::size_t vertex_count = 0;
    std::vector<Face> faces; ///< by size, then lexicographically; downward closed

    int dimension() const noexcept
    {
        int d = -1;
        for (const auto& f : faces) d = std::max(d, f.dimension());
        return d;
    }

    std::size_t count(int dim) const noexcept
    {
        return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [dim](const Face& f) { return f.dimension() == dim; }));
    }
};

/// Nerve witnessed by the samples: a face for every family of sets sharing
/// a sample point, closed under taking nonempty subfamilies.
inline EmpiricalNerve empirical_nerve(const Cover& c, const SampleSet& samples)
{
    detail::check_dims(c, samples);
    std::set<std::vector<Vertex>> signatures;
    for (const auto& pair : samples.pairs)
        for (const auto* pt : {&pair.point, &pair.antipode})
        {
            auto in = detail::members(c, *pt);
            if (in.empty()) continue;
            signatures.emplace(in.begin(), in.end());
        }

    std::set<std::vector<Vertex>> closed;
    for (const auto& sig : signatures)
    {
        if (closed.contains(sig)) continue;
        if (sig.size() >= 31)
            throw std::length_error("empirical_nerve: a point lies in too many sets to enumerate its subfamilies");
        const std::uint32_t subsets = std::uint32_t{1} << sig.size();
        for (std::uint32_t mask = 1; mask < subsets; ++mask)
        {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < sig.size(); ++i)
                if (mask & (std::uint32_t{1} << i)) sub.push_back(sig[i]);
            closed.insert(std::move(sub));
        }
    }

    EmpiricalNerve n;
    n.vertex_count = c.size();
    for (const auto& f : closed) n.faces.emplace_back(f);
    std::stable_sort(n.faces.begin(), n.faces.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return n;
}

} // namespace antipodal

#endif // ANTIPODAL_SPHERE_COVERS_HPP

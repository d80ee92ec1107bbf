#include <cmath>
#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "antipodal/sphere_covers.hpp"

using namespace antipodal;
using Catch::Approx;

namespace {

double dot(const SpherePoint& a, std::span<const double> b)
{
    double s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

SpherePoint random_point(std::mt19937_64& rng, int h)
{
    std::normal_distribution<double> g;
    std::vector<double> v(static_cast<std::size_t>(h) + 1);
    for (double& x : v) x = g(rng);
    return SpherePoint::normalized(v);
}

} // namespace

TEST_CASE("regular simplex vertices", "[covers]")
{
    for (int h = 1; h <= 8; ++h)
    {
        const auto w = regular_simplex_vertices(h);
        REQUIRE(w.size() == static_cast<std::size_t>(h) + 2);
        std::vector<double> sum(static_cast<std::size_t>(h) + 1, 0.0);
        for (std::size_t i = 0; i < w.size(); ++i)
        {
            CHECK(w[i].dimension() == h);
            for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w[i][c];
            for (std::size_t j = i + 1; j < w.size(); ++j)
                CHECK(std::abs(dot(w[i], w[j].coords()) + 1.0 / (h + 1)) <= 1e-9);
        }
        double n = 0;
        for (double x : sum) n += x * x;
        CHECK(std::sqrt(n) <= 1e-9);
    }
    CHECK(dot(regular_simplex_vertices(1)[0], regular_simplex_vertices(1)[1].coords()) == Approx(-0.5));
    CHECK_THROWS_AS(regular_simplex_vertices(0), std::invalid_argument);
}

TEST_CASE("cap membership", "[covers]")
{
    const auto cap = CoverSet::cap({1.0, 0.0, 0.0}, 0.0);
    const SpherePoint x = SpherePoint::normalized({-0.3, std::sqrt(1 - 0.09), 0.0});
    CHECK(membership(cap, x));
    CHECK_FALSE(membership(cap, x.antipode()));
    CHECK_THROWS_AS(membership(cap, SpherePoint({1.0, 0.0})), std::invalid_argument);
    CHECK_THROWS_AS(CoverSet::cap({1.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("caps with nonpositive threshold never hold an antipodal pair", "[covers][property]")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial)
    {
        const int h = 1 + static_cast<int>(rng() % 5);
        const auto w = random_point(rng, h);
        const double threshold = -std::uniform_real_distribution<double>(0, 0.5)(rng) * (trial % 2);
        const auto cap = CoverSet::cap(std::vector<double>(w.coords().begin(), w.coords().end()), threshold);
        // Adversarial: nearly orthogonal to the normal.
        auto x = random_point(rng, h);
        std::vector<double> v(x.coords().begin(), x.coords().end());
        const double proj = dot(x, w.coords());
        const double nudge = std::ldexp(1.0, -40 - static_cast<int>(rng() % 12)) * ((rng() & 1) ? 1 : -1);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= (proj - nudge) * w[i];
        const auto y = SpherePoint::normalized(v);
        for (const auto& p : {x, y})
            CHECK_FALSE((membership(cap, p) && membership(cap, p.antipode())));
    }
}

TEST_CASE("cap cover structure", "[covers]")
{
    for (int h = 1; h <= 6; ++h)
    {
        const auto cover = cap_cover(h);
        REQUIRE(cover.size() == static_cast<std::size_t>(h) + 2);
        const auto w = regular_simplex_vertices(h);
        for (std::size_t i = 0; i < w.size(); ++i)
        {
            std::size_t count = 0;
            for (std::size_t j = 0; j < cover.size(); ++j)
            {
                const bool in = membership(cover.sets[j], w[i]);
                CHECK(in == (i != j));
                count += in;
            }
            CHECK(count == static_cast<std::size_t>(h) + 1);
        }
    }
}

TEST_CASE("every point lies in some cap and never in all of them", "[covers][property]")
{
    std::mt19937_64 rng(17);
    for (int h = 1; h <= 6; ++h)
    {
        const auto cover = cap_cover(h);
        for (int trial = 0; trial < 500; ++trial)
        {
            const auto x = random_point(rng, h);
            std::size_t m = 0;
            for (const auto& s : cover.sets) m += membership(s, x);
            CHECK(m >= 1);
            CHECK(m <= static_cast<std::size_t>(h) + 1);
        }
    }
}

TEST_CASE("lift_cover shape", "[covers]")
{
    const auto base = cap_cover(1);
    const auto lifted = lift_cover(base, 0.05);
    CHECK(lifted.sphere_dim == 2);
    CHECK(lifted.size() == 4);
    CHECK(lifted.epsilon == 0.05);
    CHECK(std::holds_alternative<Band>(lifted.sets[0].node()));
    CHECK(std::holds_alternative<Band>(lifted.sets[1].node()));
    CHECK(std::holds_alternative<Union>(lifted.sets[2].node()));
    CHECK(std::holds_alternative<LatitudeBelow>(lifted.sets[3].node()));

    const SpherePoint north({0.0, 0.0, 1.0});
    for (std::size_t i = 0; i < lifted.size(); ++i) CHECK(membership(lifted.sets[i], north) == (i == 2));
    const SpherePoint south({0.0, 0.0, -1.0});
    for (std::size_t i = 0; i < lifted.size(); ++i) CHECK(membership(lifted.sets[i], south) == (i == 3));

    CHECK_THROWS_AS(lift_cover(base, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lift_cover(base, std::numbers::pi / 8), std::invalid_argument);
    CHECK_NOTHROW(lift_cover(base, 0.39));
}

TEST_CASE("band membership", "[covers]")
{
    const auto band = CoverSet::band(CoverSet::cap({1.0, 0.0}, 0.0), -0.1, 0.2);
    CHECK_FALSE(membership(band, SpherePoint({0.0, 0.0, 1.0})));
    const double t = 0.15;
    CHECK(membership(band, SpherePoint::normalized({-std::cos(t), 0.0, std::sin(t)})));
    CHECK_FALSE(membership(band, SpherePoint::normalized({-std::cos(0.25), 0.0, std::sin(0.25)})));
    CHECK_FALSE(membership(band, SpherePoint::normalized({std::cos(t), 0.0, std::sin(t)})));
    CHECK_THROWS_AS(CoverSet::band(CoverSet::cap({1.0, 0.0}, 0.0), 0.2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(CoverSet::band(CoverSet::cap({1.0, 0.0}, 0.0), 0.1, std::numbers::pi / 2), std::invalid_argument);
}

TEST_CASE("latitude zones of the lift cover every point", "[covers][property]")
{
    const double eps = 0.05;
    const auto base = cap_cover(2);
    const auto lifted = lift_cover(base, eps);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 3000; ++trial)
    {
        const auto x = random_point(rng, 3);
        const double t = x.latitude();
        std::size_t bands = 0;
        for (std::size_t i = 0; i < base.size(); ++i)
            bands += std::visit([&](const auto& n) {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Band>) return membership(lifted.sets[i], x);
                else return membership(std::get<Union>(lifted.sets[i].node()).parts[0], x);
            }, lifted.sets[i].node());
        if (t >= -eps && t <= 3 * eps) CHECK(bands >= 1);
        if (t > 3 * eps) CHECK(membership(lifted.sets[base.size() - 1], x));
        if (t < -eps) CHECK(membership(lifted.sets[base.size()], x));
    }
}

TEST_CASE("sampling is deterministic and unit-norm", "[covers][sampling]")
{
    const auto a = sample_sphere(3, 500, 42);
    const auto b = sample_sphere(3, 500, 42);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) CHECK(a.pairs[i].point == b.pairs[i].point);
    CHECK(a.pairs.size() == a.battery_count + 500);
    const auto c = sample_sphere(3, 500, 43);
    CHECK_FALSE(c.pairs.back().point == a.pairs.back().point);

    for (const auto& p : a.pairs)
    {
        double n = 0;
        for (double x : p.point.coords()) n += x * x;
        CHECK(std::abs(std::sqrt(n) - 1.0) <= 1e-12);
        CHECK(p.antipode == p.point.antipode());
    }
    CHECK_THROWS_AS(sample_sphere(2, 0, 1), std::invalid_argument);
}

TEST_CASE("battery contains the simplex vertices and a pole pair", "[covers][sampling]")
{
    const auto s = sample_sphere(2, 1, 0);
    for (const auto& w : regular_simplex_vertices(2))
    {
        bool found = false;
        for (std::size_t i = 0; i < s.battery_count; ++i) found = found || s.pairs[i].point == w;
        CHECK(found);
    }
    bool pole = false;
    for (std::size_t i = 0; i < s.battery_count; ++i) pole = pole || std::abs(s.pairs[i].point[2]) == 1.0;
    CHECK(pole);

    const auto lifted = lifted_cap_cover(3, 0.05);
    const auto lats = battery_latitudes(lifted);
    REQUIRE(lats.size() == 3);
    CHECK(lats[0] == Approx(-0.075));
    CHECK(lats[1] == Approx(0.05));
    CHECK(lats[2] == Approx(0.175));
    CHECK(sample_for_cover(lifted, 1, 0).battery_count > s.battery_count);
}

TEST_CASE("verify cap covers", "[covers][verify]")
{
    const auto cover = cap_cover(2);
    const auto r = verify_cover(cover, sample_sphere(2, 20000, 42));
    CHECK(r.covered);
    CHECK(r.antipodal_free);
    CHECK(r.max_multiplicity == 3);
    REQUIRE(r.multiplicity_witness);
    std::size_t m = 0;
    for (const auto& s : cover.sets) m += membership(s, r.multiplicity_witness->point);
    CHECK(m == 3);
    CHECK(r.multiplicity_witness->sets.size() == 3);
}

TEST_CASE("a missing cap leaves an uncovered witness near its centre", "[covers][verify]")
{
    auto cover = cap_cover(2);
    const auto w0 = regular_simplex_vertices(2)[0];
    cover.sets.erase(cover.sets.begin());
    const auto r = verify_cover(cover, sample_sphere(2, 20000, 42));
    CHECK_FALSE(r.covered);
    REQUIRE(r.uncovered_witness);
    for (const auto& s : cover.sets) CHECK_FALSE(membership(s, *r.uncovered_witness));
    CHECK(dot(*r.uncovered_witness, w0.coords()) < -0.9);
}

TEST_CASE("a fat cap is caught holding an antipodal pair", "[covers][verify]")
{
    const Cover cover(2, {CoverSet::cap({0.0, 0.0, 1.0}, 0.5)});
    const auto r = verify_cover(cover, sample_sphere(2, 1000, 42));
    CHECK_FALSE(r.antipodal_free);
    REQUIRE(r.antipodal_witness);
    const auto& s = cover.sets[r.antipodal_witness->set_index];
    CHECK(membership(s, r.antipodal_witness->point));
    CHECK(membership(s, r.antipodal_witness->point.antipode()));
}

TEST_CASE("lifted covers keep the multiplicity bound", "[covers][verify]")
{
    auto cover = cap_cover(1);
    auto r = verify_cover(cover, sample_for_cover(cover, 20000, 42));
    CHECK(r.max_multiplicity == 2);
    for (int h = 2; h <= 3; ++h)
    {
        const auto previous = r.max_multiplicity;
        cover = lift_cover(cover, 0.05);
        r = verify_cover(cover, sample_for_cover(cover, 20000, 42));
        CHECK(r.covered);
        CHECK(r.antipodal_free);
        CHECK(r.max_multiplicity <= previous + 1);
        CHECK(r.max_multiplicity == static_cast<std::size_t>(h) + 1);
    }
}

TEST_CASE("empirical nerves", "[covers][nerve]")
{
    const auto n1 = empirical_nerve(cap_cover(1), sample_sphere(1, 5000, 42));
    CHECK(n1.vertex_count == 3);
    CHECK(n1.dimension() == 1);
    CHECK(n1.count(0) == 3);
    CHECK(n1.count(1) == 3);

    const auto n2 = empirical_nerve(cap_cover(2), sample_sphere(2, 5000, 42));
    CHECK(n2.vertex_count == 4);
    CHECK(n2.dimension() == 2);

    const auto lifted = lift_cover(cap_cover(1), 0.05);
    const auto n3 = empirical_nerve(lifted, sample_for_cover(lifted, 20000, 42));
    CHECK(n3.vertex_count == 4);
    CHECK(n3.dimension() <= 2);

    // downward closed
    for (const auto& f : n2.faces)
        for (const auto& g : facets_of(f)) CHECK(std::find(n2.faces.begin(), n2.faces.end(), g) != n2.faces.end());
}

TEST_CASE("dimension mismatches are rejected", "[covers]")
{
    CHECK_THROWS_AS(verify_cover(cap_cover(2), sample_sphere(3, 10, 1)), std::invalid_argument);
    CHECK_THROWS_AS(Cover(3, {CoverSet::cap({1.0, 0.0, 0.0}, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(CoverSet::union_of({CoverSet::cap({1.0, 0.0}, 0.0), CoverSet::cap({1.0, 0.0, 0.0}, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(SpherePoint({1.0, 1.0}), std::invalid_argument);
}

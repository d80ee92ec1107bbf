#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "antipodal/deleted_square.hpp"
#include "antipodal/json_io.hpp"

using namespace antipodal;

TEST_CASE("cover files round-trip", "[json]")
{
    for (const Cover& c : {cap_cover(3), lifted_cap_cover(4, 0.05)})
    {
        const Json j = to_json(c);
        const Cover back = cover_from_json(Json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(back.sphere_dim == c.sphere_dim);
        CHECK(back.epsilon == c.epsilon);

        // Same membership on random points.
        std::mt19937_64 rng(1);
        const auto samples = sample_sphere(c.sphere_dim, 300, 9);
        for (const auto& p : samples.pairs)
            for (std::size_t i = 0; i < c.size(); ++i) CHECK(membership(c.sets[i], p.point) == membership(back.sets[i], p.point));
    }
}

TEST_CASE("cover file schema", "[json]")
{
    const Json j = to_json(lift_cover(cap_cover(1), 0.05));
    CHECK(j.at("sphere_dim") == 2);
    CHECK(j.at("sets").size() == 4);
    CHECK(j.at("sets")[0].at("kind") == "band");
    CHECK(j.at("sets")[0].at("base").at("kind") == "cap");
    CHECK(j.at("sets")[0].at("lower") == -0.1);
    CHECK(j.at("sets")[2].at("kind") == "union");
    CHECK(j.at("sets")[2].at("parts")[1].at("kind") == "latitude_above");
    CHECK(j.at("sets")[3].at("kind") == "latitude_below");
    CHECK(j.at("sets")[3].at("bound") == -0.05);
}

TEST_CASE("externally authored cover files load", "[json]")
{
    const auto j = Json::parse(R"({
        "sphere_dim": 1,
        "sets": [
            {"kind": "cap", "normal": [1.0, 0.0], "threshold": 0.0},
            {"kind": "union", "parts": [
                {"kind": "cap", "normal": [-1.0, 0.0], "threshold": 0.0},
                {"kind": "cap", "normal": [0.0, 1.0], "threshold": -0.2}
            ]}
        ]
    })");
    const Cover c = cover_from_json(j);
    CHECK(c.size() == 2);
    CHECK_FALSE(c.epsilon.has_value());
}

TEST_CASE("malformed cover files are rejected", "[json]")
{
    CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"sets": []})")), std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"sphere_dim": 1, "sets": [{"kind": "blob"}]})")), std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"sphere_dim": 1, "sets": [{"kind": "cap", "normal": [1.0, 0.1], "threshold": 0}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"sphere_dim": 2, "sets": [{"kind": "cap", "normal": [1.0, 0.0], "threshold": 0}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"sphere_dim": 2, "sets": [{"kind": "band", "base": {"kind": "cap", "normal": [1.0, 0.0], "threshold": 0}, "lower": 0.1, "upper": 2.0}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(cover_from_json(Json::parse(R"({"sphere_dim": 1.5, "sets": []})")), std::invalid_argument);
    // unit within 1e-9 is accepted
    CHECK_NOTHROW(cover_from_json(Json::parse(R"({"sphere_dim": 1, "sets": [{"kind": "cap", "normal": [1.0000000001, 0.0], "threshold": 0}]})")));
}

TEST_CASE("complex listing", "[json]")
{
    const Json j = complex_to_json(orbit_complex(deleted_square(skeleton_complex(3, 1))));
    CHECK(j.at("dimension") == 1);
    CHECK(j.at("cell_counts") == Json::array({3, 3}));
    CHECK(j.at("cells").size() == 6);
    CHECK(j.at("cells")[0].at("cell") == "{{0},{1}}");
    CHECK(j.at("cells")[3].at("boundary").size() == 2);
}

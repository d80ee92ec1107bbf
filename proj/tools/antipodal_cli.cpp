// Command-line driver: multiplicity tables, cover construction and
// verification, and the homology / cover checks. Every command prints one
// JSON document on stdout; the exit code is 0 iff all verdicts pass.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "antipodal/antipodal.hpp"

using namespace antipodal;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json q_entry_json(const QEntry& e)
{
    Json j{{"h", e.h}, {"q", e.q}};
    j["min_vertices"] = e.min_vertices ? Json(*e.min_vertices) : Json(nullptr);
    return j;
}

Cover load_cover(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cover file " + path);
    Json j;
    try
    {
        j = Json::parse(in);
    }
    catch (const Json::parse_error& e)
    {
        throw std::runtime_error("cover file " + path + " is not valid JSON: " + e.what());
    }
    return cover_from_json(j);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Antipodal-free sphere covers and deleted-square homology checks"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    int q_h = 0;
    auto* q_cmd = app.add_subcommand("q", "Minimal multiplicity and cardinality for S^h");
    q_cmd->add_option("--h", q_h, "Sphere dimension")->required()->check(CLI::NonNegativeNumber);

    int table_h_max = 0;
    auto* table_cmd = app.add_subcommand("table", "Table of minimal multiplicities and cardinalities");
    table_cmd->add_option("--h-max", table_h_max, "Largest sphere dimension")->required()->check(CLI::NonNegativeNumber);

    auto* cover_cmd = app.add_subcommand("cover", "Build or verify sphere covers");
    cover_cmd->require_subcommand(1);

    int build_dim = 1;
    std::string build_method = "caps";
    double build_epsilon = default_lift_epsilon;
    std::string build_out;
    auto* build_cmd = cover_cmd->add_subcommand("build", "Write a cover file");
    build_cmd->add_option("--dim", build_dim, "Sphere dimension")->required()->check(CLI::PositiveNumber);
    build_cmd->add_option("--method", build_method, "caps: inscribed-simplex caps; lift: caps on S^1 lifted to S^dim")
        ->check(CLI::IsMember({"caps", "lift"}));
    build_cmd->add_option("--epsilon", build_epsilon, "Band width parameter for lifting, in (0, pi/8)");
    build_cmd->add_option("--out", build_out, "Output cover file")->required();

    std::string verify_in;
    std::size_t verify_samples = default_samples;
    std::uint64_t verify_seed = default_seed;
    bool verify_nerve = false;
    auto* verify_cmd = cover_cmd->add_subcommand("verify", "Verify a cover file by sampling");
    verify_cmd->add_option("--in", verify_in, "Cover file")->required();
    verify_cmd->add_option("--samples", verify_samples, "Random antipodal pairs")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_seed, "Sampling seed");
    verify_cmd->add_flag("--nerve", verify_nerve, "Also report the empirical nerve");

    std::string check_id;
    CheckParams params;
    int check_k = 0, check_h = 0, check_h_max = 0;
    std::string check_parity;
    auto* check_cmd = app.add_subcommand("check", "Run a named check");
    check_cmd->add_option("--id", check_id, "thm4.3-odd | thm4.3-even | remark4.4 | lemma4.1-lift | q-table")->required();
    auto* k_opt = check_cmd->add_option("--k", check_k, "Case parameter k");
    auto* h_opt = check_cmd->add_option("--h", check_h, "Target sphere dimension (lemma4.1-lift)");
    auto* hmax_opt = check_cmd->add_option("--h-max", check_h_max, "Largest sphere dimension (q-table)");
    auto* parity_opt = check_cmd->add_option("--parity", check_parity, "odd | even (remark4.4)");
    check_cmd->add_option("--epsilon", params.epsilon, "Band width parameter for lifting");
    check_cmd->add_option("--samples", params.samples, "Random antipodal pairs")->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", params.seed, "Sampling seed");
    check_cmd->add_flag("--allow-large", params.allow_large, "Permit the k = 4 even case");

    std::size_t complex_vertices = 3;
    int complex_k = 1;
    bool complex_orbit = false;
    auto* complex_cmd = app.add_subcommand("complex", "Dump the deleted square of a simplex skeleton as JSON");
    complex_cmd->add_option("--vertices", complex_vertices, "Vertices of the simplex")->required()->check(CLI::PositiveNumber);
    complex_cmd->add_option("--k", complex_k, "Skeleton dimension")->required();
    complex_cmd->add_flag("--orbit", complex_orbit, "Dump the orbit complex instead");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*q_cmd)
        {
            emit(q_entry_json(q_table(q_h).back()));
            return 0;
        }
        if (*table_cmd)
        {
            Json rows = Json::array();
            for (const auto& e : q_table(table_h_max)) rows.push_back(q_entry_json(e));
            emit(Json{{"h_max", table_h_max}, {"table", rows}});
            return 0;
        }
        if (*build_cmd)
        {
            const Cover cover = build_method == "caps" ? cap_cover(build_dim) : lifted_cap_cover(build_dim, build_epsilon);
            std::ofstream out(build_out);
            if (!out) throw std::runtime_error("cannot write " + build_out);
            out << to_json(cover).dump(2) << '\n';
            Json j{{"command", "cover build"}, {"method", build_method}, {"sphere_dim", cover.sphere_dim}, {"sets", cover.size()}, {"out", build_out}};
            if (cover.epsilon) j["epsilon"] = *cover.epsilon;
            emit(j);
            return 0;
        }
        if (*verify_cmd)
        {
            const Cover cover = load_cover(verify_in);
            const SampleSet samples = sample_for_cover(cover, verify_samples, verify_seed);
            const SampleReport report = verify_cover(cover, samples);
            Json j{{"command", "cover verify"}, {"in", verify_in}, {"sphere_dim", cover.sphere_dim}, {"sets", cover.size()},
                   {"random_pairs", verify_samples}, {"report", to_json(report)}};
            if (verify_nerve) j["nerve"] = to_json(empirical_nerve(cover, samples));
            j["verdict"] = report.passes() ? "pass" : "fail";
            emit(j);
            return report.passes() ? 0 : 1;
        }
        if (*check_cmd)
        {
            if (*k_opt) params.k = check_k;
            if (*h_opt) params.h = check_h;
            if (*hmax_opt) params.h_max = check_h_max;
            if (*parity_opt) params.parity = check_parity;
            const TheoremCheck c = run_check(check_id, params);
            emit(c.to_json());
            return c.verdict ? 0 : 1;
        }
        if (*complex_cmd)
        {
            const auto D = deleted_square(skeleton_complex(complex_vertices, complex_k));
            emit(complex_orbit ? complex_to_json(orbit_complex(D)) : complex_to_json(D));
            return 0;
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

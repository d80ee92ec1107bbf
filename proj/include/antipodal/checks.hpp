/**
 * Machine-checked claims about deleted squares and sphere covers.
 *
 * A check runs one family of computations and records each claim it tests
 * as {"claim", "expected", "actual", "pass"}; the verdict is the
 * conjunction of the recorded "pass" fields, so it can be recomputed from
 * the evidence alone.
 *
 * Ids:
 *   thm4.3-odd     k-skeleton of the 2k-simplex
 *   thm4.3-even    (k+1)-skeleton of the (2k+1)-simplex
 *   remark4.4      the k = 1 instances of both, where free facets vanish
 *   lemma4.1-lift  lifted cap covers from S^1 up to S^h
 *   q-table        multiplicity / cardinality table up to h_max
 */
#ifndef ANTIPODAL_CHECKS_HPP
#define ANTIPODAL_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "deleted_square.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "q_table.hpp"
#include "simplicial.hpp"
#include "sphere_covers.hpp"

namespace antipodal {

inline constexpr std::size_t default_samples = 100000;
inline constexpr std::uint64_t default_seed = 42;
inline constexpr int max_odd_k = 5;
inline constexpr int max_even_k_default = 3;
inline constexpr int max_even_k_large = 4;

struct CheckParams
{
    std::optional<int> k;
    std::optional<std::string> parity; ///< "odd" or "even", for remark4.4
    std::optional<int> h;
    std::optional<int> h_max;
    double epsilon = default_lift_epsilon;
    std::size_t samples = default_samples;
    std::uint64_t seed = default_seed;
    bool allow_large = false;
};

struct TheoremCheck
{
    std::string id;
    Json parameters = Json::object();
    bool verdict = true;
    Json evidence = Json::object();

    void claim(std::string text, Json expected, Json actual)
    {
        const bool ok = expected == actual;
        evidence["claims"].push_back(Json{{"claim", std::move(text)}, {"expected", std::move(expected)}, {"actual", std::move(actual)}, {"pass", ok}});
        verdict = verdict && ok;
    }

    Json to_json() const { return Json{{"id", id}, {"parameters", parameters}, {"verdict", verdict ? "pass" : "fail"}, {"evidence", evidence}}; }
};

/// Recomputes a check's verdict from its serialized evidence.
inline bool verdict_from_evidence(const Json& check)
{
    const auto& ev = check.at("evidence");
    if (!ev.contains("claims")) return true;
    for (const auto& c : ev.at("claims"))
        if (!c.at("pass").get<bool>() || c.at("expected") != c.at("actual")) return false;
    return true;
}

namespace detail {

template <typename Cell>
Json complex_summary(const CellComplex<Cell>& c, const BettiProfile& p)
{
    Json j = to_json(p);
    j["dimension"] = c.dimension();
    j["top_homology_vanishes"] = !p.betti.empty() && p.betti.back() == 0;
    return j;
}

using Shape = std::pair<std::size_t, std::size_t>;

template <typename Cell>
std::size_t count_shape(const CellComplex<Cell>& c, int d, Shape s)
{
    std::size_t n = 0;
    for (const auto& cell : c.cells(d)) n += cell.shape() == s;
    return n;
}

// Top cells of the given shape whose free-facet status matches `want_free`.
template <typename Cell>
std::size_t count_free_status(const CellComplex<Cell>& c, const FreeFacetReport& r, Shape s, bool want_free)
{
    std::size_t n = 0;
    for (const auto& t : r.top_cells)
        if (c.cell(r.top_dimension, t.cell).shape() == s && t.free_facets.empty() != want_free) ++n;
    return n;
}

// Facets of `type1` cells: how many have exactly two top cofaces with the
// other one of a type-2 shape (either orientation), out of how many in total.
template <typename Cell>
std::pair<std::size_t, std::size_t> type1_facets_paired_with_type2(const CellComplex<Cell>& c, const FreeFacetReport& r, Shape type1,
                                                                   Shape type2)
{
    const Shape type2_flipped{type2.second, type2.first};
    const int top = r.top_dimension;
    const auto cofaces = c.top_cofaces();
    std::size_t good = 0, total = 0;
    for (const auto& t : r.top_cells)
    {
        if (c.cell(top, t.cell).shape() != type1) continue;
        for (CellIndex f : c.boundary(top, t.cell))
        {
            ++total;
            const auto& cf = cofaces[f];
            if (cf.size() != 2) continue;
            const CellIndex other = cf[0] == t.cell ? cf[1] : cf[0];
            const Shape s = c.cell(top, other).shape();
            if (s == type2 || s == type2_flipped) ++good;
        }
    }
    return {good, total};
}

// Product cells are tagged by ordered shape; orbit cells by larger-first shape.
inline Shape flip(Shape s) { return {s.second, s.first}; }

} // namespace detail

/// k-skeleton of the 2k-simplex: dimension 2k-1, top cells of shapes
/// (k+1, k) and (k, k+1). Free facets and vanishing top homology for
/// k >= 2; neither for k = 1.
inline TheoremCheck check_odd_case(int k, const std::string& id = "thm4.3-odd")
{
    if (k < 1) throw std::invalid_argument(id + ": need k >= 1");
    if (k > max_odd_k)
        throw std::invalid_argument(id + ": k = " + std::to_string(k) + " exceeds the supported maximum " + std::to_string(max_odd_k) +
                                    " (the deleted square grows like 3^(2k+1) cells)");
    TheoremCheck c;
    c.id = id;
    c.parameters = Json{{"k", k}, {"n_vertices", 2 * k + 1}, {"skeleton_dim", k}};

    const auto ku = static_cast<std::size_t>(k);
    const auto K = skeleton_complex(2 * ku + 1, k);
    const auto D = deleted_square(K);
    const auto O = orbit_complex(D);
    const auto pd = betti_profile(D);
    const auto po = betti_profile(O);
    c.evidence["deleted_square"] = detail::complex_summary(D, pd);
    c.evidence["orbit"] = detail::complex_summary(O, po);

    c.claim("dimension of the deleted square is 2k-1", 2 * k - 1, D.dimension());
    c.claim("dimension of the orbit complex is 2k-1", 2 * k - 1, O.dimension());
    c.claim("boundary squares to zero (deleted square)", true, boundary_squares_to_zero(D));
    c.claim("boundary squares to zero (orbit)", true, boundary_squares_to_zero(O));
    c.claim("Euler identity (deleted square)", pd.euler, pd.betti_euler());
    c.claim("Euler identity (orbit)", po.euler, po.betti_euler());
    c.claim("swap is a free cellular involution", true, swap_is_free_cellular_involution(D));

    const int top = D.dimension();
    const auto rd = free_facet_report(D, CellTagger<ProductCell>(shape_tag<ProductCell>));
    const auto ro = free_facet_report(O, CellTagger<OrbitCell>(shape_tag<OrbitCell>));
    const detail::Shape s1{ku + 1, ku};
    c.evidence["top_cells"] = Json{{"deleted_square", D.cell_count(top)},
                                   {"orbit", O.cell_count(top)},
                                   {"shape_counts",
                                    Json{{"(k+1,k)", detail::count_shape(D, top, s1)}, {"(k,k+1)", detail::count_shape(D, top, detail::flip(s1))}}}};

    if (k >= 2)
    {
        c.claim("every top cell of the deleted square has a free facet", D.cell_count(top), rd.cells_with_free_facet());
        c.claim("every top cell of the orbit complex has a free facet", O.cell_count(top), ro.cells_with_free_facet());
        c.claim("top homology of the deleted square vanishes", true, top_homology_vanishes(D));
        c.claim("top homology of the orbit complex vanishes", true, top_homology_vanishes(O));
        // The witness named for the first top cell: (0..k) x (k+1..2k) loses its last vertex.
        std::vector<Vertex> s, t, t_short;
        for (Vertex v = 0; v <= ku; ++v) s.push_back(v);
        for (Vertex v = static_cast<Vertex>(ku + 1); v <= 2 * ku; ++v) t.push_back(v);
        t_short.assign(t.begin(), t.end() - 1);
        const ProductCell cell{Face(s), Face(t)};
        const ProductCell facet{Face(s), Face(t_short)};
        const auto ci = D.index_of(top, cell);
        const auto fi = D.index_of(top - 1, facet);
        bool named_free = false;
        if (ci && fi)
            for (CellIndex f : rd.top_cells[*ci].free_facets) named_free = named_free || f == *fi;
        c.claim(facet.to_string() + " is a free facet of " + cell.to_string(), true, named_free);
    }
    else
    {
        c.claim("no top cell of the deleted square has a free facet", std::size_t{0}, rd.cells_with_free_facet());
        c.claim("no top cell of the orbit complex has a free facet", std::size_t{0}, ro.cells_with_free_facet());
        c.claim("top homology of the deleted square does not vanish", false, top_homology_vanishes(D));
        c.claim("top homology of the orbit complex does not vanish", false, top_homology_vanishes(O));
    }
    return c;
}

/// (k+1)-skeleton of the (2k+1)-simplex: dimension 2k, top cells of type 1
/// (shape (k+1, k+1)) and type 2 (shape (k+2, k) or (k, k+2)).
inline TheoremCheck check_even_case(int k, bool allow_large = false, const std::string& id = "thm4.3-even")
{
    if (k < 1) throw std::invalid_argument(id + ": need k >= 1");
    const int cap = allow_large ? max_even_k_large : max_even_k_default;
    if (k > cap)
        throw std::invalid_argument(id + ": k = " + std::to_string(k) + " exceeds the supported maximum " + std::to_string(cap) +
                                    (k <= max_even_k_large ? " (pass --allow-large for k = 4)"
                                                           : " (the deleted square grows like 3^(2k+2) cells)"));
    TheoremCheck c;
    c.id = id;
    c.parameters = Json{{"k", k}, {"n_vertices", 2 * k + 2}, {"skeleton_dim", k + 1}};

    const auto ku = static_cast<std::size_t>(k);
    const auto K = skeleton_complex(2 * ku + 2, k + 1);
    const auto D = deleted_square(K);
    const auto O = orbit_complex(D);
    const auto pd = betti_profile(D);
    const auto po = betti_profile(O);
    c.evidence["deleted_square"] = detail::complex_summary(D, pd);
    c.evidence["orbit"] = detail::complex_summary(O, po);

    c.claim("dimension of the deleted square is 2k", 2 * k, D.dimension());
    c.claim("dimension of the orbit complex is 2k", 2 * k, O.dimension());
    c.claim("boundary squares to zero (deleted square)", true, boundary_squares_to_zero(D));
    c.claim("boundary squares to zero (orbit)", true, boundary_squares_to_zero(O));
    c.claim("Euler identity (deleted square)", pd.euler, pd.betti_euler());
    c.claim("Euler identity (orbit)", po.euler, po.betti_euler());
    c.claim("swap is a free cellular involution", true, swap_is_free_cellular_involution(D));

    const int top = D.dimension();
    const detail::Shape type1{ku + 1, ku + 1};
    const detail::Shape type2{ku + 2, ku};
    const auto rd = free_facet_report(D, CellTagger<ProductCell>(shape_tag<ProductCell>));
    const auto ro = free_facet_report(O, CellTagger<OrbitCell>(shape_tag<OrbitCell>));

    const std::size_t d_type1 = detail::count_shape(D, top, type1);
    const std::size_t d_type2 = detail::count_shape(D, top, type2) + detail::count_shape(D, top, detail::flip(type2));
    const std::size_t o_type1 = detail::count_shape(O, top, type1);
    const std::size_t o_type2 = detail::count_shape(O, top, type2);
    c.evidence["top_cells"] = Json{{"deleted_square", Json{{"type1", d_type1}, {"type2", d_type2}}},
                                   {"orbit", Json{{"type1", o_type1}, {"type2", o_type2}}}};
    c.claim("top cells of the deleted square are of type 1 or type 2", D.cell_count(top), d_type1 + d_type2);

    const std::size_t d_type2_free = detail::count_free_status(D, rd, type2, true) + detail::count_free_status(D, rd, detail::flip(type2), true);
    const std::size_t o_type2_free = detail::count_free_status(O, ro, type2, true);

    if (k >= 2)
    {
        c.claim("every type-2 top cell of the deleted square has a free facet", d_type2, d_type2_free);
        c.claim("every type-2 top cell of the orbit complex has a free facet", o_type2, o_type2_free);
        c.claim("no type-1 top cell of the deleted square has a free facet", d_type1, detail::count_free_status(D, rd, type1, false));
        auto [dg, dt] = detail::type1_facets_paired_with_type2(D, rd, type1, type2);
        c.claim("every facet of a type-1 cell has exactly two top cofaces, the other of type 2 (deleted square)", dt, dg);
        auto [og, ot] = detail::type1_facets_paired_with_type2(O, ro, type1, type2);
        c.claim("every facet of a type-1 cell has exactly two top cofaces, the other of type 2 (orbit)", ot, og);
        c.claim("top homology of the orbit complex vanishes", true, top_homology_vanishes(O));
        c.claim("top homology of the deleted square vanishes", true, top_homology_vanishes(D));

        std::vector<Vertex> s, t;
        for (Vertex v = 0; v <= ku + 1; ++v) s.push_back(v);
        for (Vertex v = static_cast<Vertex>(ku + 2); v <= 2 * ku + 1; ++v) t.push_back(v);
        const ProductCell cell{Face(s), Face(t)};
        const ProductCell facet{Face(s), Face(std::vector<Vertex>(t.begin(), t.end() - 1))};
        const auto ci = D.index_of(top, cell);
        const auto fi = D.index_of(top - 1, facet);
        bool named_free = false;
        if (ci && fi)
            for (CellIndex f : rd.top_cells[*ci].free_facets) named_free = named_free || f == *fi;
        c.claim(facet.to_string() + " is a free facet of " + cell.to_string(), true, named_free);
    }
    else
    {
        c.claim("no type-2 top cell of the deleted square has a free facet", std::size_t{0}, d_type2_free);
        c.claim("no type-2 top cell of the orbit complex has a free facet", std::size_t{0}, o_type2_free);
        c.claim("top homology of the deleted square does not vanish", false, top_homology_vanishes(D));
        c.claim("top homology of the orbit complex does not vanish", false, top_homology_vanishes(O));
    }
    return c;
}

inline TheoremCheck check_low_dimensional_exception(const std::string& parity)
{
    if (parity == "odd") return check_odd_case(1, "remark4.4");
    if (parity == "even") return check_even_case(1, false, "remark4.4");
    throw std::invalid_argument("remark4.4: parity must be \"odd\" or \"even\"");
}

/// Lifts cap_cover(1) up to S^h and verifies every level by sampling.
inline TheoremCheck check_lift_chain(int h, double epsilon, std::size_t samples, std::uint64_t seed)
{
    if (h < 2) throw std::invalid_argument("lemma4.1-lift: need h >= 2");
    TheoremCheck c;
    c.id = "lemma4.1-lift";
    c.parameters = Json{{"h", h}, {"epsilon", epsilon}, {"samples", samples}, {"seed", seed}};

    Cover cover = cap_cover(1);
    auto report = verify_cover(cover, sample_for_cover(cover, samples, seed));
    Json levels = Json::array();
    levels.push_back(Json{{"sphere_dim", 1}, {"sets", cover.size()}, {"report", to_json(report)}});
    c.claim("S^1: base cover covers", true, report.covered);
    c.claim("S^1: base cover is antipodal-free", true, report.antipodal_free);
    std::size_t previous = report.max_multiplicity;
    for (int d = 2; d <= h; ++d)
    {
        cover = lift_cover(cover, epsilon);
        report = verify_cover(cover, sample_for_cover(cover, samples, seed));
        const std::string at = "S^" + std::to_string(d) + ": ";
        levels.push_back(Json{{"sphere_dim", d}, {"sets", cover.size()}, {"report", to_json(report)}});
        c.claim(at + "number of sets", d + 2, static_cast<int>(cover.size()));
        c.claim(at + "covers", true, report.covered);
        c.claim(at + "antipodal-free", true, report.antipodal_free);
        c.claim(at + "multiplicity at most one above the previous level", true, report.max_multiplicity <= previous + 1);
        previous = report.max_multiplicity;
    }
    c.evidence["levels"] = levels;
    return c;
}

inline TheoremCheck check_q_table(int h_max, std::size_t samples, std::uint64_t seed)
{
    TheoremCheck c;
    c.id = "q-table";
    c.parameters = Json{{"h_max", h_max}, {"samples", samples}, {"seed", seed}};
    Json rows = Json::array();
    for (const auto& e : q_table(h_max))
    {
        Json row{{"h", e.h}, {"q", e.q}};
        row["min_vertices"] = e.min_vertices ? Json(*e.min_vertices) : Json(nullptr);
        rows.push_back(row);
        const std::string at = "h = " + std::to_string(e.h) + ": ";
        if (e.h >= 1)
        {
            // Lower bound h/2 + 1 <= q <= h/2 + 2 and at least h + 2 sets.
            c.claim(at + "h/2 + 1 <= q <= h/2 + 2", true, 2 * e.q >= e.h + 2 && 2 * e.q <= e.h + 4);
            c.claim(at + "at least h + 2 sets", true, *e.min_vertices >= e.h + 2);
        }
    }
    c.evidence["table"] = rows;
    c.claim("q(0) = 1", 1, q_of(0));
    if (h_max >= 2) c.claim("q(2) = 3", 3, q_of(2));
    for (int h = 1; h <= std::min(h_max, 2); ++h)
    {
        const Cover cover = cap_cover(h);
        const auto r = verify_cover(cover, sample_for_cover(cover, samples, seed));
        const std::string at = "S^" + std::to_string(h) + " cap cover: ";
        c.claim(at + "sets = min_vertices", min_vertices(h), static_cast<int>(cover.size()));
        c.claim(at + "sampled multiplicity = q", q_of(h), static_cast<int>(r.max_multiplicity));
        c.claim(at + "covers and is antipodal-free", true, r.passes());
    }
    return c;
}

inline TheoremCheck run_check(const std::string& id, const CheckParams& p)
{
    auto require = [&](const std::optional<int>& v, const char* name) {
        if (!v) throw std::invalid_argument(id + ": missing parameter --" + name);
        return *v;
    };
    TheoremCheck c;
    if (id == "thm4.3-odd") c = check_odd_case(require(p.k, "k"));
    else if (id == "thm4.3-even") c = check_even_case(require(p.k, "k"), p.allow_large);
    else if (id == "remark4.4")
    {
        if (!p.parity) throw std::invalid_argument(id + ": missing parameter --parity");
        c = check_low_dimensional_exception(*p.parity);
        c.parameters["parity"] = *p.parity;
    }
    else if (id == "lemma4.1-lift") c = check_lift_chain(require(p.h, "h"), p.epsilon, p.samples, p.seed);
    else if (id == "q-table") c = check_q_table(require(p.h_max, "h-max"), p.samples, p.seed);
    else throw std::invalid_argument("unknown check id \"" + id + "\"");
    return c;
}

} // namespace antipodal

#endif // ANTIPODAL_CHECKS_HPP

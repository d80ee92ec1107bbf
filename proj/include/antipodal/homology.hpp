/**
 * Mod-2 cellular homology from boundary ranks, and coface counting for
 * free-facet arguments.
 */
#ifndef ANTIPODAL_HOMOLOGY_HPP
#define ANTIPODAL_HOMOLOGY_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cell_complex.hpp"
#include "gf2.hpp"

namespace antipodal {

/// Matrix of the cellular boundary from dimension d to d-1: entry (i, j)
/// is 1 iff (d-1)-cell i lies on the boundary of d-cell j.
template <typename Cell>
GF2Matrix boundary_matrix(const CellComplex<Cell>& c, int d)
{
    if (d < 1 || d > c.dimension())
        throw std::out_of_range("boundary_matrix: dimension " + std::to_string(d) + " outside [1, " + std::to_string(c.dimension()) + "]");
    GF2Matrix m(c.cell_count(d - 1), c.cell_count(d));
    for (CellIndex j = 0; j < c.cell_count(d); ++j)
        for (CellIndex i : c.boundary(d, j))
            m.flip(i, j);
    return m;
}

struct BettiProfile
{
    std::vector<std::size_t> betti;
    std::vector<std::size_t> cell_counts;
    std::vector<std::size_t> boundary_ranks; ///< boundary_ranks[d] = rank of the d-th boundary; [0] = 0
    long long euler = 0;

    long long betti_euler() const noexcept
    {
        long long chi = 0;
        for (std::size_t d = 0; d < betti.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[d]);
        return chi;
    }

    int top_dimension() const noexcept { return static_cast<int>(betti.size()) - 1; }
};

template <typename Cell>
BettiProfile betti_profile(const CellComplex<Cell>& c)
{
    const int top = c.dimension();
    BettiProfile p;
    if (top < 0) return p;
    const auto n = static_cast<std::size_t>(top + 1);
    p.cell_counts.resize(n);
    p.boundary_ranks.assign(n + 1, 0);
    for (int d = 0; d <= top; ++d)
        p.cell_counts[static_cast<std::size_t>(d)] = c.cell_count(d);
    for (int d = 1; d <= top; ++d)
        p.boundary_ranks[static_cast<std::size_t>(d)] = gf2_rank(boundary_matrix(c, d));
    p.betti.resize(n);
    for (std::size_t d = 0; d < n; ++d)
        p.betti[d] = p.cell_counts[d] - p.boundary_ranks[d] - p.boundary_ranks[d + 1];
    p.boundary_ranks.pop_back();
    p.euler = c.euler_characteristic();
    return p;
}

/// True iff the top boundary has full column rank. Complexes of dimension
/// zero or less count as vacuous.
template <typename Cell>
bool top_homology_vanishes(const CellComplex<Cell>& c)
{
    const int top = c.dimension();
    if (top < 1) return true;
    return gf2_rank(boundary_matrix(c, top)) == c.cell_count(top);
}

struct TopCellFacets
{
    CellIndex cell;
    std::string tag;
    std::vector<CellIndex> free_facets; ///< facets with exactly one top coface
};

struct FacetCofaces
{
    CellIndex facet;
    std::vector<CellIndex> top_cofaces;
    std::vector<std::string> coface_tags;
};

struct FreeFacetReport
{
    int top_dimension = -1;
    std::vector<TopCellFacets> top_cells;
    std::vector<FacetCofaces> facets; ///< every facet of some top cell, ascending

    std::size_t cells_with_free_facet() const noexcept
    {
        std::size_t n = 0;
        for (const auto& t : top_cells) n += !t.free_facets.empty();
        return n;
    }

    bool every_top_cell_has_free_facet() const noexcept { return cells_with_free_facet() == top_cells.size(); }

    const FacetCofaces* find_facet(CellIndex facet) const noexcept
    {
        for (const auto& f : facets)
            if (f.facet == facet) return &f;
        return nullptr;
    }
};

template <typename Cell>
using CellTagger = std::function<std::string(const Cell&)>;

template <typename Cell>
FreeFacetReport free_facet_report(const CellComplex<Cell>& c, const CellTagger<Cell>& tagger = {})
{
    const int top = c.dimension();
    if (top < 1)
        throw std::invalid_argument("free_facet_report: the complex must have dimension at least 1");
    auto tag = [&](CellIndex j) { return tagger ? tagger(c.cell(top, j)) : std::string{}; };

    const auto cofaces = c.top_cofaces();
    FreeFacetReport r;
    r.top_dimension = top;
    for (CellIndex j = 0; j < c.cell_count(top); ++j)
    {
        TopCellFacets entry{j, tag(j), {}};
        for (CellIndex i : c.boundary(top, j))
            if (cofaces[i].size() == 1) entry.free_facets.push_back(i);
        r.top_cells.push_back(std::move(entry));
    }
    for (CellIndex i = 0; i < cofaces.size(); ++i)
    {
        if (cofaces[i].empty()) continue;
        FacetCofaces f{i, cofaces[i], {}};
        for (CellIndex j : cofaces[i]) f.coface_tags.push_back(tag(j));
        r.facets.push_back(std::move(f));
    }
    return r;
}

/// Tags a product-like cell by its vertex counts, e.g. "(3,2)".
template <typename Cell>
std::string shape_tag(const Cell& c)
{
    auto [a, b] = c.shape();
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace antipodal

#endif // ANTIPODAL_HOMOLOGY_HPP

/**
 * Deleted square of a simplicial complex and its quotient by the swap
 * involution.
 *
 * The deleted square has one cell sigma x tau for every ordered pair of
 * disjoint nonempty faces; its dimension is dim(sigma) + dim(tau). The
 * boundary of sigma x tau is every sigma' x tau with sigma' a facet of
 * sigma, together with every sigma x tau' with tau' a facet of tau. The
 * swap (sigma, tau) -> (tau, sigma) is a free cellular involution, and the
 * orbit complex has one cell per unordered pair.
 */
#ifndef ANTIPODAL_DELETED_SQUARE_HPP
#define ANTIPODAL_DELETED_SQUARE_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cell_complex.hpp"
#include "simplicial.hpp"

namespace antipodal {

struct ProductCell
{
    Face sigma;
    Face tau;

    ProductCell(Face s, Face t)
        : sigma(std::move(s)), tau(std::move(t))
    {
        if (!are_disjoint(sigma, tau))
            throw std::invalid_argument("ProductCell: faces " + sigma.to_string() + " and " + tau.to_string() + " intersect");
    }

    int dimension() const noexcept { return sigma.dimension() + tau.dimension(); }

    /// Vertex counts (|sigma|, |tau|).
    std::pair<std::size_t, std::size_t> shape() const noexcept { return {sigma.size(), tau.size()}; }

    std::string to_string() const { return sigma.to_string() + "x" + tau.to_string(); }

    friend bool operator==(const ProductCell&, const ProductCell&) = default;
    friend auto operator<=>(const ProductCell&, const ProductCell&) = default;
};

/// Unordered pair {sigma, tau}, stored with the lexicographically smaller
/// face first.
class OrbitCell
{
public:
    OrbitCell(Face a, Face b)
    {
        if (!are_disjoint(a, b))
            throw std::invalid_argument("OrbitCell: faces " + a.to_string() + " and " + b.to_string() + " intersect");
        if (b < a) std::swap(a, b);
        first_ = std::move(a);
        second_ = std::move(b);
    }

    explicit OrbitCell(const ProductCell& c)
        : OrbitCell(c.sigma, c.tau)
    {}

    const Face& first() const noexcept { return first_; }
    const Face& second() const noexcept { return second_; }
    int dimension() const noexcept { return first_.dimension() + second_.dimension(); }
    ProductCell representative() const { return ProductCell(first_, second_); }

    /// Vertex counts, larger first.
    std::pair<std::size_t, std::size_t> shape() const noexcept
    {
        return {std::max(first_.size(), second_.size()), std::min(first_.size(), second_.size())};
    }

    std::string to_string() const { return "{" + first_.to_string() + "," + second_.to_string() + "}"; }

    friend bool operator==(const OrbitCell&, const OrbitCell&) = default;
    friend auto operator<=>(const OrbitCell&, const OrbitCell&) = default;

private:
    Face first_;
    Face second_;
};

using DeletedSquare = CellComplex<ProductCell>;
using OrbitComplex = CellComplex<OrbitCell>;

inline ProductCell swap(const ProductCell& c) { return ProductCell(c.tau, c.sigma); }

/// The deleted square K x K minus the cells meeting the diagonal, with
/// cells indexed lexicographically by (sigma, tau) in each dimension.
inline DeletedSquare deleted_square(const SimplicialComplex& k)
{
    const int kdim = k.dimension();
    const int top = kdim < 0 ? -1 : 2 * kdim;
    std::vector<std::vector<ProductCell>> cells(static_cast<std::size_t>(top + 1));
    for (int ds = 0; ds <= kdim; ++ds)
        for (int dt = 0; dt <= kdim; ++dt)
            for (const auto& s : k.faces(ds))
                for (const auto& t : k.faces(dt))
                    if (are_disjoint(s, t))
                        cells[static_cast<std::size_t>(ds + dt)].emplace_back(s, t);
    // Drop dimensions no disjoint pair reaches.
    while (!cells.empty() && cells.back().empty()) cells.pop_back();
    for (auto& layer : cells) std::sort(layer.begin(), layer.end());

    std::vector<std::vector<BoundaryList>> bounds(cells.size());
    for (std::size_t d = 0; d < cells.size(); ++d)
    {
        bounds[d].resize(cells[d].size());
        if (d == 0) continue;
        const auto& lower = cells[d - 1];
        auto locate = [&](const ProductCell& c) {
            auto it = std::lower_bound(lower.begin(), lower.end(), c);
            if (it == lower.end() || *it != c)
                throw std::logic_error("deleted_square: boundary cell " + c.to_string() + " missing");
            return static_cast<CellIndex>(it - lower.begin());
        };
        for (std::size_t j = 0; j < cells[d].size(); ++j)
        {
            const auto& c = cells[d][j];
            auto& out = bounds[d][j];
            for (auto& s : facets_of(c.sigma)) out.push_back(locate(ProductCell(std::move(s), c.tau)));
            for (auto& t : facets_of(c.tau)) out.push_back(locate(ProductCell(c.sigma, std::move(t))));
            std::sort(out.begin(), out.end());
        }
    }
    return DeletedSquare(std::move(cells), std::move(bounds));
}

/// Quotient of a deleted square by the swap. Boundary incidences are the
/// images of the representative's incidences, reduced mod 2.
inline OrbitComplex orbit_complex(const DeletedSquare& d)
{
    const int top = d.dimension();
    std::vector<std::vector<OrbitCell>> cells(static_cast<std::size_t>(top + 1));
    for (int dim = 0; dim <= top; ++dim)
    {
        auto& layer = cells[static_cast<std::size_t>(dim)];
        for (const auto& c : d.cells(dim))
            if (c.sigma < c.tau) layer.emplace_back(c);
        std::sort(layer.begin(), layer.end());
        if (layer.size() * 2 != d.cell_count(dim))
            throw std::invalid_argument("orbit_complex: the input is not closed under the swap");
    }

    std::vector<std::vector<BoundaryList>> bounds(cells.size());
    for (std::size_t dim = 0; dim < cells.size(); ++dim)
    {
        bounds[dim].resize(cells[dim].size());
        if (dim == 0) continue;
        const auto& lower = cells[dim - 1];
        for (std::size_t j = 0; j < cells[dim].size(); ++j)
        {
            const ProductCell rep = cells[dim][j].representative();
            auto rep_index = d.index_of(static_cast<int>(dim), rep);
            if (!rep_index)
                throw std::invalid_argument("orbit_complex: representative " + rep.to_string() + " missing from the deleted square");
            std::vector<CellIndex> images;
            for (CellIndex i : d.boundary(static_cast<int>(dim), *rep_index))
            {
                OrbitCell image(d.cell(static_cast<int>(dim) - 1, i));
                auto it = std::lower_bound(lower.begin(), lower.end(), image);
                images.push_back(static_cast<CellIndex>(it - lower.begin()));
            }
            std::sort(images.begin(), images.end());
            auto& out = bounds[dim][j];
            for (std::size_t a = 0; a < images.size();)
            {
                std::size_t b = a;
                while (b < images.size() && images[b] == images[a]) ++b;
                if ((b - a) % 2 == 1) out.push_back(images[a]);
                a = b;
            }
        }
    }
    return OrbitComplex(std::move(cells), std::move(bounds));
}

/// True iff the swap maps cells to cells, has no fixed cell, squares to
/// the identity and commutes with the boundary.
inline bool swap_is_free_cellular_involution(const DeletedSquare& d)
{
    for (int dim = 0; dim <= d.dimension(); ++dim)
    {
        for (CellIndex j = 0; j < d.cell_count(dim); ++j)
        {
            const auto& c = d.cell(dim, j);
            const ProductCell s = swap(c);
            if (s == c || swap(s) != c) return false;
            auto sj = d.index_of(dim, s);
            if (!sj) return false;
            std::vector<CellIndex> mapped;
            for (CellIndex i : d.boundary(dim, j))
            {
                auto mi = d.index_of(dim - 1, swap(d.cell(dim - 1, i)));
                if (!mi) return false;
                mapped.push_back(*mi);
            }
            std::sort(mapped.begin(), mapped.end());
            if (mapped != d.boundary(dim, *sj)) return false;
        }
    }
    return true;
}

} // namespace antipodal

#endif // ANTIPODAL_DELETED_SQUARE_HPP

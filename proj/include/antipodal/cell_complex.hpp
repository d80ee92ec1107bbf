/**
 * Graded cell complexes with mod-2 boundary incidences.
 *
 * A CellComplex<Cell> is the generic input to the homology routines: cells
 * are stored per dimension with dense indices, and the boundary of a
 * d-cell is the list of (d-1)-cell indices it is incident to with
 * coefficient 1 over GF(2). Any totally ordered label type can be used.
 */
#ifndef ANTIPODAL_CELL_COMPLEX_HPP
#define ANTIPODAL_CELL_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace antipodal {

using CellIndex = std::uint32_t;
using BoundaryList = std::vector<CellIndex>;

template <typename Cell>
class CellComplex
{
public:
    CellComplex() = default;

    /**
     * @param cells      cells[d] lists the d-cells in their index order.
     * @param boundaries boundaries[d][j] lists the (d-1)-cells on the
     *                   boundary of cell j of dimension d; boundaries[0]
     *                   entries must be empty.
     */
    CellComplex(std::vector<std::vector<Cell>> cells, std::vector<std::vector<BoundaryList>> boundaries)
        : cells_(std::move(cells)), boundaries_(std::move(boundaries))
    {
        while (!cells_.empty() && cells_.back().empty())
        {
            cells_.pop_back();
            if (boundaries_.size() > cells_.size()) boundaries_.resize(cells_.size());
        }
        if (boundaries_.size() != cells_.size())
            throw std::invalid_argument("CellComplex: one boundary layer per dimension is required");
        lookup_.resize(cells_.size());
        for (std::size_t d = 0; d < cells_.size(); ++d)
        {
            if (boundaries_[d].size() != cells_[d].size())
                throw std::invalid_argument("CellComplex: boundary count differs from cell count in dimension " + std::to_string(d));
            for (std::size_t j = 0; j < cells_[d].size(); ++j)
            {
                if (!lookup_[d].emplace(cells_[d][j], static_cast<CellIndex>(j)).second)
                    throw std::invalid_argument("CellComplex: duplicate cell in dimension " + std::to_string(d));
                for (CellIndex i : boundaries_[d][j])
                {
                    if (d == 0 || i >= cells_[d - 1].size())
                        throw std::invalid_argument("CellComplex: boundary entry refers to a missing cell in dimension " + std::to_string(d));
                }
            }
        }
    }

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }

    std::size_t cell_count(int d) const noexcept
    {
        if (d < 0 || d > dimension()) return 0;
        return cells_[static_cast<std::size_t>(d)].size();
    }

    std::size_t total_cells() const noexcept
    {
        std::size_t n = 0;
        for (const auto& layer : cells_) n += layer.size();
        return n;
    }

    const std::vector<Cell>& cells(int d) const { return cells_.at(static_cast<std::size_t>(d)); }
    const Cell& cell(int d, CellIndex j) const { return cells(d).at(j); }

    const BoundaryList& boundary(int d, CellIndex j) const
    {
        return boundaries_.at(static_cast<std::size_t>(d)).at(j);
    }

    std::optional<CellIndex> index_of(int d, const Cell& c) const
    {
        if (d < 0 || d > dimension()) return std::nullopt;
        const auto& m = lookup_[static_cast<std::size_t>(d)];
        auto it = m.find(c);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }

    /// Alternating sum of cell counts.
    long long euler_characteristic() const noexcept
    {
        long long chi = 0;
        for (int d = 0; d <= dimension(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(cell_count(d));
        return chi;
    }

    /// Top-dimensional cofaces, by index, of every (top-1)-cell.
    std::vector<std::vector<CellIndex>> top_cofaces() const
    {
        const int top = dimension();
        if (top < 1) return {};
        std::vector<std::vector<CellIndex>> out(cell_count(top - 1));
        for (CellIndex j = 0; j < cell_count(top); ++j)
            for (CellIndex i : boundary(top, j))
                out[i].push_back(j);
        return out;
    }

private:
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::vector<BoundaryList>> boundaries_;
    std::vector<std::map<Cell, CellIndex>> lookup_;
};

/// True iff the boundary of the boundary of every cell vanishes mod 2.
template <typename Cell>
bool boundary_squares_to_zero(const CellComplex<Cell>& c)
{
    for (int d = 2; d <= c.dimension(); ++d)
    {
        std::vector<unsigned char> parity(c.cell_count(d - 2));
        std::vector<CellIndex> touched;
        for (CellIndex j = 0; j < c.cell_count(d); ++j)
        {
            touched.clear();
            for (CellIndex i : c.boundary(d, j))
                for (CellIndex h : c.boundary(d - 1, i))
                {
                    parity[h] ^= 1;
                    touched.push_back(h);
                }
            bool ok = true;
            for (CellIndex h : touched)
            {
                if (parity[h]) ok = false;
                parity[h] = 0;
            }
            if (!ok) return false;
        }
    }
    return true;
}

} // namespace antipodal

#endif // ANTIPODAL_CELL_COMPLEX_HPP

// Brute-force reference computations for the tests. Nothing here uses the
// library: cells are pairs of vertex bitmasks, boundaries are built by
// clearing single bits, and ranks come from textbook row reduction on a
// byte matrix.
#ifndef ANTIPODAL_TESTS_ORACLE_HPP
#define ANTIPODAL_TESTS_ORACLE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using ByteMatrix = std::vector<std::vector<std::uint8_t>>;

inline std::size_t rank_mod2(ByteMatrix m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col)
    {
        std::size_t pivot = rank;
        while (pivot < rows && !m[pivot][col]) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][col])
                for (std::size_t c = 0; c < cols; ++c) m[r][c] ^= m[rank][c];
        ++rank;
    }
    return rank;
}

struct Complex
{
    // cells[d] = list of (a, b) vertex-mask pairs; boundary matrices built on demand
    std::vector<std::vector<std::pair<Mask, Mask>>> cells;
    bool orbit = false;
};

inline int dim_of(std::pair<Mask, Mask> c) { return std::popcount(c.first) + std::popcount(c.second) - 2; }

/// Ordered (or, for orbit = true, unordered) pairs of disjoint nonempty
/// faces of the k-skeleton of the simplex on n vertices.
inline Complex deleted_square(int n, int k, bool orbit)
{
    Complex c;
    c.orbit = orbit;
    c.cells.resize(static_cast<std::size_t>(2 * k + 1));
    for (Mask a = 1; a < (Mask{1} << n); ++a)
        for (Mask b = 1; b < (Mask{1} << n); ++b)
        {
            if (a & b) continue;
            if (std::popcount(a) > k + 1 || std::popcount(b) > k + 1) continue;
            if (orbit && a > b) continue;
            c.cells[static_cast<std::size_t>(dim_of({a, b}))].push_back({a, b});
        }
    while (!c.cells.empty() && c.cells.back().empty()) c.cells.pop_back();
    return c;
}

inline ByteMatrix boundary(const Complex& c, int d)
{
    const auto& lo = c.cells[static_cast<std::size_t>(d - 1)];
    const auto& hi = c.cells[static_cast<std::size_t>(d)];
    std::map<std::pair<Mask, Mask>, std::size_t> index;
    for (std::size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
    auto key = [&](Mask a, Mask b) { return c.orbit && a > b ? std::pair{b, a} : std::pair{a, b}; };
    ByteMatrix m(lo.size(), std::vector<std::uint8_t>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j)
    {
        auto [a, b] = hi[j];
        for (int v = 0; v < 32; ++v)
        {
            const Mask bit = Mask{1} << v;
            if ((a & bit) && (a ^ bit)) m[index.at(key(a ^ bit, b))][j] ^= 1;
            if ((b & bit) && (b ^ bit)) m[index.at(key(a, b ^ bit))][j] ^= 1;
        }
    }
    return m;
}

inline std::vector<std::size_t> betti(const Complex& c)
{
    const std::size_t n = c.cells.size();
    std::vector<std::size_t> ranks(n + 1, 0);
    for (std::size_t d = 1; d < n; ++d) ranks[d] = rank_mod2(boundary(c, static_cast<int>(d)));
    std::vector<std::size_t> out(n);
    for (std::size_t d = 0; d < n; ++d) out[d] = c.cells[d].size() - ranks[d] - ranks[d + 1];
    return out;
}

inline std::vector<std::size_t> cell_counts(const Complex& c)
{
    std::vector<std::size_t> out;
    for (const auto& layer : c.cells) out.push_back(layer.size());
    return out;
}

} // namespace oracle

#endif // ANTIPODAL_TESTS_ORACLE_HPP

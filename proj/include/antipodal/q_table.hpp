#ifndef ANTIPODAL_Q_TABLE_HPP
#define ANTIPODAL_Q_TABLE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

namespace antipodal {

/// Least l such that S^h has an open cover by antipodal-free sets in which
/// no point lies in more than l sets.
inline int q_of(int h)
{
    if (h < 0) throw std::invalid_argument("q_of: need h >= 0");
    if (h == 0) return 1;
    return h / 2 + 2;
}

/// Least number of sets in such a cover attaining multiplicity q_of(h).
inline int min_vertices(int h)
{
    if (h < 1) throw std::invalid_argument("min_vertices: need h >= 1");
    if (h == 1) return 3;
    if (h == 2) return 4;
    return h + 3;
}

struct QEntry
{
    int h = 0;
    int q = 0;
    std::optional<int> min_vertices; ///< undefined for h = 0
};

inline std::vector<QEntry> q_table(int h_max)
{
    if (h_max < 0) throw std::invalid_argument("q_table: need h_max >= 0");
    std::vector<QEntry> out;
    for (int h = 0; h <= h_max; ++h)
        out.push_back({h, q_of(h), h >= 1 ? std::optional<int>(min_vertices(h)) : std::nullopt});
    return out;
}

} // namespace antipodal

#endif // ANTIPODAL_Q_TABLE_HPP

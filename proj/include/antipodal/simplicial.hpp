/**
 * Faces and skeleta of simplices.
 *
 * Vertices are 0-based integer labels; a face is stored as a strictly
 * increasing vertex sequence so that equality and ordering are structural.
 */
#ifndef ANTIPODAL_SIMPLICIAL_HPP
#define ANTIPODAL_SIMPLICIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace antipodal {

using Vertex = std::uint32_t;

class Face
{
public:
    Face() = default;

    Face(std::initializer_list<Vertex> vertices)
        : Face(std::vector<Vertex>(vertices))
    {}

    explicit Face(std::vector<Vertex> vertices)
        : vertices_(std::move(vertices))
    {
        if (vertices_.empty())
            throw std::invalid_argument("Face: a face must have at least one vertex");
        for (std::size_t i = 1; i < vertices_.size(); ++i)
        {
            if (vertices_[i - 1] >= vertices_[i])
                throw std::invalid_argument("Face: vertices must be strictly increasing");
        }
    }

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }

    bool contains(Vertex v) const
    {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face& a, const Face& b) { return a.vertices_ <=> b.vertices_; }

    std::string to_string() const
    {
        std::string out = "{";
        for (std::size_t i = 0; i < vertices_.size(); ++i)
        {
            if (i) out += ",";
            out += std::to_string(vertices_[i]);
        }
        return out + "}";
    }

private:
    std::vector<Vertex> vertices_;
};

/// Codimension-one subfaces. A vertex has none: the empty set is not a face.
inline std::vector<Face> facets_of(const Face& f)
{
    std::vector<Face> out;
    if (f.size() < 2)
        return out;
    auto verts = f.vertices();
    // Dropping the last vertex first yields lexicographic order.
    for (std::size_t drop = verts.size(); drop-- > 0;)
    {
        std::vector<Vertex> sub;
        sub.reserve(verts.size() - 1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != drop) sub.push_back(verts[i]);
        out.emplace_back(std::move(sub));
    }
    return out;
}

inline bool are_disjoint(const Face& a, const Face& b)
{
    auto x = a.vertices();
    auto y = b.vertices();
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size())
    {
        if (x[i] == y[j]) return false;
        if (x[i] < y[j]) ++i; else ++j;
    }
    return true;
}

class SimplicialComplex
{
public:
    /// `faces_by_dim[d]` holds the d-dimensional faces; each list is sorted.
    SimplicialComplex(std::size_t n_vertices, std::vector<std::vector<Face>> faces_by_dim)
        : n_vertices_(n_vertices), faces_(std::move(faces_by_dim))
    {
        for (auto& layer : faces_)
            std::sort(layer.begin(), layer.end());
        while (!faces_.empty() && faces_.back().empty())
            faces_.pop_back();
        for (std::size_t d = 0; d < faces_.size(); ++d)
        {
            for (const auto& f : faces_[d])
            {
                if (f.size() != d + 1)
                    throw std::invalid_argument("SimplicialComplex: face " + f.to_string() + " filed under the wrong dimension");
                if (f.back() >= n_vertices_)
                    throw std::invalid_argument("SimplicialComplex: vertex index out of range in " + f.to_string());
                if (d == 0) continue;
                for (const auto& g : facets_of(f))
                {
                    if (!contains(g))
                        throw std::invalid_argument("SimplicialComplex: not closed under faces, missing " + g.to_string());
                }
            }
        }
    }

    std::size_t n_vertices() const noexcept { return n_vertices_; }
    int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }

    const std::vector<Face>& faces(int d) const
    {
        static const std::vector<Face> none;
        if (d < 0 || d > dimension()) return none;
        return faces_[static_cast<std::size_t>(d)];
    }

    std::size_t face_count() const noexcept
    {
        std::size_t total = 0;
        for (const auto& layer : faces_) total += layer.size();
        return total;
    }

    bool contains(const Face& f) const
    {
        const auto& layer = faces(f.dimension());
        return std::binary_search(layer.begin(), layer.end(), f);
    }

private:
    std::size_t n_vertices_;
    std::vector<std::vector<Face>> faces_;
};

namespace detail {

// All size-`size` subsets of {0..n-1}, in lexicographic order.
inline std::vector<Face> subsets_of_size(std::size_t n, std::size_t size)
{
    std::vector<Face> out;
    if (size == 0 || size > n) return out;
    std::vector<Vertex> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
    while (true)
    {
        out.emplace_back(pick);
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == static_cast<Vertex>(n - size + i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace detail

/// The k-skeleton of the simplex on `n_vertices` vertices: every subset of
/// size 1..k+1.
inline SimplicialComplex skeleton_complex(std::size_t n_vertices, int k)
{
    if (n_vertices < 1)
        throw std::invalid_argument("skeleton_complex: need at least one vertex");
    if (k < 0 || static_cast<std::size_t>(k) > n_vertices - 1)
        throw std::invalid_argument("skeleton_complex: k must lie in [0, n_vertices - 1]");
    std::vector<std::vector<Face>> layers;
    for (int d = 0; d <= k; ++d)
        layers.push_back(detail::subsets_of_size(n_vertices, static_cast<std::size_t>(d) + 1));
    return SimplicialComplex(n_vertices, std::move(layers));
}

} // namespace antipodal

#endif // ANTIPODAL_SIMPLICIAL_HPP

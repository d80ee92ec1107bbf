/**
 * JSON forms of covers, sample reports, nerves and cell complexes.
 *
 * Cover file schema:
 *   {"sphere_dim": h, "sets": [node, ...], "epsilon": r (optional)}
 *   node := {"kind": "cap", "normal": [..], "threshold": r}
 *         | {"kind": "band", "base": node, "lower": r, "upper": r}
 *         | {"kind": "latitude_above", "bound": r}
 *         | {"kind": "latitude_below", "bound": r}
 *         | {"kind": "union", "parts": [node, ...]}
 */
#ifndef ANTIPODAL_JSON_IO_HPP
#define ANTIPODAL_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cell_complex.hpp"
#include "homology.hpp"
#include "sphere_covers.hpp"

namespace antipodal {

using Json = nlohmann::ordered_json;

inline Json to_json(const CoverSet& s)
{
    struct Visitor
    {
        Json operator()(const Cap& c) const { return Json{{"kind", "cap"}, {"normal", c.normal}, {"threshold", c.threshold}}; }
        Json operator()(const Band& b) const
        {
            return Json{{"kind", "band"}, {"base", to_json(*b.base)}, {"lower", b.lower}, {"upper", b.upper}};
        }
        Json operator()(const LatitudeAbove& z) const { return Json{{"kind", "latitude_above"}, {"bound", z.bound}}; }
        Json operator()(const LatitudeBelow& z) const { return Json{{"kind", "latitude_below"}, {"bound", z.bound}}; }
        Json operator()(const Union& u) const
        {
            Json parts = Json::array();
            for (const auto& p : u.parts) parts.push_back(to_json(p));
            return Json{{"kind", "union"}, {"parts", parts}};
        }
    };
    return std::visit(Visitor{}, s.node());
}

inline Json to_json(const Cover& c)
{
    Json sets = Json::array();
    for (const auto& s : c.sets) sets.push_back(to_json(s));
    Json out{{"sphere_dim", c.sphere_dim}, {"sets", sets}};
    if (c.epsilon) out["epsilon"] = *c.epsilon;
    return out;
}

namespace detail {

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("cover file: missing field \"") + key + "\"");
    return j.at(key);
}

inline double number(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number())
        throw std::invalid_argument(std::string("cover file: field \"") + key + "\" must be a number");
    return v.get<double>();
}

} // namespace detail

inline CoverSet cover_set_from_json(const Json& j)
{
    const Json& kind = detail::field(j, "kind");
    if (!kind.is_string())
        throw std::invalid_argument("cover file: \"kind\" must be a string");
    const auto k = kind.get<std::string>();
    if (k == "cap")
    {
        const Json& n = detail::field(j, "normal");
        if (!n.is_array())
            throw std::invalid_argument("cover file: cap normal must be an array");
        std::vector<double> normal;
        for (const auto& x : n)
        {
            if (!x.is_number()) throw std::invalid_argument("cover file: cap normal entries must be numbers");
            normal.push_back(x.get<double>());
        }
        return CoverSet::cap(std::move(normal), detail::number(j, "threshold"));
    }
    if (k == "band")
        return CoverSet::band(cover_set_from_json(detail::field(j, "base")), detail::number(j, "lower"), detail::number(j, "upper"));
    if (k == "latitude_above") return CoverSet::latitude_above(detail::number(j, "bound"));
    if (k == "latitude_below") return CoverSet::latitude_below(detail::number(j, "bound"));
    if (k == "union")
    {
        const Json& parts = detail::field(j, "parts");
        if (!parts.is_array())
            throw std::invalid_argument("cover file: union parts must be an array");
        std::vector<CoverSet> out;
        for (const auto& p : parts) out.push_back(cover_set_from_json(p));
        return CoverSet::union_of(std::move(out));
    }
    throw std::invalid_argument("cover file: unknown node kind \"" + k + "\"");
}

inline Cover cover_from_json(const Json& j)
{
    const Json& dim = detail::field(j, "sphere_dim");
    if (!dim.is_number_integer())
        throw std::invalid_argument("cover file: sphere_dim must be an integer");
    const Json& sets = detail::field(j, "sets");
    if (!sets.is_array())
        throw std::invalid_argument("cover file: sets must be an array");
    std::vector<CoverSet> out;
    for (const auto& s : sets) out.push_back(cover_set_from_json(s));
    std::optional<double> eps;
    if (j.contains("epsilon")) eps = detail::number(j, "epsilon");
    return Cover(dim.get<int>(), std::move(out), eps);
}

inline Json to_json(const SpherePoint& p) { return Json(std::vector<double>(p.coords().begin(), p.coords().end())); }

inline Json to_json(const SampleReport& r)
{
    Json out{
        {"samples_used", r.samples_used},
        {"battery_pairs", r.battery_count},
        {"seed", r.seed},
        {"covered", r.covered},
        {"uncovered_points", r.uncovered_points},
        {"uncovered_witness", r.uncovered_witness ? to_json(*r.uncovered_witness) : Json(nullptr)},
        {"antipodal_free", r.antipodal_free},
        {"antipodal_violations", r.antipodal_violations},
    };
    if (r.antipodal_witness)
        out["antipodal_witness"] = Json{{"point", to_json(r.antipodal_witness->point)},
                                        {"antipode", to_json(r.antipodal_witness->point.antipode())},
                                        {"set", r.antipodal_witness->set_index}};
    else
        out["antipodal_witness"] = nullptr;
    out["max_multiplicity"] = r.max_multiplicity;
    if (r.multiplicity_witness)
        out["multiplicity_witness"] = Json{{"point", to_json(r.multiplicity_witness->point)}, {"sets", r.multiplicity_witness->sets}};
    else
        out["multiplicity_witness"] = nullptr;
    out["multiplicity_histogram"] = r.multiplicity_histogram;
    return out;
}

inline Json to_json(const EmpiricalNerve& n)
{
    Json faces = Json::array();
    for (const auto& f : n.faces) faces.push_back(std::vector<Vertex>(f.vertices().begin(), f.vertices().end()));
    Json counts = Json::array();
    for (int d = 0; d <= n.dimension(); ++d) counts.push_back(n.count(d));
    return Json{{"vertices", n.vertex_count}, {"dimension", n.dimension()}, {"face_counts", counts}, {"faces", faces}};
}

inline Json to_json(const BettiProfile& p)
{
    return Json{{"cell_counts", p.cell_counts}, {"boundary_ranks", p.boundary_ranks}, {"betti", p.betti}, {"euler", p.euler}};
}

/// Debug listing: one entry per cell with its dimension, label and
/// boundary labels.
template <typename Cell>
Json complex_to_json(const CellComplex<Cell>& c)
{
    Json cells = Json::array();
    for (int d = 0; d <= c.dimension(); ++d)
        for (CellIndex j = 0; j < c.cell_count(d); ++j)
        {
            Json bd = Json::array();
            for (CellIndex i : c.boundary(d, j)) bd.push_back(c.cell(d - 1, i).to_string());
            cells.push_back(Json{{"dimension", d}, {"cell", c.cell(d, j).to_string()}, {"boundary", bd}});
        }
    Json counts = Json::array();
    for (int d = 0; d <= c.dimension(); ++d) counts.push_back(c.cell_count(d));
    return Json{{"dimension", c.dimension()}, {"cell_counts", counts}, {"cells", cells}};
}

} // namespace antipodal

#endif // ANTIPODAL_JSON_IO_HPP

#pragma once

// JSON views of the library objects. Integers are emitted as JSON numbers
// while they fit the double-safe range and as decimal strings beyond it;
// rationals are emitted as "p/q" strings (or "p" when integral).

#include "affine.hpp"
#include "core.hpp"
#include "cycle.hpp"
#include "frieze.hpp"
#include "rank2.hpp"
#include "triangulation.hpp"

#include <json.hpp>

namespace quiddity {

inline nlohmann::json json_int(const Integer& v) {
    static const Integer kSafe = (Integer(1) << 53) - 1;
    if (abs(v) <= kSafe) return static_cast<std::int64_t>(v);
    return v.str();
}

inline nlohmann::json json_rational(const Rational& q) { return to_string(q); }

inline nlohmann::json to_json(const QuiddityCycle& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Integer& e : c.entries()) arr.push_back(json_int(e));
    return nlohmann::json{{"c", arr}};
}

inline nlohmann::json to_json(const Triangulation& t) {
    nlohmann::json tris = nlohmann::json::array();
    for (const auto& tr : t.triangles) tris.push_back({tr[0], tr[1], tr[2]});
    return nlohmann::json{{"n", t.n}, {"triangles", tris}};
}

inline nlohmann::json to_json(const FriezeTable& f) {
    nlohmann::json phi = nlohmann::json::array();
    nlohmann::json m = nlohmann::json::array();
    for (int i = 1; i <= f.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= f.size(); ++j) row.push_back(json_int(f.phi(i, j)));
        phi.push_back(std::move(row));
        m.push_back(f.max_set(i));
    }
    return nlohmann::json{{"c", to_json(f.cycle())["c"]}, {"phi", phi}, {"m", m}};
}

inline nlohmann::json to_json(const Root2& r) {
    return nlohmann::json::array({json_int(r.x), json_int(r.y)});
}

inline nlohmann::json to_json(const RootSystem2& rs) {
    nlohmann::json roots = nlohmann::json::array();
    for (const Root2& r : rs.roots) roots.push_back(to_json(r));
    nlohmann::json maxima = nlohmann::json::array();
    for (const Root2& r : maximal_roots(rs)) maxima.push_back(to_json(r));
    return nlohmann::json{{"c", to_json(rs.cycle)["c"]},
                          {"chamber", rs.chamber},
                          {"roots", roots},
                          {"max", maxima}};
}

inline nlohmann::json to_json(const RationalPoint& p) {
    return nlohmann::json::array({json_rational(p.x), json_rational(p.y)});
}

inline nlohmann::json to_json(const Face& f) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : f.verts) verts.push_back(to_json(v));
    return nlohmann::json{{"vertices", verts}};
}

inline nlohmann::json to_json(const Vec3& v) {
    return nlohmann::json::array({json_int(v.a), json_int(v.b), json_int(v.d)});
}

inline nlohmann::json to_json(const DeterminantClasses& dc) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [ratio, count] : dc.histogram) hist[to_string(ratio)] = count;
    return hist;
}

inline nlohmann::json to_json(const CaViolation& w) {
    nlohmann::json coords = nlohmann::json::array();
    for (const Rational& q : w.coords) coords.push_back(json_rational(q));
    return nlohmann::json{{"cell", w.cell_index}, {"root", to_json(w.root)}, {"coords", coords}};
}

} // namespace quiddity

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stronggeo/chirotope.hpp"
#include "stronggeo/gauss_code.hpp"
#include "stronggeo/point_config.hpp"
#include "stronggeo/predicates.hpp"
#include "stronggeo/wedge.hpp"

namespace stronggeo {

// Closed polygonal curve through x_0, ..., x_{n-1} (segments [x_i, x_{i+1}],
// indices mod n). Radial projection is always taken from the vertex x_0;
// the two segments at x_0 project to points, so the shadow is an open arc
// from pi(x_1) to pi(x_{n-1}) walked in label order.
struct PolygonalKnot {
    PointConfig config;  // affine, R^3

    int n() const { return config.size(); }
};

inline PolygonalKnot make_knot(PointConfig config) {
    if (config.mode != ConfigMode::affine || config.dim != 3)
        throw DimensionMismatch("polygonal knots live in affine R^3");
    if (config.size() < 4) throw TooFewPoints("a polygonal knot needs at least 4 vertices");
    return PolygonalKnot{std::move(config)};
}

// Knot with labels rotated so that `from` becomes label 0.
inline PolygonalKnot make_knot_from(PointConfig config, int from) {
    if (from < 0 || from >= config.size()) throw UnknownLabel("witness label out of range");
    std::vector<Vec> rotated;
    const int n = config.size();
    rotated.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rotated.push_back(config.points[static_cast<std::size_t>((from + i) % n)]);
    config.points = std::move(rotated);
    return make_knot(std::move(config));
}

struct ValidationReport {
    bool ok = true;
    std::string detail;
};

namespace detail {

// Crossing data between projected arcs. Arc i is the projection of the
// segment [x_i, x_{i+1}], i = 1..n-2.
struct ArcCrossing {
    int arc_a = 0, arc_b = 0;  // arc_a < arc_b
    int over_arc = 0;
    Sign sign = Sign::positive;
};

inline bool arcs_admissible(int n, int i, int j) {
    return i >= 1 && j >= 1 && i <= n - 2 && j <= n - 2 && i != j && i + 1 != j && j + 1 != i;
}

// Radon-partition crossing rule: the five points {x_0, x_i, x_{i+1}, x_j,
// x_{j+1}} have a unique signed circuit; the arcs cross exactly when the
// part containing x_0 is one arc's triple and the other part is the other
// arc's pair, and the triple's arc is the over strand.
inline std::optional<std::pair<int, int>> crossing_from_chirotope(const Chirotope& base, int i,
                                                                  int j) {
    std::vector<int> support{0, i, i + 1, j, j + 1};
    SignedCircuit c;
    try {
        c = circuit_of(base, support);
    } catch (const DegenerateSupport&) {
        throw NonGenericShadow("degenerate five-point support");
    }
    // label 0 is the smallest support label, so normalization puts it in
    // the positive part whenever it participates
    std::vector<int> with_i{0, i, i + 1};
    std::vector<int> with_j{0, j, j + 1};
    std::vector<int> pair_i{i, i + 1};
    std::vector<int> pair_j{j, j + 1};
    if (c.positive == with_i && c.negative == pair_j) return std::make_pair(i, j);
    if (c.positive == with_j && c.negative == pair_i) return std::make_pair(j, i);
    return std::nullopt;
}

// Handedness of a crossing, over arc first: chi(o, o+1, 0, u+1). This is
// the right-hand rule for the spherical diagram seen from outside.
inline Sign sign_from_chirotope(const Chirotope& base, int over_arc, int under_arc) {
    return base.lookup({over_arc, over_arc + 1, 0, under_arc + 1});
}

// Side of the plane through x_0 and arc i on which the far endpoint of arc
// j lies; fixes which of the two antipodal candidates is the crossing
// point. Two crossings on arc i compare by eps_j * eps_k * tau where tau is
// the witnessed wedge sign of the three arc planes.
inline Sign eps_from_chirotope(const Chirotope& base, int i, int j) {
    return base.lookup({i, i + 1, 0, j + 1});
}

template <typename TauFn>
std::vector<int> order_partners(const Chirotope& base, TauFn&& tau, int arc,
                                std::vector<int> partners) {
    std::map<int, Sign> eps;
    for (int j : partners) eps[j] = eps_from_chirotope(base, arc, j);
    std::sort(partners.begin(), partners.end(), [&](int j, int k) {
        if (j == k) return false;
        Sign t = tau(arc, j, k);
        if (t == Sign::zero)
            throw NonGenericShadow("two crossings coincide on arc " + std::to_string(arc));
        return eps[j] * eps[k] * t == Sign::positive;
    });
    return partners;
}

inline GaussDiagram emit_knotoid(int n, const std::vector<ArcCrossing>& crossings,
                                 const std::map<int, std::vector<int>>& order) {
    std::map<std::pair<int, int>, const ArcCrossing*> by_pair;
    for (const ArcCrossing& c : crossings) by_pair[{c.arc_a, c.arc_b}] = &c;
    GaussDiagram g;
    g.kind = DiagramKind::knotoid;
    std::map<std::pair<int, int>, int> ids;
    for (int arc = 1; arc <= n - 2; ++arc) {
        auto it = order.find(arc);
        if (it == order.end()) continue;
        for (int partner : it->second) {
            std::pair<int, int> key{std::min(arc, partner), std::max(arc, partner)};
            const ArcCrossing* c = by_pair.at(key);
            auto [id_it, fresh] = ids.emplace(key, static_cast<int>(ids.size()) + 1);
            GaussEntry e;
            e.id = id_it->second;
            e.strand = c->over_arc == arc ? Strand::over : Strand::under;
            e.sign = c->sign;
            g.entries.push_back(e);
        }
    }
    return g;
}

}  // namespace detail

inline ValidationReport validate_input(const PolygonalKnot& k) {
    Chirotope base = affine_chirotope(k.config);
    const int n = k.n();
    std::vector<int> t = first_combination(4);
    do {
        if (base.at_sorted(t) == Sign::zero) {
            ValidationReport r;
            r.ok = false;
            r.detail = "coplanar 4-tuple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                       "," + std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
            return r;
        }
    } while (next_combination(t, n));
    // shadow genericity: no two crossings of a common arc may coincide,
    // i.e. no arc triple with dependent plane normals among crossing pairs
    WitnessedWedge w = witnessed_wedge_chirotope(k.config, 0);
    std::vector<std::vector<int>> partners(static_cast<std::size_t>(n));
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 2; j <= n - 2; ++j) {
            if (!detail::arcs_admissible(n, i, j)) continue;
            if (detail::crossing_from_chirotope(base, i, j)) {
                partners[static_cast<std::size_t>(i)].push_back(j);
                partners[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    for (int i = 1; i <= n - 2; ++i) {
        const auto& p = partners[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) {
                Sign tau = w.lookup_pairs({i, i + 1}, {p[a], p[a] + 1}, {p[b], p[b] + 1});
                if (tau == Sign::zero) {
                    ValidationReport r;
                    r.ok = false;
                    r.detail = "multiple intersection on arc " + std::to_string(i) + " (arcs " +
                               std::to_string(p[a]) + ", " + std::to_string(p[b]) + ")";
                    return r;
                }
            }
    }
    return ValidationReport{};
}

// Crossing between the projected arcs i and j; returns the (over, under)
// arc pair when they cross.
inline std::optional<std::pair<int, int>> crossing_exists(const PolygonalKnot& k, int i, int j) {
    const int n = k.n();
    if (i <= 0 || j <= 0 || i >= n - 1 || j >= n - 1)
        throw ProjectionCenterArc("arcs through the projection center carry no crossings");
    if (i == j || i + 1 == j || j + 1 == i)
        throw ConsecutiveArcs("consecutive arcs meet only at their shared endpoint");
    Chirotope base = affine_chirotope(k.config);
    return detail::crossing_from_chirotope(base, std::min(i, j), std::max(i, j));
}

inline Sign crossing_sign(const PolygonalKnot& k, int i, int j) {
    auto c = crossing_exists(k, i, j);
    if (!c) throw NoCrossing("arcs " + std::to_string(i) + ", " + std::to_string(j) + " miss");
    Chirotope base = affine_chirotope(k.config);
    return detail::sign_from_chirotope(base, c->first, c->second);
}

// Orders the given crossing partner arcs along arc i, walking from
// pi(x_i) to pi(x_{i+1}). Witnessed wedge signs come from the translated
// configuration.
inline std::vector<int> order_crossings(const PolygonalKnot& k, int arc, std::vector<int> partners) {
    Chirotope base = affine_chirotope(k.config);
    WitnessedWedge w = witnessed_wedge_chirotope(k.config, 0);
    auto tau = [&](int i, int j, int jp) {
        return w.lookup_pairs({i, i + 1}, {j, j + 1}, {jp, jp + 1});
    };
    return detail::order_partners(base, tau, arc, std::move(partners));
}

// Strong-geometry path: every decision is a base-chirotope or wedge lookup.
// Crossings come from circuits, handedness from chi(o,o+1,0,u+1), and the
// per-arc order from eps/tau comparisons with tau pulled out of the wedge
// chirotope through the witness identity.
inline GaussDiagram extract_gauss_combinatorial(const StrongGeometry& sg, int n) {
    if (sg.base_rank() != 4) throw Error("knot extraction expects a rank-4 strong geometry");
    if (sg.n() != n) throw Error("label count mismatch");
    const Chirotope& base = sg.base;
    std::vector<detail::ArcCrossing> crossings;
    std::map<int, std::vector<int>> partners;
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 2; j <= n - 2; ++j) {
            auto c = detail::crossing_from_chirotope(base, i, j);
            if (!c) continue;
            detail::ArcCrossing ac;
            ac.arc_a = i;
            ac.arc_b = j;
            ac.over_arc = c->first;
            ac.sign = detail::sign_from_chirotope(base, c->first, c->second);
            crossings.push_back(ac);
            partners[i].push_back(j);
            partners[j].push_back(i);
        }
    auto tau = [&](int i, int j, int jp) {
        return witnessed_wedge_sign_from_wedge(sg, {i, i + 1}, {j, j + 1}, {jp, jp + 1});
    };
    std::map<int, std::vector<int>> order;
    for (auto& [arc, list] : partners) order[arc] = detail::order_partners(base, tau, arc, list);
    return detail::emit_knotoid(n, crossings, order);
}

// Exact geometric oracle: intersect arc planes, test ray membership, order
// by the rational parameter along each segment, read handedness off the
// tangent frame at the crossing ray.
inline GaussDiagram extract_gauss_geometric(const PolygonalKnot& k) {
    const int n = k.n();
    ValidationReport rep = validate_input(k);
    if (!rep.ok) throw DegenerateConfiguration(rep.detail);
    std::vector<Vec> u;  // translated vertices
    u.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) u.push_back(k.config.points[static_cast<std::size_t>(i)] - k.config.points[0]);
    auto nu = [&](int arc) { return cross3(u[static_cast<std::size_t>(arc)], u[static_cast<std::size_t>(arc) + 1]); };

    std::vector<detail::ArcCrossing> crossings;
    std::map<int, std::vector<std::pair<Rational, int>>> keyed;  // arc -> (param, partner)
    for (int i = 1; i <= n - 2; ++i) {
        Vec ni = nu(i);
        for (int j = i + 2; j <= n - 2; ++j) {
            Vec nj = nu(j);
            // does segment j cross the plane of arc i, and vice versa?
            Rational ci = dot(ni, u[static_cast<std::size_t>(j)]);
            Rational di = dot(ni, u[static_cast<std::size_t>(j) + 1]);
            if (ci == 0 || di == 0) throw NonGenericShadow("arc endpoint on another arc plane");
            if ((ci > 0) == (di > 0)) continue;
            Rational cj = dot(nj, u[static_cast<std::size_t>(i)]);
            Rational dj = dot(nj, u[static_cast<std::size_t>(i) + 1]);
            if (cj == 0 || dj == 0) throw NonGenericShadow("arc endpoint on another arc plane");
            if ((cj > 0) == (dj > 0)) continue;
            // plane crossing points, as vectors from the projection center
            Rational ti = cj / (cj - dj);  // along segment i
            Rational tj = ci / (ci - di);  // along segment j
            Vec qi = u[static_cast<std::size_t>(i)] +
                     ti * (u[static_cast<std::size_t>(i) + 1] - u[static_cast<std::size_t>(i)]);
            Vec qj = u[static_cast<std::size_t>(j)] +
                     tj * (u[static_cast<std::size_t>(j) + 1] - u[static_cast<std::size_t>(j)]);
            // same ray test: qj = lambda * qi with lambda > 0
            std::size_t nz = 0;
            while (nz < 3 && qi[nz] == 0) ++nz;
            if (nz == 3) throw NonGenericShadow("segment through the projection center");
            Rational lambda = qj[nz] / qi[nz];
            if (lambda * qi != qj) continue;  // antipodal or skew
            if (lambda < 0) continue;         // antipodal
            if (lambda == 1) throw NonGenericShadow("segments intersect in space");
            detail::ArcCrossing ac;
            ac.arc_a = i;
            ac.arc_b = j;
            ac.over_arc = lambda > 1 ? j : i;  // farther from the center is over
            int under_arc = ac.over_arc == i ? j : i;
            // handedness from the tangent frame at the crossing ray
            Vec q = qi;
            Vec t_over = cross3(nu(ac.over_arc), q);
            Vec t_under = cross3(nu(under_arc), q);
            std::vector<Vec> frame{t_over, t_under, q};
            ac.sign = det_sign(frame);
            if (ac.sign == Sign::zero) throw NonGenericShadow("tangent frame degenerate");
            crossings.push_back(ac);
            keyed[i].push_back({ti, j});
            keyed[j].push_back({tj, i});
        }
    }
    std::map<int, std::vector<int>> order;
    for (auto& [arc, list] : keyed) {
        std::sort(list.begin(), list.end());
        for (std::size_t a = 1; a < list.size(); ++a)
            if (list[a].first == list[a - 1].first)
                throw NonGenericShadow("multiple intersection on arc " + std::to_string(arc));
        auto& target = order[arc];
        for (auto& [key, partner] : list) target.push_back(partner);
    }
    return detail::emit_knotoid(n, crossings, order);
}

// Mirror image: negate the last coordinate. Flips every crossing sign and
// leaves the shadow combinatorics intact.
inline PolygonalKnot mirror_knot(const PolygonalKnot& k) {
    PointConfig c = k.config;
    for (Vec& p : c.points) p[2] = -p[2];
    return PolygonalKnot{std::move(c)};
}

}  // namespace stronggeo

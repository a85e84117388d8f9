#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "stronggeo/errors.hpp"
#include "stronggeo/gauss_code.hpp"

namespace stronggeo {

struct TravelStep {
    int piece = 0;
    bool with = true;  // direction relative to the carrier orientation

    bool operator==(const TravelStep&) const = default;
};

struct FaceWalk {
    std::vector<TravelStep> steps;
};

struct PlanarMapData {
    long long vertex_count = 0;  // crossings + graph vertices + endpoints
    long long edge_count = 0;    // carrier pieces
    int components = 1;
    std::vector<FaceWalk> faces;
    // face index seen from each side of each piece: [piece] -> {face of the
    // WITH direction, face of the AGAINST direction}
    std::vector<std::array<int, 2>> side_faces;
    std::vector<std::string> piece_names;

    long long face_count() const { return static_cast<long long>(faces.size()); }
    long long euler() const { return vertex_count - edge_count + face_count(); }
};

namespace detail {

// Carrier of a diagram: pieces with a feature at each end. A directed piece
// 2*p+0 runs with the carrier orientation (into the feature at the piece's
// head), 2*p+1 runs against it (into the feature at its tail).
struct Carrier {
    enum class FeatureKind { crossing, endpoint, vertex };
    struct End {
        FeatureKind kind = FeatureKind::endpoint;
        int crossing = -1;   // index into crossings
        bool on_over = false;  // strand of the occurrence this end belongs to
        bool in_side = false;  // true: piece precedes the occurrence on its strand
        int vertex = -1;     // index into vertex rotations
        int via_edge = -1;   // graphoid edge index used to arrive
    };
    struct Crossing {
        Sign sign = Sign::positive;
        // piece before/after each occurrence along its strand
        int over_in = -1, over_out = -1, under_in = -1, under_out = -1;
    };
    struct VertexInfo {
        std::vector<int> rotation_edges;  // edge indices, counterclockwise
    };
    struct EdgeInfo {
        int first_piece = -1;
        int piece_count = 0;
        int from_vertex = -1, to_vertex = -1;
    };

    std::vector<End> head, tail;  // per piece
    std::vector<Crossing> crossings;
    std::vector<VertexInfo> vertices;
    std::vector<EdgeInfo> edges;
    std::vector<std::string> piece_names;
    long long vertex_count = 0;
    int components = 1;

    int piece_count() const { return static_cast<int>(head.size()); }

    // Local travel rule at a crossing. Arrivals are (strand arrived on,
    // side); departures leave outward, so an "in" departure runs against
    // the strand and an "out" departure runs with it.
    //   sign +: (O,in)->(U,out)  (O,out)->(U,in)  (U,in)->(O,in)  (U,out)->(O,out)
    //   sign -: (O,in)->(U,in)   (O,out)->(U,out) (U,in)->(O,out) (U,out)->(O,in)
    // Derived from the left-turn rule: the walk exits by the clockwise-next
    // port, N -> E -> S -> W -> N.
    static std::pair<bool, bool> local_turn(Sign sign, bool on_over, bool in_side) {
        bool target_over = !on_over;
        bool target_in;
        if (sign == Sign::positive)
            target_in = on_over ? !in_side : in_side;
        else
            target_in = on_over ? in_side : !in_side;
        return {target_over, target_in};
    }

    int directed_successor(int dp) const {
        int p = dp / 2;
        bool with = (dp % 2) == 0;
        const End& e = with ? head[static_cast<std::size_t>(p)] : tail[static_cast<std::size_t>(p)];
        switch (e.kind) {
            case FeatureKind::crossing: {
                const Crossing& c = crossings[static_cast<std::size_t>(e.crossing)];
                auto [t_over, t_in] = local_turn(c.sign, e.on_over, e.in_side);
                int piece = t_over ? (t_in ? c.over_in : c.over_out) : (t_in ? c.under_in : c.under_out);
                // leaving outward: an in-piece is walked against, an
                // out-piece with
                return 2 * piece + (t_in ? 1 : 0);
            }
            case FeatureKind::endpoint:
                return dp ^ 1;  // bounce back with opposite orientation
            case FeatureKind::vertex: {
                const VertexInfo& v = vertices[static_cast<std::size_t>(e.vertex)];
                const auto& rot = v.rotation_edges;
                std::size_t pos = 0;
                while (pos < rot.size() && rot[pos] != e.via_edge) ++pos;
                if (pos == rot.size()) throw MalformedDiagram("arrival edge missing from rotation");
                // leave along the next edge in clockwise direction, i.e. the
                // previous one counterclockwise
                int out_edge = rot[(pos + rot.size() - 1) % rot.size()];
                const EdgeInfo& f = edges[static_cast<std::size_t>(out_edge)];
                if (f.from_vertex == e.vertex) return 2 * f.first_piece;  // with
                return 2 * (f.first_piece + f.piece_count - 1) + 1;       // against
            }
        }
        throw MalformedDiagram("unreachable");
    }
};

inline Carrier build_carrier(const GaussDiagram& g) {
    validate(g);
    Carrier c;
    std::map<int, int> crossing_index;  // gauss id -> index
    auto crossing_of = [&](const GaussEntry& en) {
        auto [it, fresh] = crossing_index.emplace(en.id, static_cast<int>(c.crossings.size()));
        if (fresh) c.crossings.push_back(Carrier::Crossing{en.sign, -1, -1, -1, -1});
        return it->second;
    };

    if (g.kind != DiagramKind::graphoid) {
        const int m = static_cast<int>(g.entries.size());
        const bool cyclic = g.kind == DiagramKind::knot;
        const int pieces = cyclic ? m : m + 1;
        c.head.resize(static_cast<std::size_t>(pieces));
        c.tail.resize(static_cast<std::size_t>(pieces));
        for (int p = 0; p < pieces; ++p) c.piece_names.push_back("s" + std::to_string(p));
        for (int t = 0; t < m; ++t) {
            int ci = crossing_of(g.entries[static_cast<std::size_t>(t)]);
            Carrier::Crossing& cr = c.crossings[static_cast<std::size_t>(ci)];
            bool over = g.entries[static_cast<std::size_t>(t)].strand == Strand::over;
            int in_piece = t;
            int out_piece = cyclic ? (t + 1) % m : t + 1;
            (over ? cr.over_in : cr.under_in) = in_piece;
            (over ? cr.over_out : cr.under_out) = out_piece;
            Carrier::End arrive_in{Carrier::FeatureKind::crossing, ci, over, true, -1, -1};
            Carrier::End arrive_out{Carrier::FeatureKind::crossing, ci, over, false, -1, -1};
            c.head[static_cast<std::size_t>(in_piece)] = arrive_in;    // with-direction hits the entry
            c.tail[static_cast<std::size_t>(out_piece)] = arrive_out;  // against-direction hits it
        }
        if (!cyclic) {
            c.tail[0] = Carrier::End{Carrier::FeatureKind::endpoint, -1, false, false, -1, -1};
            c.head[static_cast<std::size_t>(pieces - 1)] =
                Carrier::End{Carrier::FeatureKind::endpoint, -1, false, false, -1, -1};
            c.vertex_count = static_cast<long long>(c.crossings.size()) + 2;
        } else {
            c.vertex_count = static_cast<long long>(c.crossings.size());
        }
        c.components = 1;
        return c;
    }

    // graphoid
    std::map<std::string, int> vertex_index;
    for (const auto& v : g.vertices) {
        vertex_index.emplace(v.name, static_cast<int>(c.vertices.size()));
        c.vertices.push_back({});
    }
    std::map<std::string, int> edge_index;
    c.edges.resize(g.edges.size());
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) edge_index[g.edges[ei].name] = static_cast<int>(ei);
    for (const auto& v : g.vertices) {
        Carrier::VertexInfo& vi = c.vertices[static_cast<std::size_t>(vertex_index[v.name])];
        for (const std::string& en : v.rotation) vi.rotation_edges.push_back(edge_index[en]);
    }
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const GraphoidEdge& e = g.edges[ei];
        Carrier::EdgeInfo& info = c.edges[ei];
        info.from_vertex = vertex_index[e.from];
        info.to_vertex = vertex_index[e.to];
        info.first_piece = c.piece_count();
        info.piece_count = static_cast<int>(e.entries.size()) + 1;
        for (int k = 0; k < info.piece_count; ++k) {
            c.piece_names.push_back(e.name + "." + std::to_string(k));
            c.head.emplace_back();
            c.tail.emplace_back();
        }
        c.tail[static_cast<std::size_t>(info.first_piece)] =
            Carrier::End{Carrier::FeatureKind::vertex, -1, false, false, info.from_vertex,
                         static_cast<int>(ei)};
        c.head[static_cast<std::size_t>(info.first_piece + info.piece_count - 1)] =
            Carrier::End{Carrier::FeatureKind::vertex, -1, false, false, info.to_vertex,
                         static_cast<int>(ei)};
        for (int k = 0; k < static_cast<int>(e.entries.size()); ++k) {
            const GaussEntry& en = e.entries[static_cast<std::size_t>(k)];
            int ci = crossing_of(en);
            Carrier::Crossing& cr = c.crossings[static_cast<std::size_t>(ci)];
            bool over = en.strand == Strand::over;
            int in_piece = info.first_piece + k;
            int out_piece = info.first_piece + k + 1;
            (over ? cr.over_in : cr.under_in) = in_piece;
            (over ? cr.over_out : cr.under_out) = out_piece;
            c.head[static_cast<std::size_t>(in_piece)] =
                Carrier::End{Carrier::FeatureKind::crossing, ci, over, true, -1, -1};
            c.tail[static_cast<std::size_t>(out_piece)] =
                Carrier::End{Carrier::FeatureKind::crossing, ci, over, false, -1, -1};
        }
    }
    c.vertex_count = static_cast<long long>(c.vertices.size() + c.crossings.size());

    // components: union-find over graph vertices and crossings
    std::vector<int> parent(c.vertices.size() + c.crossings.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    const int vcount = static_cast<int>(c.vertices.size());
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        const GraphoidEdge& e = g.edges[ei];
        int prev = vertex_index[e.from];
        for (const GaussEntry& en : e.entries) {
            int cn = vcount + crossing_index[en.id];
            unite(prev, cn);
            prev = cn;
        }
        unite(prev, vertex_index[e.to]);
    }
    std::vector<int> roots;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
        if (find(i) == i) roots.push_back(i);
    c.components = static_cast<int>(roots.size());
    return c;
}

}  // namespace detail

// Enumerates the valid travels of a Gauss diagram: the closed walks that
// turn left at every crossing, bounce back at knotoid endpoints, and leave
// a graph vertex along the next edge clockwise. Each directed carrier piece
// lies on exactly one travel; the travels are the faces of the encoded
// diagram.
inline PlanarMapData faces(const GaussDiagram& g) {
    PlanarMapData out;
    if (g.kind == DiagramKind::knot && g.entries.empty()) {
        // crossing-free closed curve: two faces, nothing to traverse
        out.vertex_count = 0;
        out.edge_count = 0;
        out.components = 1;
        out.faces.resize(2);
        return out;
    }
    detail::Carrier c = detail::build_carrier(g);
    const int pieces = c.piece_count();
    out.vertex_count = c.vertex_count;
    out.edge_count = pieces;
    out.components = c.components;
    out.piece_names = c.piece_names;
    out.side_faces.assign(static_cast<std::size_t>(pieces), {-1, -1});
    std::vector<bool> seen(static_cast<std::size_t>(2 * pieces), false);
    for (int start = 0; start < 2 * pieces; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        FaceWalk walk;
        int face_id = static_cast<int>(out.faces.size());
        int dp = start;
        do {
            if (seen[static_cast<std::size_t>(dp)])
                throw MalformedDiagram("travel revisited a directed piece before closing");
            seen[static_cast<std::size_t>(dp)] = true;
            walk.steps.push_back(TravelStep{dp / 2, (dp % 2) == 0});
            out.side_faces[static_cast<std::size_t>(dp / 2)][dp % 2] = face_id;
            dp = c.directed_successor(dp);
        } while (dp != start);
        out.faces.push_back(std::move(walk));
    }
    return out;
}

struct RealizabilityVerdict {
    bool realizable = false;
    long long vertices = 0;
    long long edges = 0;
    long long face_count = 0;
    long long euler = 0;
    int components = 1;
    std::string detail;
};

// A diagram is realizable on the sphere iff every component satisfies the
// Euler relation. Travels enumerate face boundaries per component, so the
// verdict reads V - E + F = 2C; for connected diagrams that is the usual
// V - E + F = 2.
inline RealizabilityVerdict check_realizable(const GaussDiagram& g) {
    PlanarMapData m = faces(g);
    RealizabilityVerdict v;
    v.vertices = m.vertex_count;
    v.edges = m.edge_count;
    v.face_count = m.face_count();
    v.euler = m.euler();
    v.components = m.components;
    v.realizable = m.euler() == 2 * m.components;
    if (!v.realizable)
        v.detail = "V - E + F = " + std::to_string(v.euler) + ", expected " +
                   std::to_string(2 * m.components);
    return v;
}

// Decorated-map isomorphism via canonical rooted traversals. The map is the
// pair of permutations (face successor, direction reversal) on directed
// pieces plus local decorations; rooting at every directed piece and taking
// the least signature removes the root choice.
inline bool diagram_isomorphic(const GaussDiagram& a, const GaussDiagram& b) {
    auto signature = [](const GaussDiagram& g) {
        std::vector<std::vector<std::int64_t>> sigs;
        if (g.kind == DiagramKind::knot && g.entries.empty()) return sigs;
        detail::Carrier c = detail::build_carrier(g);
        const int n = 2 * c.piece_count();
        std::vector<int> succ(static_cast<std::size_t>(n));
        for (int dp = 0; dp < n; ++dp) succ[static_cast<std::size_t>(dp)] = c.directed_successor(dp);
        auto decoration = [&](int dp) -> std::int64_t {
            int p = dp / 2;
            bool with = (dp % 2) == 0;
            const detail::Carrier::End& e =
                with ? c.head[static_cast<std::size_t>(p)] : c.tail[static_cast<std::size_t>(p)];
            switch (e.kind) {
                case detail::Carrier::FeatureKind::crossing:
                    return 100 + 8 * (e.on_over ? 1 : 0) + 4 * (e.in_side ? 1 : 0) +
                           (c.crossings[static_cast<std::size_t>(e.crossing)].sign == Sign::positive ? 2 : 0);
                case detail::Carrier::FeatureKind::endpoint:
                    return 200;
                case detail::Carrier::FeatureKind::vertex:
                    return 300 + static_cast<std::int64_t>(
                                     c.vertices[static_cast<std::size_t>(e.vertex)].rotation_edges.size());
            }
            return 0;
        };
        std::vector<std::vector<std::int64_t>> all;
        std::vector<int> label(static_cast<std::size_t>(n));
        std::vector<int> order;
        for (int root = 0; root < n; ++root) {
            std::fill(label.begin(), label.end(), -1);
            order.clear();
            label[static_cast<std::size_t>(root)] = 0;
            order.push_back(root);
            for (std::size_t q = 0; q < order.size(); ++q) {
                for (int nb : {succ[static_cast<std::size_t>(order[q])], order[q] ^ 1}) {
                    if (label[static_cast<std::size_t>(nb)] < 0) {
                        label[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
                        order.push_back(nb);
                    }
                }
            }
            std::vector<std::int64_t> sig;
            sig.reserve(order.size() * 3);
            for (int dp : order) {
                sig.push_back(label[static_cast<std::size_t>(succ[static_cast<std::size_t>(dp)])]);
                sig.push_back(label[static_cast<std::size_t>(dp ^ 1)]);
                sig.push_back(decoration(dp));
            }
            // disconnected diagrams: traversal covers one component; append
            // size so different roots stay comparable
            sig.push_back(static_cast<std::int64_t>(order.size()));
            all.push_back(std::move(sig));
        }
        std::sort(all.begin(), all.end());
        return all;
    };
    if (a.kind != b.kind) throw KindMismatch("cannot compare diagrams of different kinds");
    return signature(a) == signature(b);
}

}  // namespace stronggeo

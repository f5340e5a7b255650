#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "igcurve/indexing.hpp"
#include "igcurve/weyl.hpp"

namespace igcurve {

enum class Flavor { Even, Odd };

inline const char* to_string(Flavor f) { return f == Flavor::Even ? "even" : "odd"; }

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u = 0;
    int v = 0;
    int degree = 1;
    PositiveRoot root;
};

inline int edge_degree(const PositiveRoot& a, int k) {
    switch (classify_root(a, k)) {
        case RootClass::DegreeOne: return 1;
        case RootClass::DegreeTwo: return 2;
        case RootClass::Parabolic: break;
    }
    throw std::invalid_argument("root lies in the parabolic subsystem");
}

inline int barred_count(const CosetRep& w) {
    return static_cast<int>(std::count_if(w.window.begin(), w.window.end(),
                                          [&](int v) { return w.space.is_barred(v); }));
}

// Right action of s_a on the minimal representative, then project.
inline CosetRep reflect(const CosetRep& w, const PositiveRoot& a) {
    return coset_rep(compose(min_rep(w), reflection(a, w.space.rank())), w.space.k);
}

inline std::uint64_t vertex_count(const SpaceParams& s, Flavor f) {
    // isotropic k-subsets, optionally avoiding bar(1)
    std::uint64_t even = 1, odd = 1;
    for (int i = 0; i < s.k; ++i) even = even * (s.rank() - i) / (i + 1);
    even <<= s.k;
    // odd: choose k values from n+1 absolute values; the value 1 may only appear unbarred
    std::uint64_t with1 = 1, without1 = 1;
    for (int i = 0; i < s.k - 1; ++i) with1 = with1 * (s.n - i) / (i + 1);
    with1 <<= (s.k - 1);
    if (s.k <= s.n) {
        for (int i = 0; i < s.k; ++i) without1 = without1 * (s.n - i) / (i + 1);
        without1 <<= s.k;
    } else {
        without1 = 0;
    }
    odd = with1 + without1;
    return f == Flavor::Even ? even : odd;
}

enum class VertexKind { Z, Y, EvenOnly };

inline const char* to_string(VertexKind v) {
    switch (v) {
        case VertexKind::Z: return "Z";
        case VertexKind::Y: return "Y";
        case VertexKind::EvenOnly: return "evenOnly";
    }
    return "";
}

inline VertexKind vertex_kind(const CosetRep& w) {
    if (!w.is_odd()) return VertexKind::EvenOnly;
    return w.in_closed_orbit() ? VertexKind::Z : VertexKind::Y;
}

inline Orbit classify_vertex(const CosetRep& w) {
    if (!w.is_odd()) throw std::invalid_argument("vertex contains bar(1); it is not in the odd space");
    return w.in_closed_orbit() ? Orbit::Z : Orbit::Y;
}

class MomentGraph {
public:
    MomentGraph(SpaceParams space, Flavor flavor, std::uint64_t max_vertices = 200000)
        : space_(space), flavor_(flavor) {
        space_.validate();
        if (vertex_count(space_, flavor_) > max_vertices)
            throw ResourceLimit("moment graph of " + space_name(space_) + " exceeds the vertex bound");
        enumerate();
        connect();
    }

    const SpaceParams& space() const { return space_; }
    Flavor flavor() const { return flavor_; }
    const std::vector<CosetRep>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const CosetRep& vertex(int id) const { return vertices_.at(id); }

    std::optional<int> find(const CosetRep& w) const {
        if (w.space != space_) return std::nullopt;
        auto it = index_.find(w.window);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int id_of(const CosetRep& w) const {
        auto id = find(w);
        if (!id) throw std::invalid_argument("coset is not a vertex of this moment graph");
        return *id;
    }

    // (neighbor, cheapest degree) pairs
    const std::vector<std::pair<int, int>>& neighbors(int id) const { return adj_.at(id); }

private:
    void enumerate() {
        std::vector<int> cur;
        const int top = space_.letters() - (flavor_ == Flavor::Odd ? 1 : 0);
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(cur.size()) == space_.k) {
                index_.emplace(cur, static_cast<int>(vertices_.size()));
                vertices_.push_back(CosetRep{space_, cur});
                return;
            }
            for (int v = next; v <= top; ++v) {
                if (std::find(cur.begin(), cur.end(), space_.bar(v)) != cur.end()) continue;
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 1);
    }

    void connect() {
        const auto roots = roots_outside_parabolic(space_);
        std::map<std::pair<int, int>, int> cheapest;
        for (int u = 0; u < size(); ++u)
            for (const auto& a : roots) {
                auto v = find(reflect(vertices_[u], a));
                if (!v || *v <= u) continue;
                const int deg = edge_degree(a, space_.k);
                edges_.push_back(Edge{u, *v, deg, a});
                auto [it, fresh] = cheapest.emplace(std::pair{u, *v}, deg);
                if (!fresh) it->second = std::min(it->second, deg);
            }
        adj_.assign(size(), {});
        for (const auto& [uv, deg] : cheapest) {
            adj_[uv.first].emplace_back(uv.second, deg);
            adj_[uv.second].emplace_back(uv.first, deg);
        }
    }

    SpaceParams space_;
    Flavor flavor_;
    std::vector<CosetRep> vertices_;
    std::map<std::vector<int>, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

inline MomentGraph build_graph(const SpaceParams& space, Flavor flavor, std::uint64_t max_vertices = 200000) {
    return MomentGraph(space, flavor, max_vertices);
}

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct ChainQuery {
    std::vector<int> sources;
    int budget = 0;
};

// Multi-source shortest chain degrees; entries above the budget are kUnreachable.
inline std::vector<int> min_degree_map(const MomentGraph& g, const ChainQuery& q) {
    if (q.budget < 0) throw std::invalid_argument("budget must be nonnegative");
    std::vector<int> dist(g.size(), kUnreachable);
    std::vector<std::vector<int>> bucket(q.budget + 1);
    for (int s : q.sources) {
        if (s < 0 || s >= g.size()) throw std::invalid_argument("unknown source vertex");
        dist[s] = 0;
        bucket[0].push_back(s);
    }
    for (int d = 0; d <= q.budget; ++d)
        for (std::size_t p = 0; p < bucket[d].size(); ++p) {
            const int u = bucket[d][p];
            if (dist[u] != d) continue;
            for (auto [v, deg] : g.neighbors(u)) {
                const int nd = d + deg;
                if (nd <= q.budget && nd < dist[v]) {
                    dist[v] = nd;
                    bucket[nd].push_back(v);
                }
            }
        }
    return dist;
}

inline std::vector<CosetRep> bruhat_maxima(std::vector<CosetRep> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<CosetRep> out;
    for (const auto& x : xs) {
        bool dominated = false;
        for (const auto& y : xs)
            if (!(x == y) && bruhat_leq(x, y)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(x);
    }
    return out;
}

inline std::vector<CosetRep> oracle_nbhd(const MomentGraph& g, const CosetRep& w, int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    g.id_of(w);
    ChainQuery q{{}, d};
    for (int u = 0; u < g.size(); ++u)
        if (bruhat_leq(g.vertex(u), w)) q.sources.push_back(u);
    const auto dist = min_degree_map(g, q);
    std::vector<CosetRep> reached;
    for (int u = 0; u < g.size(); ++u)
        if (dist[u] != kUnreachable) reached.push_back(g.vertex(u));
    return bruhat_maxima(std::move(reached));
}

// ---------------------------------------------------------------------------
// Export.

namespace detail {

inline const char* kind_color(VertexKind k) {
    switch (k) {
        case VertexKind::Z: return "red";
        case VertexKind::Y: return "black";
        case VertexKind::EvenOnly: return "blue";
    }
    return "black";
}

}  // namespace detail

inline std::string to_dot(const MomentGraph& g) {
    std::ostringstream out;
    out << "graph \"" << (g.flavor() == Flavor::Odd ? space_name(g.space())
                                                     : "IG(" + std::to_string(g.space().k) + "," +
                                                           std::to_string(g.space().letters()) + ")")
        << "\" {\n";
    out << "  node [shape=box];\n";
    for (int u = 0; u < g.size(); ++u) {
        const auto kind = vertex_kind(g.vertex(u));
        out << "  v" << u << " [label=\"" << format_window(g.vertex(u)) << "\", orbit=" << to_string(kind)
            << ", color=" << detail::kind_color(kind) << "];\n";
    }
    for (const auto& e : g.edges()) {
        const auto ku = vertex_kind(g.vertex(e.u)), kv = vertex_kind(g.vertex(e.v));
        const char* color = "black";
        if (ku == VertexKind::EvenOnly || kv == VertexKind::EvenOnly)
            color = "blue";
        else if (ku != kv)
            color = "green";
        else if (ku == VertexKind::Z)
            color = "red";
        out << "  v" << e.u << " -- v" << e.v << " [degree=" << e.degree << ", root=\"" << to_string(e.root)
            << "\", color=" << color << (e.degree == 2 ? ", style=bold" : "") << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace igcurve

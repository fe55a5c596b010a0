#include "tropcone/hypergraph.hpp"

#include <algorithm>

namespace tropcone {

IndexSet reachable_set(const DirectedHypergraph& g, IndexSet I) {
    const int m = static_cast<int>(g.arcs.size());
    std::vector<int> missing(m);
    std::vector<std::vector<int>> arcs_waiting_on(g.n);
    IndexSet reached = I;
    std::vector<int> queue = I.indices();
    for (int a = 0; a < m; ++a) {
        IndexSet pending = g.arcs[a].tail.minus(reached);
        missing[a] = pending.size();
        for (int t : pending.indices()) arcs_waiting_on[t].push_back(a);
        if (missing[a] == 0)
            for (int h : g.arcs[a].head.indices())
                if (!reached.contains(h)) { reached.add(h); queue.push_back(h); }
    }
    while (!queue.empty()) {
        int node = queue.back();
        queue.pop_back();
        for (int a : arcs_waiting_on[node]) {
            if (--missing[a] == 0)
                for (int h : g.arcs[a].head.indices())
                    if (!reached.contains(h)) { reached.add(h); queue.push_back(h); }
        }
    }
    return reached;
}

TangentHypergraph tangent_hypergraph(const std::vector<GeneralHalfSpace>& gamma,
                                     const Point& z) {
    TangentHypergraph out;
    out.graph.n = z.dim();
    for (size_t k = 0; k < gamma.size(); ++k) {
        const auto& h = gamma[k];
        if (!h.member(z))
            throw PreconditionError("tangent_hypergraph: point " + z.str() +
                                    " lies outside half-space #" + std::to_string(k + 1));
        if (!h.active_at(z)) continue;
        Hyperarc arc{h.lhs_argmax(z), h.rhs_argmax(z)};
        bool dup = false;
        for (const auto& seen : out.graph.arcs)
            if (seen.tail == arc.tail && seen.head == arc.head) { dup = true; break; }
        if (dup) continue;  // identical arcs from several active members
        out.graph.arcs.push_back(arc);
        out.origin.push_back(static_cast<int>(k));
    }
    return out;
}

TangentHypergraph tangent_hypergraph(const std::vector<HalfSpace>& gamma,
                                     const Point& z) {
    std::vector<GeneralHalfSpace> general;
    general.reserve(gamma.size());
    for (const auto& h : gamma) general.push_back(h.general());
    return tangent_hypergraph(general, z);
}

namespace {

std::vector<GeneralHalfSpace> to_general(const std::vector<HalfSpace>& gamma) {
    std::vector<GeneralHalfSpace> out;
    out.reserve(gamma.size());
    for (const auto& h : gamma) out.push_back(h.general());
    return out;
}

} // namespace

bool is_redundant(const HalfSpace& h, const std::vector<GeneralHalfSpace>& gamma) {
    TangentHypergraph g = tangent_hypergraph(gamma, h.apex());
    return reachable_set(g.graph, h.sectors()) == IndexSet::full(h.dim());
}

bool is_redundant(const HalfSpace& h, const std::vector<HalfSpace>& gamma) {
    return is_redundant(h, to_general(gamma));
}

Point witness_point(const HalfSpace& h, const std::vector<GeneralHalfSpace>& gamma) {
    if (is_redundant(h, gamma))
        throw PreconditionError("witness_point: half-space is redundant");
    TangentHypergraph g = tangent_hypergraph(gamma, h.apex());
    IndexSet reach = reachable_set(g.graph, h.sectors());
    const int n = h.dim();
    Rat delta(1);
    for (int iter = 0; iter < 64; ++iter) {
        std::vector<Scalar> coords;
        coords.reserve(n);
        for (int i = 0; i < n; ++i) {
            Rat c = h.apex()[i].value();
            if (!reach.contains(i)) c += delta;  // epsilon = 1 folded into delta
            coords.emplace_back(Scalar(std::move(c)));
        }
        Point x(std::move(coords));
        bool inside_all = true;
        for (const auto& hp : gamma)
            if (!hp.member(x)) { inside_all = false; break; }
        if (inside_all && !h.member(x)) return x;
        delta /= 2;
    }
    throw InternalError("witness_point: no separating point after 64 halvings");
}

Point witness_point(const HalfSpace& h, const std::vector<HalfSpace>& gamma) {
    return witness_point(h, to_general(gamma));
}

ApexDigraph apex_digraph(const std::vector<HalfSpace>& lambda, const Point& a,
                         const std::vector<IndexSet>& Ea) {
    for (const auto& h : lambda)
        if (h.apex().proj_equal(a))
            throw PreconditionError("apex_digraph: a member of lambda has apex a");
    TangentHypergraph g = tangent_hypergraph(lambda, a);
    ApexDigraph out;
    out.nodes = Ea;
    out.closure.reserve(Ea.size());
    for (IndexSet I : Ea) out.closure.push_back(reachable_set(g.graph, I));
    out.adjacency.assign(Ea.size(), {});
    for (size_t u = 0; u < Ea.size(); ++u)
        for (size_t v = 0; v < Ea.size(); ++v)
            if (u != v && Ea[v].subset_of(out.closure[u]))
                out.adjacency[u].push_back(static_cast<int>(v));
    return out;
}

namespace {

struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, low, stack;
    std::vector<bool> on_stack;
    std::vector<int> component_of;
    int counter = 0, components = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& a)
        : adj(a),
          index(a.size(), -1),
          low(a.size(), 0),
          on_stack(a.size(), false),
          component_of(a.size(), -1) {}

    void run(int root) {
        // iterative Tarjan
        std::vector<std::pair<int, size_t>> call_stack{{root, 0}};
        while (!call_stack.empty()) {
            auto& [v, child] = call_stack.back();
            if (child == 0) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (child < adj[v].size()) {
                int w = adj[v][child++];
                if (index[w] == -1) {
                    call_stack.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                int comp = components++;
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component_of[w] = comp;
                    if (w == v) break;
                }
            }
            int done = v;
            call_stack.pop_back();
            if (!call_stack.empty()) {
                int parent = call_stack.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
};

} // namespace

SccQuotient scc_quotient(const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    TarjanState t(adjacency);
    for (int v = 0; v < n; ++v)
        if (t.index[v] == -1) t.run(v);

    SccQuotient out;
    out.component_of = t.component_of;
    out.components.resize(t.components);
    for (int v = 0; v < n; ++v) out.components[t.component_of[v]].members.push_back(v);
    out.order.assign(t.components, {});
    std::vector<bool> has_exit(t.components, false);
    for (int u = 0; u < n; ++u)
        for (int w : adjacency[u]) {
            int cu = t.component_of[u], cw = t.component_of[w];
            if (cu != cw) {
                has_exit[cu] = true;
                auto& row = out.order[cu];
                if (std::find(row.begin(), row.end(), cw) == row.end()) row.push_back(cw);
            }
        }
    // an arc u -> w means w is reachable from u, so components with no exit
    // arc are the maximal ones for the reachability order
    for (int c = 0; c < t.components; ++c)
        out.components[c].maximal = !has_exit[c];
    return out;
}

int principal_element(const ApexDigraph& g, const SccComponent& comp) {
    int best = comp.members.front();
    for (int v : comp.members)
        if (g.nodes[best].subset_of(g.nodes[v])) best = v;
    for (int v : comp.members) {
        if (!g.nodes[v].subset_of(g.nodes[best]))
            throw InternalError("principal_element: component is not a principal ideal");
        if (!(g.closure[v] == g.nodes[best]))
            throw InternalError("principal_element: closure disagrees with principal element");
    }
    return best;
}

} // namespace tropcone

#include "maxkcut/chordal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "maxkcut/errors.hpp"

namespace maxkcut {

namespace {

std::vector<std::set<int>> adjacency_sets(const Graph& g) {
    std::vector<std::set<int>> adj(g.num_vertices());
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    return adj;
}

} // namespace

ChordalInfo chordal_extend(const Graph& g) {
    const int n = g.num_vertices();
    auto adj = adjacency_sets(g);
    std::vector<bool> eliminated(n, false);

    ChordalInfo info;
    info.peo.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::size_t best_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            if (best < 0 || adj[v].size() < best_deg) {
                best = v;
                best_deg = adj[v].size();
            }
        }
        // make the remaining neighborhood a clique
        std::vector<int> nbrs(adj[best].begin(), adj[best].end());
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const int a = nbrs[i], b = nbrs[j];
                if (adj[a].insert(b).second) {
                    adj[b].insert(a);
                    info.fill_edges.emplace_back(std::min(a, b), std::max(a, b));
                }
            }
        for (int u : nbrs) adj[u].erase(best);
        adj[best].clear();
        eliminated[best] = true;
        info.peo.push_back(best);
    }
    std::sort(info.fill_edges.begin(), info.fill_edges.end());
    info.maximal_cliques = maximal_cliques(extended_graph(g, info), info.peo);
    return info;
}

Graph extended_graph(const Graph& g, const ChordalInfo& info) {
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : info.fill_edges) edges.push_back({u, v, 0.0});
    return Graph(g.num_vertices(), std::move(edges));
}

namespace {

// Position-indexed PEO test: every vertex's later neighbors must form a
// clique; equivalently its earliest later neighbor is adjacent to the rest.
bool is_peo(const Graph& g, const std::vector<int>& order, int* fail_vertex,
            std::pair<int, int>* fail_pair) {
    const int n = g.num_vertices();
    auto adj = adjacency_sets(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> later;
        for (int u : adj[v])
            if (pos[u] > i) later.push_back(u);
        if (later.size() < 2) continue;
        std::sort(later.begin(), later.end(),
                  [&pos](int a, int b) { return pos[a] < pos[b]; });
        const int parent = later.front();
        for (std::size_t t = 1; t < later.size(); ++t)
            if (!adj[parent].count(later[t])) {
                if (fail_vertex) *fail_vertex = v;
                if (fail_pair) *fail_pair = {parent, later[t]};
                return false;
            }
    }
    return true;
}

// Chordless-cycle certificate: for a non-adjacent pair u,w in N(v), a
// shortest u-w path avoiding N[v] \setminus {u,w} closes a chordless cycle
// through v. Some such triple always works in a non-chordal graph.
std::vector<int> find_chordless_cycle(const Graph& g) {
    const int n = g.num_vertices();
    auto adj = adjacency_sets(g);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int u = nb[i], w = nb[j];
                if (adj[u].count(w)) continue;
                std::vector<bool> blocked(n, false);
                blocked[v] = true;
                for (int x : adj[v])
                    if (x != u && x != w) blocked[x] = true;
                std::vector<int> prev(n, -1);
                std::deque<int> queue{u};
                std::vector<bool> seen(n, false);
                seen[u] = true;
                while (!queue.empty()) {
                    const int cur = queue.front();
                    queue.pop_front();
                    if (cur == w) break;
                    for (int nxt : adj[cur]) {
                        if (seen[nxt] || blocked[nxt]) continue;
                        seen[nxt] = true;
                        prev[nxt] = cur;
                        queue.push_back(nxt);
                    }
                }
                if (!seen[w]) continue;
                std::vector<int> cycle{v};
                for (int cur = w; cur != -1; cur = prev[cur]) cycle.push_back(cur);
                std::reverse(cycle.begin() + 1, cycle.end()); // v, u, ..., w
                return cycle;
            }
    }
    return {};
}

} // namespace

ChordalCheck verify_chordal(const Graph& g) {
    const int n = g.num_vertices();
    auto adj = adjacency_sets(g);

    // maximum cardinality search, numbering from the back
    std::vector<int> weight(n, 0), order(n, -1);
    std::vector<bool> numbered(n, false);
    for (int i = n - 1; i >= 0; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        order[i] = best;
        for (int u : adj[best])
            if (!numbered[u]) ++weight[u];
    }

    if (is_peo(g, order, nullptr, nullptr)) return {true, order, {}};
    return {false, {}, find_chordless_cycle(g)};
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g, const std::vector<int>& peo) {
    const int n = g.num_vertices();
    std::vector<bool> hit(n, false);
    if (static_cast<int>(peo.size()) != n)
        throw Error(ErrorKind::InvalidPeo, "order length != vertex count");
    for (int v : peo) {
        if (v < 0 || v >= n || hit[v])
            throw Error(ErrorKind::InvalidPeo, "order is not a permutation");
        hit[v] = true;
    }
    if (!is_peo(g, peo, nullptr, nullptr))
        throw Error(ErrorKind::InvalidPeo, "order is not a perfect elimination ordering");

    auto adj = adjacency_sets(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;

    std::vector<std::vector<int>> candidates;
    for (int i = 0; i < n; ++i) {
        const int v = peo[i];
        std::vector<int> clique{v};
        for (int u : adj[v])
            if (pos[u] > i) clique.push_back(u);
        std::sort(clique.begin(), clique.end());
        candidates.push_back(std::move(clique));
    }
    std::vector<std::vector<int>> result;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
            if (i == j) continue;
            if (candidates[j].size() < candidates[i].size()) continue;
            if (candidates[j].size() == candidates[i].size() && j > i) continue;
            maximal = !std::includes(candidates[j].begin(), candidates[j].end(),
                                     candidates[i].begin(), candidates[i].end());
        }
        if (maximal) result.push_back(candidates[i]);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

} // namespace maxkcut

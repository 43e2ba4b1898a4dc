#include "maxkcut/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "maxkcut/errors.hpp"

namespace maxkcut {

ExactResult brute_force_opt(const Graph& g, int k, long long point_cap) {
    if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
    const int n = g.num_vertices();

    double points = 1.0;
    for (int i = 0; i < n - 1; ++i) {
        points *= k;
        if (points > static_cast<double>(point_cap))
            throw Error(ErrorKind::TooLarge, "k^(n-1) exceeds the enumeration cap");
    }

    Partitioning p{std::vector<int>(n, 0), k};
    Partitioning best = p;
    double best_value = cut_value(g, p);
    long long nodes = 1;

    // odometer over vertices 1..n-1 in lexicographic order; the first
    // maximum seen is the lexicographically smallest maximizer
    while (true) {
        int pos = n - 1;
        while (pos >= 1 && p.assignment[pos] == k - 1) p.assignment[pos--] = 0;
        if (pos < 1) break;
        ++p.assignment[pos];
        ++nodes;
        const double v = cut_value(g, p);
        if (v > best_value) {
            best_value = v;
            best = p;
        }
    }
    return {best_value, best, true, best_value, nodes};
}

namespace {

struct BnbState {
    const Graph* g;
    int k;
    std::vector<int> order;       // vertices, heaviest first
    std::vector<int> label;       // per vertex, -1 while unassigned
    std::vector<double> tail_pos; // positive weight of edges not fully inside the prefix
    double incumbent;
    std::vector<int> best_label;
    double open_bound; // sup of bounds over abandoned subtrees
    long long nodes;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out;
};

void dfs(BnbState& st, int depth, double cut_so_far, double remaining_pos) {
    ++st.nodes;
    const double bound = cut_so_far + remaining_pos;
    if (bound <= st.incumbent + 1e-12) return;
    if ((st.nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() > st.deadline) {
        st.timed_out = true;
    }
    if (st.timed_out) {
        st.open_bound = std::max(st.open_bound, bound);
        return;
    }
    const int n = st.g->num_vertices();
    if (depth == n) {
        st.incumbent = cut_so_far;
        st.best_label = st.label;
        return;
    }
    const int v = st.order[depth];
    double pos_v = 0.0; // positive mass v contributes to the prefix
    for (auto [u, w] : st.g->neighbors(v))
        if (st.label[u] >= 0) pos_v += std::max(w, 0.0);
    const int labels = std::min(depth + 1, st.k);
    for (int j = 0; j < labels; ++j) {
        double gained = 0.0;
        for (auto [u, w] : st.g->neighbors(v))
            if (st.label[u] >= 0 && st.label[u] != j) gained += w;
        st.label[v] = j;
        dfs(st, depth + 1, cut_so_far + gained, remaining_pos - pos_v);
        st.label[v] = -1;
    }
}

} // namespace

ExactResult branch_and_bound_opt(const Graph& g, int k, double time_cap_seconds) {
    if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
    const int n = g.num_vertices();

    BnbState st;
    st.g = &g;
    st.k = k;
    st.order.resize(n);
    for (int v = 0; v < n; ++v) st.order[v] = v;
    std::vector<double> wdeg(n, 0.0);
    for (const auto& e : g.edges()) {
        wdeg[e.u] += std::fabs(e.w);
        wdeg[e.v] += std::fabs(e.w);
    }
    std::stable_sort(st.order.begin(), st.order.end(),
                     [&wdeg](int a, int b) { return wdeg[a] > wdeg[b]; });
    st.label.assign(n, -1);
    st.incumbent = 0.0; // the all-in-one-partition point
    st.best_label.assign(n, 0);
    st.open_bound = 0.0;
    st.nodes = 0;
    st.timed_out = false;
    st.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_cap_seconds));

    dfs(st, 0, 0.0, g.positive_weight());

    ExactResult res;
    res.value = st.incumbent;
    res.partitioning = {st.best_label, k};
    res.proved = !st.timed_out;
    res.upper_bound = st.timed_out ? std::max(st.incumbent, st.open_bound) : st.incumbent;
    res.nodes = st.nodes;
    return res;
}

} // namespace maxkcut

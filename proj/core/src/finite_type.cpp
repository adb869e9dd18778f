#include "coxsplit/finite_type.hpp"

#include <algorithm>
#include <array>

namespace coxsplit {

namespace {

BigInt factorial(int n) {
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

BigInt pow2(int n) {
    return BigInt(1) << n;
}

ComponentType infinite_component(Subset comp) {
    return {comp, "infinite", 0};
}

// Classify one connected noncommuting-diagram component against the catalog
// of finite irreducible types. Shape checks operate on the tree of edges with
// label ≥ 3.
ComponentType classify_component(const CoxeterSystem& sys, Subset comp) {
    const auto verts = comp.indices();
    const int n = static_cast<int>(verts.size());

    if (n == 1) return {comp, "A_1", 2};

    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint32_t> labels;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            std::uint32_t m = sys.order(verts[a], verts[b]);
            if (m == CoxeterSystem::infinity) return infinite_component(comp);
            if (m >= 3) {
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                labels.push_back(m);
            }
        }

    if (n == 2) {
        std::uint32_t m = labels[0];
        if (m == 3) return {comp, "A_2", 6};
        if (m == 4) return {comp, "B_2", 8};
        return {comp, "I2(" + std::to_string(m) + ")", BigInt(2) * m};
    }

    // connected on n vertices, so more than n−1 edges means a cycle
    if (edges.size() != static_cast<std::size_t>(n) - 1) return infinite_component(comp);

    std::vector<int> degree(verts.size(), 0);
    std::vector<std::uint32_t> heavy_at(verts.size(), 0);  // label > 3 incident to vertex
    int heavy_edges = 0;
    std::uint32_t heavy_label = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        ++degree[static_cast<std::size_t>(edges[e].first)];
        ++degree[static_cast<std::size_t>(edges[e].second)];
        if (labels[e] > 3) {
            ++heavy_edges;
            heavy_label = labels[e];
            heavy_at[static_cast<std::size_t>(edges[e].first)] = labels[e];
            heavy_at[static_cast<std::size_t>(edges[e].second)] = labels[e];
        }
    }
    if (heavy_edges >= 2) return infinite_component(comp);

    std::vector<int> branch, leaves;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        if (degree[v] >= 4) return infinite_component(comp);
        if (degree[v] == 3) branch.push_back(static_cast<int>(v));
        if (degree[v] == 1) leaves.push_back(static_cast<int>(v));
    }
    if (branch.size() >= 2) return infinite_component(comp);

    if (branch.size() == 1) {
        if (heavy_edges != 0) return infinite_component(comp);
        // arm lengths from the single branch vertex
        std::vector<std::vector<int>> adj(verts.size());
        for (auto [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        std::array<int, 3> arms{};
        int idx = 0;
        for (int nb : adj[static_cast<std::size_t>(branch[0])]) {
            int len = 1, prev = branch[0], cur = nb;
            while (adj[static_cast<std::size_t>(cur)].size() == 2) {
                int nxt = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                                        : adj[static_cast<std::size_t>(cur)][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms[static_cast<std::size_t>(idx++)] = len;
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
            return {comp, "D_" + std::to_string(n), pow2(n - 1) * factorial(n)};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return {comp, "E6", 51840};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return {comp, "E7", 2903040};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return {comp, "E8", 696729600};
        return infinite_component(comp);
    }

    // path shape
    if (heavy_edges == 0) return {comp, "A_" + std::to_string(n), factorial(n + 1)};
    bool heavy_at_leaf = heavy_at[static_cast<std::size_t>(leaves[0])] > 0 ||
                         heavy_at[static_cast<std::size_t>(leaves[1])] > 0;
    if (heavy_label == 4) {
        if (heavy_at_leaf) return {comp, "B_" + std::to_string(n), pow2(n) * factorial(n)};
        if (n == 4) return {comp, "F4", 1152};
        return infinite_component(comp);
    }
    if (heavy_label == 5 && heavy_at_leaf) {
        if (n == 3) return {comp, "H3", 120};
        if (n == 4) return {comp, "H4", 14400};
    }
    return infinite_component(comp);
}

}  // namespace

FiniteTypeVerdict is_finite_type(const CoxeterSystem& sys, Subset a) {
    FiniteTypeVerdict out;
    out.finite = true;
    out.order = 1;
    for (Subset comp : sys.noncommuting_components(a)) {
        ComponentType ct = classify_component(sys, comp);
        if (!ct.finite()) {
            out.finite = false;
            out.order = 0;
        }
        if (out.finite) out.order *= ct.order;
        out.components.push_back(std::move(ct));
    }
    return out;
}

SplitEA split_ea(const CoxeterSystem& sys, Subset a) {
    SplitEA out;
    for (Subset comp : sys.noncommuting_components(a)) {
        if (is_finite_type(sys, comp).finite)
            out.t = out.t | comp;
        else
            out.e = out.e | comp;
    }
    return out;
}

Subset lk2(const CoxeterSystem& sys, Subset a) {
    Subset out;
    for (int s = 0; s < static_cast<int>(sys.rank()); ++s) {
        if (a.contains(s)) continue;
        bool all2 = true;
        for (int t : a.indices())
            if (sys.order(s, t) != 2) {
                all2 = false;
                break;
            }
        if (all2) out = out.with(s);
    }
    return out;
}

}  // namespace coxsplit

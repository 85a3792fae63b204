#include "diamond/partial_cube.hpp"

#include <algorithm>
#include <numeric>

namespace diamond {

namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<int> DwClass::semicube_a() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> DwClass::semicube_b() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 1) out.push_back(v);
    return out;
}

bool dw_related(const Graph& g, int e, int f, const DistanceMatrix& dm) {
    if (e < 0 || e >= g.edge_count() || f < 0 || f >= g.edge_count())
        throw std::invalid_argument("dw_related: edge index out of range");
    auto [p, q] = g.edges[e];
    auto [r, s] = g.edges[f];
    return dm(p, r) + dm(p, s) == dm(q, r) + dm(q, s);
}

std::vector<DwClass> compute_dw_classes(const Graph& g, const DistanceMatrix& dm) {
    if (g.n < 2) throw std::invalid_argument("compute_dw_classes requires n >= 2");
    const int m = g.edge_count();

    Dsu dsu(m);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (dw_related(g, e, f, dm)) dsu.unite(e, f);

    // Scanning edges in ascending order makes each root's first edge its
    // minimum, so first-seen order is the canonical class order.
    std::vector<int> class_of_root(m, -1);
    std::vector<DwClass> classes;
    for (int e = 0; e < m; ++e) {
        int root = dsu.find(e);
        if (class_of_root[root] == -1) {
            class_of_root[root] = static_cast<int>(classes.size());
            classes.push_back(DwClass{class_of_root[root], {}, {}, 0});
        }
        classes[class_of_root[root]].edges.push_back(e);
    }

    // Incidence lists with edge ids, for the per-class deletion sweeps.
    std::vector<std::vector<std::pair<int, int>>> inc(g.n);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        inc[u].emplace_back(v, e);
        inc[v].emplace_back(u, e);
    }

    std::vector<std::uint8_t> in_class(m, 0);
    for (auto& c : classes) {
        for (int e : c.edges) in_class[e] = 1;

        c.side.assign(g.n, 1);
        std::vector<std::uint8_t> visited(g.n, 0);
        std::vector<int> stack;
        auto sweep = [&](int start) {
            visited[start] = 1;
            stack.push_back(start);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [v, e] : inc[u]) {
                    if (!in_class[e] && !visited[v]) {
                        visited[v] = 1;
                        stack.push_back(v);
                    }
                }
            }
        };

        // Semicube A is the component of the minimum edge's smaller endpoint.
        int anchor = g.edges[c.edges.front()].first;
        sweep(anchor);
        for (int v = 0; v < g.n; ++v)
            if (visited[v]) c.side[v] = 0;

        c.components = 1;
        for (int v = 0; v < g.n; ++v) {
            if (!visited[v]) {
                ++c.components;
                sweep(v);
            }
        }

        for (int e : c.edges) in_class[e] = 0;
    }
    return classes;
}

int HypercubeLabeling::hamming(int u, int v) const {
    const auto& a = bits[u];
    const auto& b = bits[v];
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

HypercubeLabeling hypercube_label(const Graph& g, const std::vector<DwClass>& classes,
                                  int base) {
    if (base < 0 || base >= g.n)
        throw std::invalid_argument("hypercube_label: base vertex out of range");
    HypercubeLabeling lab;
    lab.bits_per_vertex = static_cast<int>(classes.size());
    lab.bits.assign(g.n, std::vector<std::uint8_t>(classes.size(), 0));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::uint8_t base_side = classes[i].side[base];
        for (int v = 0; v < g.n; ++v)
            lab.bits[v][i] = classes[i].side[v] != base_side;
    }
    return lab;
}

PartialCubeVerdict is_partial_cube(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("is_partial_cube requires n >= 1");
    if (!check_connected(g))
        throw std::invalid_argument("is_partial_cube requires a connected graph");

    PartialCubeVerdict out;
    if (g.n == 1) {
        out.is_partial_cube = true;
        out.labeling.bits_per_vertex = 0;
        out.labeling.bits.assign(1, {});
        return out;
    }

    auto colored = two_color(g);
    if (!colored.bipartite) {
        out.certificate = {Certificate::Reason::odd_cycle, colored.odd_cycle};
        return out;
    }

    auto dm = all_pairs_distances(g);
    out.classes = compute_dw_classes(g, dm);
    auto lab = hypercube_label(g, out.classes, 0);
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            if (lab.hamming(u, v) != dm(u, v)) {
                out.certificate = {Certificate::Reason::not_partial_cube, {u, v}};
                return out;
            }
        }
    }
    out.is_partial_cube = true;
    out.labeling = std::move(lab);
    return out;
}

}  // namespace diamond

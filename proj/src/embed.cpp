#include "diamond/embed.hpp"

#include <algorithm>
#include <cstdlib>

#include "diamond/matching.hpp"

namespace diamond {

std::vector<int> OrientedCut::white_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(white_side.size()); ++v)
        if (white_side[v]) out.push_back(v);
    return out;
}

OrientCutsResult orient_cuts(const Graph& g, const std::vector<DwClass>& classes,
                             const TwoColoring& coloring) {
    OrientCutsResult out;
    out.coherent = true;
    for (const auto& c : classes) {
        int want = -1;
        int first_edge = -1;
        for (int e : c.edges) {
            auto [u, v] = g.edges[e];
            int w = coloring.is_white(u) ? u : v;
            int s = c.side[w];
            if (want == -1) {
                want = s;
                first_edge = e;
            } else if (s != want) {
                auto [u1, v1] = g.edges[first_edge];
                int p1 = coloring.is_white(u1) ? u1 : v1;
                int q1 = p1 == u1 ? v1 : u1;
                int q2 = w == u ? v : u;
                out.coherent = false;
                out.cuts.clear();
                out.certificate = {Certificate::Reason::incoherent_cut,
                                   {c.id, p1, q1, w, q2}};
                return out;
            }
        }
        OrientedCut cut;
        cut.class_id = c.id;
        cut.white_side.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) cut.white_side[v] = c.side[v] == want;
        out.cuts.push_back(std::move(cut));
    }
    return out;
}

CutPoset cut_poset(const std::vector<OrientedCut>& cuts, int n) {
    const int k = static_cast<int>(cuts.size());
    CutPoset p;
    p.k = k;
    p.below_cells.assign(static_cast<std::size_t>(k) * k, 0);

    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bs(k, std::vector<std::uint64_t>(words, 0));
    std::vector<int> count(k, 0);
    for (int i = 0; i < k; ++i) {
        for (int v = 0; v < n; ++v) {
            if (cuts[i].white_side[v]) {
                bs[i][v >> 6] |= std::uint64_t{1} << (v & 63);
                ++count[i];
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j || count[i] >= count[j]) continue;
            bool subset = true;
            for (int w = 0; w < words && subset; ++w)
                subset = (bs[i][w] & ~bs[j][w]) == 0;
            if (subset) p.below_cells[static_cast<std::size_t>(i) * k + j] = 1;
        }
    }
    return p;
}

WidthAndChains poset_width_and_chains(const CutPoset& p) {
    const int k = p.k;
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (p.below(i, j)) adj[i].push_back(j);

    auto m = max_bipartite_matching(k, k, adj);

    WidthAndChains out;
    out.width = k - m.size;
    // match_left[i] == j chains i immediately before j; heads are the cuts
    // nothing chains into.
    for (int h = 0; h < k; ++h) {
        if (m.match_right[h] != -1) continue;
        std::vector<int> chain;
        for (int cur = h; cur != -1; cur = m.match_left[cur]) chain.push_back(cur);
        out.decomposition.chains.push_back(std::move(chain));
    }
    return out;
}

DiamondAnalysis analyze(const Graph& g) {
    DiamondAnalysis a;
    if (g.n == 0) {
        // Empty graph: rejected as disconnected with an empty witness.
        a.certificate = {Certificate::Reason::disconnected, {}};
        return a;
    }
    auto from0 = bfs_distances(g, 0);
    for (int v = 0; v < g.n; ++v) {
        if (from0[v] == kUnreachable) {
            a.certificate = {Certificate::Reason::disconnected, {v}};
            return a;
        }
    }
    a.dist = all_pairs_distances(g);
    if (g.n == 1) {
        a.embeddable = true;
        a.coloring.color = {Color::white};
        a.labeling.bits_per_vertex = 0;
        a.labeling.bits.assign(1, {});
        a.poset.k = 0;
        a.width = 0;
        return a;
    }

    auto colored = two_color(g);
    if (!colored.bipartite) {
        a.certificate = {Certificate::Reason::odd_cycle, colored.odd_cycle};
        return a;
    }
    a.coloring = std::move(colored.coloring);

    a.classes = compute_dw_classes(g, a.dist);
    a.labeling = hypercube_label(g, a.classes, 0);
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            if (a.labeling.hamming(u, v) != a.dist(u, v)) {
                a.certificate = {Certificate::Reason::not_partial_cube, {u, v}};
                return a;
            }
        }
    }

    auto oriented = orient_cuts(g, a.classes, a.coloring);
    if (!oriented.coherent) {
        a.certificate = oriented.certificate;
        return a;
    }
    a.cuts = std::move(oriented.cuts);
    a.poset = cut_poset(a.cuts, g.n);
    auto wc = poset_width_and_chains(a.poset);
    a.width = wc.width;
    a.chains = std::move(wc.decomposition);
    a.embeddable = true;
    return a;
}

EmbedVerdict is_isometric_diamond_subgraph(const Graph& g) {
    auto a = analyze(g);
    return {a.embeddable, a.certificate};
}

int diamond_dimension(const Graph& g) {
    auto a = analyze(g);
    if (!a.embeddable) throw NotDiamondEmbeddable(a.certificate);
    if (g.n <= 1) return 0;
    return a.width - 1;
}

namespace {

void require_verified(const Graph& g, const DiamondEmbedding& e, const char* who) {
    auto check = verify_embedding(g, e);
    if (!check.ok)
        throw std::logic_error(std::string(who) + ": constructed embedding failed " +
                               "verification: " + check.violation);
}

}  // namespace

DiamondEmbedding embed_direct(const Graph& g) {
    auto a = analyze(g);
    if (!a.embeddable) throw NotDiamondEmbeddable(a.certificate);

    const int k = static_cast<int>(a.cuts.size());
    DiamondEmbedding e;
    e.dimension = k;
    e.coords.assign(g.n, std::vector<int>(k + 1, 0));
    // Coordinate i of w: 0 on vertex 0's side of cut i, +1 when vertex 0 is
    // on the white side and w on the black side, -1 the other way around.
    // Coordinate k is padding for the shared (d+1)-vector convention.
    for (int i = 0; i < k; ++i) {
        bool base_white = a.cuts[i].white_side[0];
        for (int w = 0; w < g.n; ++w) {
            if (a.cuts[i].white_side[w] == a.cuts[i].white_side[0]) continue;
            e.coords[w][i] = base_white ? 1 : -1;
        }
    }
    require_verified(g, e, "embed_direct");
    return e;
}

DiamondEmbedding embed_minimum(const Graph& g) {
    auto a = analyze(g);
    if (!a.embeddable) throw NotDiamondEmbeddable(a.certificate);

    DiamondEmbedding e;
    if (g.n <= 1) {
        e.dimension = 0;
        e.coords.assign(g.n, std::vector<int>(1, 0));
        return e;
    }

    const int k = static_cast<int>(a.cuts.size());
    std::vector<int> chain_of_class(k, -1);
    for (std::size_t c = 0; c < a.chains.chains.size(); ++c)
        for (int cut : a.chains.chains[c]) chain_of_class[cut] = static_cast<int>(c);

    std::vector<int> class_of_edge(g.edge_count(), -1);
    for (const auto& cls : a.classes)
        for (int ed : cls.edges) class_of_edge[ed] = cls.id;

    std::vector<std::vector<std::pair<int, int>>> inc(g.n);
    for (int ed = 0; ed < g.edge_count(); ++ed) {
        auto [u, v] = g.edges[ed];
        inc[u].emplace_back(v, ed);
        inc[v].emplace_back(u, ed);
    }

    e.dimension = a.width - 1;
    e.coords.assign(g.n, std::vector<int>(a.width, 0));
    std::vector<std::uint8_t> placed(g.n, 0);
    std::vector<int> queue{0};
    placed[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (auto [v, ed] : inc[u]) {
            if (placed[v]) continue;
            placed[v] = 1;
            int c = chain_of_class[class_of_edge[ed]];
            e.coords[v] = e.coords[u];
            e.coords[v][c] += a.coloring.is_white(u) ? 1 : -1;
            queue.push_back(v);
        }
    }
    require_verified(g, e, "embed_minimum");
    return e;
}

VerifyResult verify_embedding(const Graph& g, const DiamondEmbedding& e) {
    VerifyResult res;
    if (e.dimension < 0 || static_cast<int>(e.coords.size()) != g.n) {
        res.violation = "coordinate table has wrong shape";
        return res;
    }
    const std::size_t len = static_cast<std::size_t>(e.dimension) + 1;
    for (int v = 0; v < g.n; ++v) {
        if (e.coords[v].size() != len) {
            res.violation = "coordinate vector has wrong length";
            res.vertices = {v};
            return res;
        }
        int sum = 0;
        for (int x : e.coords[v]) sum += x;
        if (sum != 0 && sum != 1) {
            res.violation = "coordinate sum out of range";
            res.vertices = {v};
            return res;
        }
    }
    for (auto [u, v] : g.edges) {
        int changed = 0;
        bool unit = true;
        for (std::size_t i = 0; i < len; ++i) {
            int d = e.coords[u][i] - e.coords[v][i];
            if (d != 0) {
                ++changed;
                unit = unit && std::abs(d) == 1;
            }
        }
        if (changed != 1 || !unit) {
            res.violation = "edge is not a unit step in one coordinate";
            res.vertices = {u, v};
            return res;
        }
    }
    auto dm = all_pairs_distances(g);
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            if (dm(u, v) == kUnreachable) {
                res.violation = "graph is disconnected";
                res.vertices = {u, v};
                return res;
            }
            int l1 = 0;
            for (std::size_t i = 0; i < len; ++i)
                l1 += std::abs(e.coords[u][i] - e.coords[v][i]);
            if (l1 != dm(u, v)) {
                res.violation = "L1 distance differs from graph distance";
                res.vertices = {u, v};
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

DiamondEmbedding pad_embedding(const DiamondEmbedding& e, int dimension) {
    if (dimension < e.dimension)
        throw std::invalid_argument("pad_embedding: target dimension too small");
    DiamondEmbedding out;
    out.dimension = dimension;
    out.coords = e.coords;
    for (auto& v : out.coords) v.resize(dimension + 1, 0);
    return out;
}

}  // namespace diamond

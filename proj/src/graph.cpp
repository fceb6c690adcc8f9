#include "polygraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace polygraph {

FunctionalGraph::FunctionalGraph(std::vector<node> out) : out_(std::move(out)) {
    const u64 n = out_.size();
    for (std::size_t u = 0; u < out_.size(); ++u)
        if (out_[u] >= n) {
            std::ostringstream os;
            os << "map value out of range at node " << u << ": " << out_[u] << " >= " << n;
            throw PreconditionError(os.str());
        }
}

FunctionalGraph FunctionalGraph::from_poly(const Field& F, const Poly& f) {
    const u64 p = F.modulus();
    if (p > std::numeric_limits<node>::max())
        throw BudgetError("field too large for graph construction");
    std::vector<node> out(p);
    for (u64 x = 0; x < p; ++x) out[x] = static_cast<node>(poly_eval(F, f, x));
    return FunctionalGraph(std::move(out));
}

void FunctionalGraph::build_reverse() const {
    if (!in_off_.empty() || out_.empty()) return;
    const std::size_t n = out_.size();
    in_off_.assign(n + 1, 0);
    for (node v : out_) ++in_off_[v + 1];
    for (std::size_t i = 0; i < n; ++i) in_off_[i + 1] += in_off_[i];
    in_data_.resize(n);
    std::vector<u32> cursor(in_off_.begin(), in_off_.end() - 1);
    for (std::size_t u = 0; u < n; ++u) in_data_[cursor[out_[u]]++] = static_cast<node>(u);
    // entries per target arrive in source order, keeping everything downstream
    // deterministic
}

std::span<const node> FunctionalGraph::in_neighbors(node u) const {
    build_reverse();
    return {in_data_.data() + in_off_[u], in_data_.data() + in_off_[u + 1]};
}

u64 FunctionalGraph::in_degree(node u) const {
    build_reverse();
    return in_off_[u + 1] - in_off_[u];
}

FunctionalGraph read_map_table(std::istream& in) {
    u64 n = 0;
    if (!(in >> n)) throw PreconditionError("map table: missing node count");
    if (n > std::numeric_limits<node>::max()) throw BudgetError("map table too large");
    std::vector<node> out(n);
    for (u64 i = 0; i < n; ++i) {
        u64 v;
        if (!(in >> v)) throw PreconditionError("map table: truncated entry list");
        if (v >= n) {
            std::ostringstream os;
            os << "map value out of range at node " << i << ": " << v << " >= " << n;
            throw PreconditionError(os.str());
        }
        out[i] = static_cast<node>(v);
    }
    return FunctionalGraph(std::move(out));
}

FunctionalGraph read_map_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open map file: " + path);
    return read_map_table(in);
}

void write_map_table(std::ostream& os, const FunctionalGraph& g) {
    os << g.size() << '\n';
    for (std::size_t u = 0; u < g.size(); ++u) os << (u ? " " : "") << g.step(u);
    os << '\n';
}

u64 Decomposition::largest_component() const {
    return size_classes.empty() ? 0 : size_classes.back().size;
}

u64 Decomposition::max_size_multiplicity() const {
    u64 m = 0;
    for (const auto& sc : size_classes) m = std::max(m, sc.count);
    return m;
}

Decomposition decompose(const FunctionalGraph& g) {
    const std::size_t n = g.size();
    const auto& out = g.out_table();
    constexpr u32 kNone = std::numeric_limits<u32>::max();

    Decomposition d;
    d.component_of.assign(n, kNone);
    d.on_cycle.assign(n, 0);

    std::vector<u64> comp_size;
    std::vector<node> dfs;
    for (std::size_t start = 0; start < n; ++start) {
        if (d.component_of[start] != kNone) continue;
        const node v = static_cast<node>(start);

        // Floyd's two-pointer cycle detection from v
        node tort = out[v];
        node hare = out[out[v]];
        while (tort != hare) {
            tort = out[tort];
            hare = out[out[hare]];
        }

        const u32 ci = static_cast<u32>(d.components.size());
        Component comp;
        node u = tort;
        do {
            comp.cycle.push_back(u);
            d.on_cycle[u] = 1;
            d.component_of[u] = ci;
            u = out[u];
        } while (u != tort);
        std::rotate(comp.cycle.begin(),
                    std::min_element(comp.cycle.begin(), comp.cycle.end()),
                    comp.cycle.end());

        // depth-first over reverse edges from each cycle node, skipping the
        // cycle itself
        u64 size = comp.cycle.size();
        for (node cu : comp.cycle) {
            dfs.clear();
            for (node w : g.in_neighbors(cu))
                if (!d.on_cycle[w]) dfs.push_back(w);
            while (!dfs.empty()) {
                node x = dfs.back();
                dfs.pop_back();
                d.component_of[x] = ci;
                ++size;
                for (node w : g.in_neighbors(x)) dfs.push_back(w);
            }
        }
        comp.size = size;
        comp_size.push_back(size);
        d.components.push_back(std::move(comp));
    }

    // order components by (size, discovery order) and remap node assignments
    std::vector<u32> order(d.components.size());
    for (u32 i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](u32 a, u32 b) { return comp_size[a] < comp_size[b]; });
    std::vector<u32> rank(order.size());
    for (u32 newi = 0; newi < order.size(); ++newi) rank[order[newi]] = newi;
    {
        std::vector<Component> sorted(d.components.size());
        for (u32 i = 0; i < order.size(); ++i) sorted[i] = std::move(d.components[order[i]]);
        d.components = std::move(sorted);
    }
    for (auto& c : d.component_of) c = rank[c];

    // tree-children CSR: all reverse edges except cycle->cycle ones
    d.child_off.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
        u32 cnt = 0;
        for (node w : g.in_neighbors(static_cast<node>(u)))
            if (!d.on_cycle[w] || !d.on_cycle[u]) ++cnt;
        d.child_off[u + 1] = d.child_off[u] + cnt;
    }
    d.child_data.resize(d.child_off[n]);
    for (std::size_t u = 0; u < n; ++u) {
        u32 at = d.child_off[u];
        for (node w : g.in_neighbors(static_cast<node>(u)))
            if (!d.on_cycle[w] || !d.on_cycle[u]) d.child_data[at++] = w;
    }

    for (const auto& comp : d.components) {
        if (!d.size_classes.empty() && d.size_classes.back().size == comp.size)
            ++d.size_classes.back().count;
        else
            d.size_classes.push_back({comp.size, 1});
    }
    return d;
}

StatRecord graph_stats(const FunctionalGraph& g) { return graph_stats(g, decompose(g)); }

StatRecord graph_stats(const FunctionalGraph& g, const Decomposition& d) {
    StatRecord r;
    for (const auto& comp : d.components) r.cyclic_points += comp.cycle.size();
    r.num_components = d.components.size();
    r.largest_component = d.largest_component();
    r.k_star = r.largest_component;
    r.c_star = d.max_size_multiplicity();
    for (std::size_t u = 0; u < g.size(); ++u)
        if (g.in_degree(static_cast<node>(u)) == 0) ++r.num_leaves;
    // ties on the multiplicity go to the smallest size
    for (const auto& sc : d.size_classes) {
        if (sc.count > r.popular_size_multiplicity) {
            r.popular_size_multiplicity = sc.count;
            r.most_popular_size = sc.size;
        }
    }
    return r;
}

u64 count_cyclic_points(const std::vector<node>& out) {
    const std::size_t n = out.size();
    std::vector<char> state(n, 0);  // 0 untouched, 1 on the current walk, 2 settled
    std::vector<u32> depth(n, 0);
    std::vector<node> path;
    u64 cyclic = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        path.clear();
        node u = static_cast<node>(s);
        while (state[u] == 0) {
            state[u] = 1;
            depth[u] = static_cast<u32>(path.size());
            path.push_back(u);
            u = out[u];
        }
        if (state[u] == 1) cyclic += path.size() - depth[u];  // walk closed a new cycle
        for (node w : path) state[w] = 2;
    }
    return cyclic;
}

}  // namespace polygraph

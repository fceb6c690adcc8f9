#ifndef POLYGRAPH_GRAPH_HPP
#define POLYGRAPH_GRAPH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polygraph/poly.hpp"

namespace polygraph {

using node = u32;

// Directed graph of a self-map on {0..n-1}: every node has out-degree exactly
// one. Reverse adjacency (CSR) is built on first use; a single graph is meant
// to be used from one thread at a time, distinct graphs are independent.
class FunctionalGraph {
public:
    explicit FunctionalGraph(std::vector<node> out);

    // node set = F_p, edges u -> f(u)
    static FunctionalGraph from_poly(const Field& F, const Poly& f);

    std::size_t size() const noexcept { return out_.size(); }
    node step(node u) const noexcept { return out_[u]; }
    const std::vector<node>& out_table() const noexcept { return out_; }

    std::span<const node> in_neighbors(node u) const;
    u64 in_degree(node u) const;

private:
    void build_reverse() const;

    std::vector<node> out_;
    mutable std::vector<u32> in_off_;
    mutable std::vector<node> in_data_;
};

// ASCII map-table format: line 1 holds n, line 2 holds out[0..n-1].
FunctionalGraph read_map_table(std::istream& in);
FunctionalGraph read_map_table_file(const std::string& path);
void write_map_table(std::ostream& out, const FunctionalGraph& g);

struct Component {
    std::vector<node> cycle;  // in edge direction, starting at the smallest cycle node
    u64 size = 0;             // cycle plus attached trees
};

// Partition of a functional graph into components, each one cycle with rooted
// trees attached to cycle nodes. Components are ordered by (size, discovery
// order), so the layout is a pure function of the out-table.
struct Decomposition {
    std::vector<Component> components;
    std::vector<u32> component_of;  // node -> component index
    std::vector<char> on_cycle;     // node -> 0/1

    // tree children: reverse edges minus each cycle node's cycle predecessor
    std::vector<u32> child_off;
    std::vector<node> child_data;
    std::span<const node> tree_children(node u) const {
        return {child_data.data() + child_off[u], child_data.data() + child_off[u + 1]};
    }

    struct SizeClass {
        u64 size;
        u64 count;
        bool operator==(const SizeClass&) const = default;
    };
    std::vector<SizeClass> size_classes;  // ascending by size

    u64 num_size_classes() const noexcept { return size_classes.size(); }
    u64 largest_component() const;        // k_*
    u64 max_size_multiplicity() const;    // c_*
};

Decomposition decompose(const FunctionalGraph& g);

struct StatRecord {
    u64 cyclic_points = 0;
    u64 num_components = 0;
    u64 largest_component = 0;
    u64 num_leaves = 0;  // in-degree-0 nodes
    u64 most_popular_size = 0;
    u64 popular_size_multiplicity = 0;
    u64 k_star = 0;
    u64 c_star = 0;
};

StatRecord graph_stats(const FunctionalGraph& g);
StatRecord graph_stats(const FunctionalGraph& g, const Decomposition& d);

// Number of nodes lying on cycles, computed by a plain colored walk; an
// independent route to Decomposition-derived counts.
u64 count_cyclic_points(const std::vector<node>& out);

}  // namespace polygraph

#endif

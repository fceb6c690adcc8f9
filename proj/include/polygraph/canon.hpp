#ifndef POLYGRAPH_CANON_HPP
#define POLYGRAPH_CANON_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polygraph/graph.hpp"

namespace polygraph {

// Label symbols. Byte values are chosen so that plain std::string comparison
// realizes the symbol order ONE > ZERO > DUMMY.
inline constexpr char kSymOne = 2;
inline constexpr char kSymZero = 1;
inline constexpr char kSymDummy = 0;

// A component (or tree) label: one byte per symbol.
using Label = std::string;

enum class LabelMode { quadratic, general };

std::string label_to_ascii(const Label& l);   // '1' / '0' / 'd'
Label label_from_ascii(std::string_view s);

// Byte serialization of a label: u32 little-endian symbol count, then the
// symbols packed 2 bits each, first symbol in the high bits.
std::string packed_label(const Label& l);
std::string to_hex(const std::string& bytes);

// Tree labelling over explicit child lists (`children[v]` lists v's children;
// the root is a cycle vertex, so it owns no sibling slot).
//
// Quadratic mode expects the almost-full-binary shape: every non-root vertex
// has 0 or 2 children except at most one with a single child, which receives
// a DUMMY sibling. ShapeError otherwise.
Label label_tree_quadratic(node root, const std::vector<std::vector<node>>& children);

// Arbitrary branching; vertex labels are the sorted-descending concatenation
// of the child labels plus a terminating ZERO, giving 2k symbols for a tree
// of size k >= 2 and a single ZERO for a bare root.
Label label_tree_general(node root, const std::vector<std::vector<node>>& children);

// Per-cycle-vertex tree labels of one component, in cycle order. These are
// the rotation units of the component label.
std::vector<Label> component_units(const FunctionalGraph& g, const Decomposition& d,
                                   std::size_t comp, LabelMode mode);

// Label of one component: per-cycle-vertex tree labels concatenated in cycle
// order, rotated to the lexicographically greatest unit rotation.
Label label_component(const FunctionalGraph& g, const Decomposition& d, std::size_t comp,
                      LabelMode mode);

// Greatest rotation of a unit sequence: index of the starting unit. The
// default is linear-time over unit ranks; the naive variant compares whole
// rotated strings and is kept as an oracle.
std::size_t max_rotation_unit(const std::vector<Label>& units);
std::size_t max_rotation_unit_naive(const std::vector<Label>& units);

struct GraphLabel {
    LabelMode requested = LabelMode::general;
    LabelMode used = LabelMode::general;       // general when the quadratic shape failed
    std::vector<Label> components;             // sorted descending

    // canonical byte key: equal iff the graphs are isomorphic
    std::string key() const;
    std::string packed_hex() const { return to_hex(key()); }
    std::vector<std::string> ascii_components() const;
    u64 total_symbols() const;
};

GraphLabel label_graph(const FunctionalGraph& g, LabelMode mode);
GraphLabel label_graph(const FunctionalGraph& g, const Decomposition& d, LabelMode mode);

// Counter trie over label strings; supports multiset insert / matched removal.
class LabelTrie {
public:
    void insert(const Label& l);
    // follows l and decrements its terminal counter; false if the path or a
    // positive counter is missing
    bool remove(const Label& l);
    bool all_zero() const;
    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        std::int32_t child[3] = {-1, -1, -1};
        u64 count = 0;
    };
    std::vector<Node> nodes_{1};
};

// Component-profile reject (node count, size classes), then trie matching of
// component labels.
bool is_isomorphic(const FunctionalGraph& g, const FunctionalGraph& h, LabelMode mode);

}  // namespace polygraph

#endif

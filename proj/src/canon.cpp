#include "polygraph/canon.hpp"

#include <algorithm>
#include <numeric>

namespace polygraph {

std::string label_to_ascii(const Label& l) {
    std::string s(l.size(), '?');
    for (std::size_t i = 0; i < l.size(); ++i)
        s[i] = l[i] == kSymOne ? '1' : l[i] == kSymZero ? '0' : 'd';
    return s;
}

Label label_from_ascii(std::string_view s) {
    Label l(s.size(), kSymDummy);
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case '1': l[i] = kSymOne; break;
            case '0': l[i] = kSymZero; break;
            case 'd': l[i] = kSymDummy; break;
            default: throw PreconditionError("label characters must be '1', '0' or 'd'");
        }
    }
    return l;
}

std::string packed_label(const Label& l) {
    if (l.size() > 0xffffffffull) throw BudgetError("label too long to serialize");
    std::string out;
    const u32 n = static_cast<u32>(l.size());
    out.reserve(4 + (n + 3) / 4);
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((n >> (8 * i)) & 0xff));
    for (std::size_t i = 0; i < l.size(); i += 4) {
        unsigned byte = 0;
        for (std::size_t j = 0; j < 4 && i + j < l.size(); ++j)
            byte |= static_cast<unsigned>(l[i + j]) << (6 - 2 * j);
        out.push_back(static_cast<char>(byte));
    }
    return out;
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

namespace {

// Iterative post-order labelling; ChildrenFn maps a node to a random-access
// range of its children. Standalone trees may carry two subtrees at the root;
// for component roots (cycle vertices) that shape cannot arise from a
// quadratic map, so strict_root rejects it and triggers the general fallback.
template <class ChildrenFn>
Label tree_label(node root, ChildrenFn&& children, LabelMode mode, bool& dummy_used,
                 bool strict_root = false) {
    struct Frame {
        node v;
        std::size_t next = 0;
        std::vector<Label> kids;
    };
    std::vector<Frame> stack;
    stack.push_back({root, 0, {}});
    Label result;
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto ch = children(f.v);
        if (f.next < ch.size()) {
            const node c = ch[f.next++];
            stack.push_back({c, 0, {}});
            continue;
        }
        const bool is_root = stack.size() == 1;
        Label lbl;
        if (mode == LabelMode::quadratic) {
            switch (f.kids.size()) {
                case 0:
                    lbl.push_back(kSymZero);
                    break;
                case 1:
                    if (is_root) {
                        lbl.push_back(kSymOne);
                        lbl += f.kids[0];
                    } else {
                        if (dummy_used)
                            throw ShapeError("second single-child vertex in quadratic labelling");
                        dummy_used = true;
                        lbl.push_back(kSymOne);
                        lbl += f.kids[0];
                        lbl.push_back(kSymDummy);
                    }
                    break;
                case 2: {
                    if (is_root && strict_root)
                        throw ShapeError("cycle vertex with two tree children in quadratic labelling");
                    const bool first_max = f.kids[0] >= f.kids[1];
                    lbl.push_back(kSymOne);
                    lbl += f.kids[first_max ? 0 : 1];
                    lbl += f.kids[first_max ? 1 : 0];
                    break;
                }
                default:
                    throw ShapeError("vertex with more than two children in quadratic labelling");
            }
        } else {
            if (is_root && f.kids.empty()) {
                lbl.push_back(kSymZero);
            } else {
                f.kids.emplace_back(1, kSymZero);
                std::sort(f.kids.begin(), f.kids.end(), std::greater<Label>());
                std::size_t total = 1;
                for (const Label& k : f.kids) total += k.size();
                lbl.reserve(total);
                lbl.push_back(kSymOne);
                for (const Label& k : f.kids) lbl += k;
            }
        }
        stack.pop_back();
        if (stack.empty())
            result = std::move(lbl);
        else
            stack.back().kids.push_back(std::move(lbl));
    }
    return result;
}

std::size_t booth_max(const std::vector<u32>& a) {
    const std::size_t n = a.size();
    if (n <= 1) return 0;
    auto at = [&](std::size_t i) { return a[i < n ? i : i - n]; };
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const u32 x = at(i + k);
        const u32 y = at(j + k);
        if (x == y) {
            ++k;
            continue;
        }
        if (x < y)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

Label concat_rotation(const std::vector<Label>& units, std::size_t start) {
    std::size_t total = 0;
    for (const Label& u : units) total += u.size();
    Label out;
    out.reserve(total);
    for (std::size_t i = 0; i < units.size(); ++i) out += units[(start + i) % units.size()];
    return out;
}

std::vector<Label> component_units_impl(const Decomposition& d, std::size_t comp,
                                        LabelMode mode, bool& dummy_used) {
    const Component& c = d.components[comp];
    std::vector<Label> units;
    units.reserve(c.cycle.size());
    for (node u : c.cycle)
        units.push_back(tree_label(
            u, [&](node v) { return d.tree_children(v); }, mode, dummy_used,
            /*strict_root=*/true));
    return units;
}

Label component_label_impl(const FunctionalGraph& g, const Decomposition& d, std::size_t comp,
                           LabelMode mode, bool& dummy_used) {
    (void)g;
    const auto units = component_units_impl(d, comp, mode, dummy_used);
    return concat_rotation(units, max_rotation_unit(units));
}

}  // namespace

std::vector<Label> component_units(const FunctionalGraph& g, const Decomposition& d,
                                   std::size_t comp, LabelMode mode) {
    (void)g;
    bool dummy_used = false;
    return component_units_impl(d, comp, mode, dummy_used);
}

Label label_tree_quadratic(node root, const std::vector<std::vector<node>>& children) {
    bool dummy_used = false;
    return tree_label(
        root, [&](node v) -> const std::vector<node>& { return children[v]; },
        LabelMode::quadratic, dummy_used);
}

Label label_tree_general(node root, const std::vector<std::vector<node>>& children) {
    bool dummy_used = false;
    return tree_label(
        root, [&](node v) -> const std::vector<node>& { return children[v]; },
        LabelMode::general, dummy_used);
}

Label label_component(const FunctionalGraph& g, const Decomposition& d, std::size_t comp,
                      LabelMode mode) {
    bool dummy_used = false;
    return component_label_impl(g, d, comp, mode, dummy_used);
}

std::size_t max_rotation_unit(const std::vector<Label>& units) {
    if (units.size() <= 1) return 0;
    // rank units so the rotation problem shrinks to an integer sequence; unit
    // labels are prefix-free, so unit-wise order equals concatenated order
    std::vector<u32> rank(units.size());
    {
        std::vector<u32> idx(units.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](u32 a, u32 b) { return units[a] < units[b]; });
        u32 r = 0;
        rank[idx[0]] = 0;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            if (units[idx[i]] != units[idx[i - 1]]) ++r;
            rank[idx[i]] = r;
        }
    }
    return booth_max(rank);
}

std::size_t max_rotation_unit_naive(const std::vector<Label>& units) {
    if (units.size() <= 1) return 0;
    std::size_t best = 0;
    Label best_str = concat_rotation(units, 0);
    for (std::size_t i = 1; i < units.size(); ++i) {
        Label cand = concat_rotation(units, i);
        if (cand > best_str) {
            best_str = std::move(cand);
            best = i;
        }
    }
    return best;
}

GraphLabel label_graph(const FunctionalGraph& g, LabelMode mode) {
    return label_graph(g, decompose(g), mode);
}

GraphLabel label_graph(const FunctionalGraph& g, const Decomposition& d, LabelMode mode) {
    GraphLabel gl;
    gl.requested = mode;
    gl.used = mode;
    if (mode == LabelMode::quadratic) {
        try {
            bool dummy_used = false;
            for (std::size_t i = 0; i < d.components.size(); ++i)
                gl.components.push_back(component_label_impl(g, d, i, mode, dummy_used));
        } catch (const ShapeError&) {
            gl.components.clear();
            gl.used = LabelMode::general;
        }
    }
    if (gl.used == LabelMode::general) {
        bool dummy_used = false;
        for (std::size_t i = 0; i < d.components.size(); ++i)
            gl.components.push_back(
                component_label_impl(g, d, i, LabelMode::general, dummy_used));
    }
    std::sort(gl.components.begin(), gl.components.end(), std::greater<Label>());
    return gl;
}

std::string GraphLabel::key() const {
    std::string k;
    for (const Label& c : components) k += packed_label(c);
    return k;
}

std::vector<std::string> GraphLabel::ascii_components() const {
    std::vector<std::string> out;
    out.reserve(components.size());
    for (const Label& c : components) out.push_back(label_to_ascii(c));
    return out;
}

u64 GraphLabel::total_symbols() const {
    u64 t = 0;
    for (const Label& c : components) t += c.size();
    return t;
}

void LabelTrie::insert(const Label& l) {
    std::int32_t at = 0;
    for (char s : l) {
        std::int32_t& slot = nodes_[at].child[static_cast<unsigned char>(s)];
        if (slot < 0) {
            slot = static_cast<std::int32_t>(nodes_.size());
            at = slot;
            nodes_.emplace_back();
        } else {
            at = slot;
        }
    }
    ++nodes_[at].count;
}

bool LabelTrie::remove(const Label& l) {
    std::int32_t at = 0;
    for (char s : l) {
        at = nodes_[at].child[static_cast<unsigned char>(s)];
        if (at < 0) return false;
    }
    if (nodes_[at].count == 0) return false;
    --nodes_[at].count;
    return true;
}

bool LabelTrie::all_zero() const {
    for (const Node& n : nodes_)
        if (n.count != 0) return false;
    return true;
}

bool is_isomorphic(const FunctionalGraph& g, const FunctionalGraph& h, LabelMode mode) {
    if (g.size() != h.size()) return false;
    const Decomposition dg = decompose(g);
    const Decomposition dh = decompose(h);
    if (dg.size_classes != dh.size_classes) return false;
    GraphLabel lg = label_graph(g, dg, mode);
    GraphLabel lh = label_graph(h, dh, mode);
    if (lg.used != lh.used) {
        // one side fell back to general labels; compare both in general mode
        if (lg.used == LabelMode::quadratic) lg = label_graph(g, dg, LabelMode::general);
        if (lh.used == LabelMode::quadratic) lh = label_graph(h, dh, LabelMode::general);
    }
    LabelTrie trie;
    for (const Label& c : lg.components) trie.insert(c);
    for (const Label& c : lh.components)
        if (!trie.remove(c)) return false;
    return trie.all_zero();
}

}  // namespace polygraph

#include <algorithm>
#include <map>
#include <set>

#include "reslab/errors.hpp"
#include "reslab/trees.hpp"
#include "tree_builder.hpp"

namespace reslab {
namespace {

bool is_ancestor(const DecoratedTree& t, int a, int b) {
    for (int x = t.node(b).parent; x >= 0; x = t.node(x).parent) {
        if (x == a) return true;
    }
    return false;
}

// Copies the subtree at `src` skipping the cut vertices; records where each
// original vertex landed.
void copy_trunk(const DecoratedTree& t, int src, int parent, const std::set<int>& cut, TreeBuilder& b,
                std::map<int, int>& where) {
    const TreeNode& n = t.node(src);
    const int idx = b.add(parent, n.edge, n.conjugate, n.decoration);
    where[src] = idx;
    for (int c : n.children) {
        if (cut.count(c) == 0) copy_trunk(t, c, idx, cut, b, where);
    }
}

void copy_with_branches(const DecoratedTree& trunk, int src, int parent, const std::map<int, const DecoratedTree*>& branches,
                        TreeBuilder& b) {
    const TreeNode& n = trunk.node(src);
    auto it = branches.find(src);
    const bool grafted = it != branches.end();
    const int idx = b.add(parent, n.edge, n.conjugate, grafted ? LinearForm{} : n.decoration);
    for (int c : n.children) copy_with_branches(trunk, c, idx, branches, b);
    if (grafted) {
        const DecoratedTree& br = *it->second;
        b.copy(br, br.node(0).children.at(0), idx);
    }
}

}  // namespace

std::string CutTerm::to_string() const {
    std::string s = trunk ? trunk->serialize() : "1";
    s += " ⊗ ";
    if (forest.empty()) return s + "1";
    std::vector<std::string> parts;
    for (const auto& [at, br] : forest) parts.push_back(br.serialize());
    std::sort(parts.begin(), parts.end());
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " · " : "") + parts[i];
    return s;
}

std::vector<int> cuttable_edges(const DecoratedTree& t) {
    std::vector<int> out{t.node(0).children.at(0)};
    for (int v : t.integral_vertices()) {
        if (v != out[0]) out.push_back(v);
    }
    return out;
}

std::vector<CutTerm> bck_coproduct(const DecoratedTree& t) {
    const std::vector<int> edges = cuttable_edges(t);
    if (edges.size() > 20) throw Unsupported("too many cuttable edges");
    std::vector<CutTerm> out;
    out.push_back(CutTerm{t, {}});
    const int top = edges[0];
    for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (mask & (1u << i)) chosen.push_back(edges[i]);
        }
        bool admissible = true;
        for (std::size_t i = 0; i < chosen.size() && admissible; ++i) {
            for (std::size_t j = 0; j < chosen.size(); ++j) {
                if (i != j && is_ancestor(t, chosen[i], chosen[j])) {
                    admissible = false;
                    break;
                }
            }
        }
        if (!admissible) continue;
        if (chosen.size() == 1 && chosen[0] == top) {
            out.push_back(CutTerm{std::nullopt, {{-1, t}}});
            continue;
        }
        const std::set<int> cut(chosen.begin(), chosen.end());
        TreeBuilder trunk_builder(t.model(), t.n_vars());
        std::map<int, int> where;
        copy_trunk(t, top, 0, cut, trunk_builder, where);
        CutTerm term;
        for (int c : chosen) {
            const int p = t.node(c).parent;
            if (t.node(p).children.size() != 1) {
                throw Unsupported("cut below a vertex with several children is not supported");
            }
            trunk_builder.set_decoration(where.at(p), t.frequency(p));
            TreeBuilder br(t.model(), t.n_vars());
            br.copy(t, c, 0);
            term.forest.emplace_back(where.at(p), br.finish());
        }
        term.trunk = trunk_builder.finish();
        out.push_back(std::move(term));
    }
    std::sort(out.begin(), out.end(), [](const CutTerm& a, const CutTerm& b) { return a.to_string() < b.to_string(); });
    return out;
}

DecoratedTree reattach(const CutTerm& term) {
    if (!term.trunk) {
        if (term.forest.size() != 1) throw InvalidArgument("an empty trunk pairs with exactly one branch");
        return term.forest[0].second;
    }
    const DecoratedTree& trunk = *term.trunk;
    std::map<int, const DecoratedTree*> branches;
    for (const auto& [at, br] : term.forest) branches[at] = &br;
    TreeBuilder b(trunk.model(), trunk.n_vars());
    copy_with_branches(trunk, trunk.node(0).children.at(0), 0, branches, b);
    return b.finish();
}

}  // namespace reslab

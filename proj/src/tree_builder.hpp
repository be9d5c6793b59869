#pragma once

#include <vector>

#include "reslab/trees.hpp"

namespace reslab {

/// Internal construction helpers with access to DecoratedTree's storage.
class TreeBuilder {
public:
    explicit TreeBuilder(Model model, std::size_t n_vars) {
        tree_.model_ = model;
        tree_.n_vars_ = n_vars;
        tree_.nodes_.push_back(TreeNode{});
    }

    /// Adds a vertex under `parent` and returns its index.
    int add(int parent, EdgeKind kind, bool conjugate, LinearForm decoration = {}) {
        TreeNode n;
        n.edge = kind;
        n.conjugate = conjugate;
        n.parent = parent;
        n.decoration = std::move(decoration);
        tree_.nodes_.push_back(std::move(n));
        const int idx = static_cast<int>(tree_.nodes_.size()) - 1;
        tree_.nodes_[static_cast<std::size_t>(parent)].children.push_back(idx);
        return idx;
    }

    /// Copies the subtree of `src` hanging at `src_node` (including its edge)
    /// under `parent`. Returns the new index of src_node.
    int copy(const DecoratedTree& src, int src_node, int parent) {
        const TreeNode& s = src.node(src_node);
        const int idx = add(parent, s.edge, s.conjugate, s.decoration);
        for (int c : s.children) copy(src, c, idx);
        return idx;
    }

    void set_decoration(int node, LinearForm form) { tree_.nodes_[static_cast<std::size_t>(node)].decoration = std::move(form); }

    DecoratedTree finish() {
        for (auto& n : tree_.nodes_) {
            if (n.children.empty() && !n.decoration.empty()) n.decoration.resize(tree_.n_vars_, 0);
        }
        tree_.validate();
        return tree_;
    }

    DecoratedTree finish_unchecked() { return tree_; }

private:
    DecoratedTree tree_;
};

}  // namespace reslab

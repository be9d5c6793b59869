#include <doctest.h>

#include <fstream>
#include <sstream>

#include "reslab/trees.hpp"

using namespace reslab;

namespace {

/// Subsets of the cuttable edges with no edge on another's path to the root.
int brute_force_cut_count(const DecoratedTree& t) {
    const auto edges = cuttable_edges(t);
    auto on_path = [&](int lower, int upper) {
        for (int v = t.node(upper).parent; v >= 0; v = t.node(v).parent) {
            if (v == lower) return true;
        }
        return false;
    };
    int count = 0;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            for (std::size_t j = 0; j < edges.size() && ok; ++j) {
                if (i != j && (mask >> i & 1u) && (mask >> j & 1u)) ok = !on_path(edges[i], edges[j]);
            }
        }
        count += ok;
    }
    // Cutting the root edge alone yields 1 ⊗ T; the empty set yields T ⊗ 1.
    return count;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(RESLAB_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("coproduct of the KdV example tree matches the golden file") {
    const DecoratedTree t = enumerate_trees(Model::Kdv, 2)[2].tree.unplant();
    CHECK(t.serialize() == "I(P(I(P[k1],P[k2])),P[k3])");
    const auto terms = bck_coproduct(t);
    std::string text;
    for (const auto& term : terms) text += term.to_string() + "\n";
    CHECK(terms.size() == 3);
    CHECK(text == read_golden("kdv_t2_coproduct.txt"));
}

TEST_CASE("primitive trees have two terms") {
    CHECK(bck_coproduct(DecoratedTree::parse(Model::Kdv, "P[k1]")).size() == 2);
    CHECK(bck_coproduct(DecoratedTree::parse(Model::Kdv, "I(P[k1],P[k2])")).size() == 2);
}

TEST_CASE("cut counts match brute-force subset enumeration") {
    for (Model m : {Model::Kdv, Model::Nls}) {
        for (const auto& [name, tree] : enumerate_trees(m, 2)) {
            CAPTURE(name);
            CHECK(bck_coproduct(tree).size() == static_cast<std::size_t>(brute_force_cut_count(tree)));
        }
    }
    const DecoratedTree deep = DecoratedTree::parse(Model::Kdv, "P(I(P(I(P[k1],P[k2])),P(I(P[k3],P[k4]))))");
    CHECK(bck_coproduct(deep).size() == static_cast<std::size_t>(brute_force_cut_count(deep)));
}

TEST_CASE("reattaching every cut term rebuilds the tree") {
    for (Model m : {Model::Kdv, Model::Nls}) {
        for (const auto& [name, tree] : enumerate_trees(m, 2)) {
            for (const auto& term : bck_coproduct(tree)) {
                CAPTURE(term.to_string());
                CHECK(reattach(term).serialize() == tree.serialize());
            }
        }
    }
}

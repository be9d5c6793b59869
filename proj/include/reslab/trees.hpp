#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reslab/fourier_field.hpp"
#include "reslab/frequency_polynomial.hpp"

namespace reslab {

enum class Model { Kdv, Nls };

std::string to_string(Model m);
Model model_from_string(const std::string& name);

enum class EdgeKind { Propagator, Integral };

/// Vertex of a decorated tree. Every vertex except the root vertex (index 0)
/// sits at the top of the edge that connects it to its parent; that edge's
/// kind and conjugation flag are stored on the vertex.
struct TreeNode {
    EdgeKind edge = EdgeKind::Propagator;
    bool conjugate = false;
    int parent = -1;
    std::vector<int> children;
    /// Leaf frequency as a linear form in k_1..k_n (empty on inner vertices).
    LinearForm decoration;
};

/// Rooted tree with typed edges. Text form, used for parsing and printing:
///
///   edge  := ('P' | 'I') ['*'] ( '[' form ']' | '(' edge {',' edge} ')' )
///   form  := signed sum of k1..k9, e.g. "k1", "k1+k2", "-k1+k2"
///
/// 'P' is a propagator edge, 'I' a time-integral edge, '*' marks a
/// conjugated (dotted) edge. The outermost edge starts at the root vertex.
class DecoratedTree {
public:
    static DecoratedTree parse(Model model, std::string_view text);

    std::string serialize() const;

    Model model() const noexcept { return model_; }
    std::size_t n_vars() const noexcept { return n_vars_; }
    const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
    const TreeNode& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }

    std::vector<int> leaves() const;
    /// Vertices at the top of an Integral edge, in depth-first order.
    std::vector<int> integral_vertices() const;
    int integral_count() const;

    /// Signed sum of leaf decorations above vertex i (sign flips through
    /// every conjugated edge on the way).
    LinearForm frequency(int i) const;
    /// Frequency of the root vertex.
    LinearForm root_frequency() const { return frequency(0); }

    /// Copy with the bottom propagator edge removed (the root vertex becomes
    /// the old top of that edge). Requires a propagator root edge whose upper
    /// vertex has exactly one child.
    DecoratedTree unplant() const;

    /// Checks the structural rules; throws InvalidArgument.
    void validate() const;

    bool operator==(const DecoratedTree& other) const { return serialize() == other.serialize(); }

private:
    friend class TreeBuilder;
    Model model_ = Model::Kdv;
    std::size_t n_vars_ = 0;
    std::vector<TreeNode> nodes_;
};

/// Named shape from the catalog.
struct CatalogTree {
    std::string name;  // "T0", "T1", ...
    DecoratedTree tree;
};

/// Tree shapes with at most r integral edges (r <= 2). KdV: T0, T1, T2;
/// NLS: T0, T1 and, at r = 2, T2, T3.
std::vector<CatalogTree> enumerate_trees(Model model, int r);

/// Order of the automorphism group of the tree that fixes the root and
/// respects edge kinds and conjugation flags (leaf labels ignored).
int symmetry_factor(const DecoratedTree& t);

/// Υ(T)(v) at the given leaf frequencies: 2^m times the product of leaf
/// coefficients (conjugated on conjugated leaf edges), m = number of integral
/// edges. For KdV this is the displayed factor; for NLS the same power of two
/// matches the Duhamel iteration with the symmetry factors of the catalog.
cplx elementary_differential(const DecoratedTree& t, const FourierField& v, std::span<const std::int64_t> freqs);

/// Coupling constant per integral edge: 1/2 for KdV, 1 for NLS.
double coupling(Model model);

/// Oscillation polynomial at an integral vertex, P(k) + Σ a_c P(k_c) with
/// P(k) = k^3 (KdV) or k^2 (NLS), expanded in the leaf frequencies. a_c = -1
/// for a plain child edge and +1 for a conjugated one.
FrequencyPolynomial phase_polynomial(const DecoratedTree& t, int integral_vertex);

/// Dominant part: the monomials c k_i^d that are pure powers of one leaf
/// frequency with d the dispersion degree; low part: the rest.
/// Throws Unsupported for polynomials outside the order-2 catalog.
std::pair<FrequencyPolynomial, FrequencyPolynomial> resonance_split(const FrequencyPolynomial& L, Model model);

/// Exact (ΠT)(t).
cplx evaluate_pi(const DecoratedTree& t, std::span<const std::int64_t> freqs, double time);

/// Discretized (Π^{n,r} T)(t). With n below the classical threshold the
/// resonance branch integrates the dominant part of each phase exactly and
/// Taylor-expands the rest to r - (#integrals) terms beyond the leading one;
/// otherwise every phase is Taylor expanded.
cplx evaluate_pi_discretized(const DecoratedTree& t, std::span<const std::int64_t> freqs, double time, int n,
                             int r);

/// Total polynomial degree of the largest discarded term (including the
/// integral-edge prefactors) of evaluate_pi_discretized; 0 if nothing is
/// discarded.
int local_error_degree(const DecoratedTree& t, int n, int r);

/// Regularity index from which the classical branch is used.
int classical_threshold(const DecoratedTree& t, int r);

/// Term of a closed-form Π: scalar * numerator / Π denominators * t^power * e^{it phase}.
struct SymbolicTerm {
    cplx scalar;
    FrequencyPolynomial numerator;
    std::vector<FrequencyPolynomial> denominators;
    int power = 0;
    FrequencyPolynomial phase;

    cplx evaluate(std::span<const std::int64_t> freqs, double time) const;
    std::string to_string() const;
};

/// Closed form of Π (discretized when `discretized`) valid at frequencies
/// where no phase polynomial that appears in a denominator vanishes.
std::vector<SymbolicTerm> symbolic_pi(const DecoratedTree& t, bool discretized, int n, int r);

/// coeff(k) = Σ_T Σ_{|k_i| <= K} λ^m Υ(T)/S(T) (ΠT)(t) over catalog shapes with
/// at most r integrals, restricted to output modes |k| <= N/2-1.
/// Requires K <= N/2-1.
FourierField tree_series(Model model, int r, const FourierField& v, double time, int K, bool discretized,
                         int n = 0);

/// One term of the admissible-cut coproduct: the trunk (nullopt = empty tree)
/// and the forest of cut branches, each paired with the trunk vertex at which
/// it was attached (-1 when the root edge itself was cut).
struct CutTerm {
    std::optional<DecoratedTree> trunk;
    std::vector<std::pair<int, DecoratedTree>> forest;

    /// "trunk ⊗ branch · branch", with 1 for the empty tree or forest.
    std::string to_string() const;
};

/// Edges eligible for cutting: the root edge and every integral edge,
/// identified by the vertex at their top.
std::vector<int> cuttable_edges(const DecoratedTree& t);

/// All admissible cuts: the empty cut and every nonempty set of cuttable edges
/// with no two on a common path to the root. Sorted by to_string().
std::vector<CutTerm> bck_coproduct(const DecoratedTree& t);

/// Rebuilds the original tree from a cut term.
DecoratedTree reattach(const CutTerm& term);

}  // namespace reslab

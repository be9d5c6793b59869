#include "reslab/trees.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "reslab/errors.hpp"
#include "tree_builder.hpp"

namespace reslab {

std::string to_string(Model m) { return m == Model::Kdv ? "kdv" : "nls"; }

Model model_from_string(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "kdv") return Model::Kdv;
    if (lower == "nls") return Model::Nls;
    throw InvalidArgument("unknown model: " + name);
}

namespace {

class Parser {
public:
    Parser(Model model, std::string_view text) : model_(model), text_(text) {}

    DecoratedTree run() {
        std::vector<Pending> pending;
        parse_edge(-1, pending);
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        std::size_t n_vars = 0;
        for (const auto& p : pending) {
            for (const auto& [idx, coef] : p.form) n_vars = std::max(n_vars, idx + 1);
        }
        TreeBuilder b(model_, n_vars);
        std::vector<int> ids(pending.size());
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const auto& p = pending[i];
            LinearForm form;
            if (p.leaf) {
                form.assign(n_vars, 0);
                for (const auto& [idx, coef] : p.form) form[idx] += coef;
            }
            ids[i] = b.add(p.parent < 0 ? 0 : ids[static_cast<std::size_t>(p.parent)], p.kind, p.conjugate, form);
        }
        return b.finish();
    }

private:
    struct Pending {
        int parent;
        EdgeKind kind;
        bool conjugate;
        bool leaf;
        std::vector<std::pair<std::size_t, int>> form;
    };

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidArgument("tree parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                              std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void parse_edge(int parent, std::vector<Pending>& out) {
        const char c = peek();
        Pending p{parent, EdgeKind::Propagator, false, false, {}};
        if (c == 'P') {
            p.kind = EdgeKind::Propagator;
        } else if (c == 'I') {
            p.kind = EdgeKind::Integral;
        } else {
            fail("expected edge letter P or I");
        }
        ++pos_;
        if (peek() == '*') {
            p.conjugate = true;
            ++pos_;
        }
        const char open = peek();
        if (open == '[') {
            ++pos_;
            p.leaf = true;
            p.form = parse_form();
            expect(']');
            out.push_back(std::move(p));
        } else if (open == '(') {
            ++pos_;
            out.push_back(std::move(p));
            const int self = static_cast<int>(out.size()) - 1;
            parse_edge(self, out);
            while (peek() == ',') {
                ++pos_;
                parse_edge(self, out);
            }
            expect(')');
        } else {
            fail("expected '[' or '('");
        }
    }

    std::vector<std::pair<std::size_t, int>> parse_form() {
        std::vector<std::pair<std::size_t, int>> form;
        bool first = true;
        while (true) {
            char c = peek();
            if (c == ']') break;
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            int coef = 0;
            bool has_coef = false;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                coef = coef * 10 + (text_[pos_] - '0');
                has_coef = true;
                ++pos_;
            }
            if (peek() != 'k') fail("expected frequency variable k<i>");
            ++pos_;
            std::size_t idx = 0;
            bool has_idx = false;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = idx * 10 + static_cast<std::size_t>(text_[pos_] - '0');
                has_idx = true;
                ++pos_;
            }
            if (!has_idx || idx == 0) fail("variables are numbered from k1");
            form.emplace_back(idx - 1, sign * (has_coef ? coef : 1));
            first = false;
        }
        if (form.empty()) fail("empty leaf decoration");
        return form;
    }

    Model model_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

void serialize_into(const DecoratedTree& t, int i, std::string& out) {
    const TreeNode& n = t.node(i);
    out += n.edge == EdgeKind::Propagator ? 'P' : 'I';
    if (n.conjugate) out += '*';
    if (n.children.empty()) {
        out += '[' + linear_form_to_string(n.decoration) + ']';
        return;
    }
    out += '(';
    for (std::size_t c = 0; c < n.children.size(); ++c) {
        if (c > 0) out += ',';
        serialize_into(t, n.children[c], out);
    }
    out += ')';
}

void add_scaled(LinearForm& acc, const LinearForm& f, int s) {
    if (acc.size() < f.size()) acc.resize(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) acc[i] += s * f[i];
}

// Shape of the subtree at i with children sorted, leaf labels dropped.
std::string canonical_shape(const DecoratedTree& t, int i) {
    const TreeNode& n = t.node(i);
    std::string head;
    if (i != 0) {
        head += n.edge == EdgeKind::Propagator ? 'P' : 'I';
        if (n.conjugate) head += '*';
    }
    if (n.children.empty()) return head + "[]";
    std::vector<std::string> parts;
    for (int c : n.children) parts.push_back(canonical_shape(t, c));
    std::sort(parts.begin(), parts.end());
    head += '(';
    for (std::size_t j = 0; j < parts.size(); ++j) head += (j ? "," : "") + parts[j];
    return head + ')';
}

long long symmetry_at(const DecoratedTree& t, int i) {
    const TreeNode& n = t.node(i);
    long long s = 1;
    std::map<std::string, int> groups;
    for (int c : n.children) {
        s *= symmetry_at(t, c);
        ++groups[canonical_shape(t, c)];
    }
    for (const auto& [shape, count] : groups) {
        for (int j = 2; j <= count; ++j) s *= j;
    }
    return s;
}

FrequencyPolynomial dispersion(Model m, const LinearForm& k) {
    return FrequencyPolynomial::linear(k).pow(m == Model::Kdv ? 3 : 2);
}

}  // namespace

DecoratedTree DecoratedTree::parse(Model model, std::string_view text) { return Parser(model, text).run(); }

std::string DecoratedTree::serialize() const {
    std::string out;
    if (nodes_.size() > 1) serialize_into(*this, nodes_[0].children.at(0), out);
    return out;
}

std::vector<int> DecoratedTree::leaves() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (nodes_[i].children.empty()) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> DecoratedTree::integral_vertices() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (nodes_[i].edge == EdgeKind::Integral) out.push_back(static_cast<int>(i));
    }
    return out;
}

int DecoratedTree::integral_count() const { return static_cast<int>(integral_vertices().size()); }

LinearForm DecoratedTree::frequency(int i) const {
    const TreeNode& n = node(i);
    if (i != 0 && n.children.empty()) return n.decoration;
    LinearForm acc(n_vars_, 0);
    for (int c : n.children) add_scaled(acc, frequency(c), node(c).conjugate ? -1 : 1);
    return acc;
}

DecoratedTree DecoratedTree::unplant() const {
    const int top = nodes_.at(0).children.at(0);
    const TreeNode& t = node(top);
    if (t.edge != EdgeKind::Propagator || t.children.size() != 1) {
        throw InvalidArgument("unplant needs a propagator root edge above a single edge");
    }
    TreeBuilder b(model_, n_vars_);
    b.copy(*this, t.children[0], 0);
    return b.finish();
}

void DecoratedTree::validate() const {
    if (nodes_.empty() || nodes_[0].children.size() != 1) {
        throw InvalidArgument("the root vertex must have exactly one edge above it");
    }
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        const TreeNode& n = nodes_[i];
        if (model_ == Model::Kdv && n.conjugate) throw InvalidArgument("KdV trees have no conjugated edges");
        if (n.children.empty()) {
            if (n.edge != EdgeKind::Propagator) throw InvalidArgument("an integral edge cannot end in a leaf");
            if (n.decoration.size() != n_vars_) throw InvalidArgument("leaf decoration has the wrong length");
            continue;
        }
        if (n.edge == EdgeKind::Propagator) {
            if (n.children.size() != 1 || node(n.children[0]).edge != EdgeKind::Integral) {
                throw InvalidArgument("a propagator edge carries either a leaf or a single integral edge");
            }
            continue;
        }
        const std::size_t max_children = model_ == Model::Kdv ? 2 : 3;
        if (n.children.size() > max_children) throw InvalidArgument("too many children at an integral vertex");
        int flipped = 0;
        for (int c : n.children) {
            if (node(c).edge != EdgeKind::Propagator) throw InvalidArgument("integral edges carry propagator edges");
            if (node(c).conjugate != n.conjugate) ++flipped;
        }
        if (model_ == Model::Nls && flipped != 1) {
            throw InvalidArgument("an NLS integral vertex needs exactly one child edge with the opposite conjugation");
        }
    }
}

std::vector<CatalogTree> enumerate_trees(Model model, int r) {
    if (r < 0) throw InvalidArgument("order must be nonnegative");
    if (r > 2) throw Unsupported("tree enumeration is implemented for r <= 2, got r = " + std::to_string(r));
    std::vector<std::pair<std::string, std::string>> shapes;
    if (model == Model::Kdv) {
        shapes = {{"T0", "P[k1]"},
                  {"T1", "P(I(P[k1],P[k2]))"},
                  {"T2", "P(I(P(I(P[k1],P[k2])),P[k3]))"}};
    } else {
        shapes = {{"T0", "P[k1]"},
                  {"T1", "P(I(P*[k1],P[k2],P[k3]))"},
                  {"T2", "P(I(P*[k4],P[k5],P(I(P*[k1],P[k2],P[k3]))))"},
                  {"T3", "P(I(P[k4],P[k5],P*(I*(P[k1],P*[k2],P*[k3]))))"}};
    }
    std::vector<CatalogTree> out;
    for (const auto& [name, text] : shapes) {
        DecoratedTree t = DecoratedTree::parse(model, text);
        if (t.integral_count() <= r) out.push_back({name, std::move(t)});
    }
    return out;
}

int symmetry_factor(const DecoratedTree& t) { return static_cast<int>(symmetry_at(t, 0)); }

double coupling(Model model) { return model == Model::Kdv ? 0.5 : 1.0; }

namespace {

std::int64_t apply_form(const LinearForm& f, std::span<const std::int64_t> freqs) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += static_cast<std::int64_t>(f[i]) * freqs[i];
    return s;
}

}  // namespace

cplx elementary_differential(const DecoratedTree& t, const FourierField& v, std::span<const std::int64_t> freqs) {
    if (freqs.size() != t.n_vars()) throw InvalidArgument("wrong number of frequencies for this tree");
    cplx value = std::ldexp(1.0, t.integral_count());
    for (int leaf : t.leaves()) {
        const std::int64_t k = apply_form(t.node(leaf).decoration, freqs);
        if (k < v.k_min() || k > v.k_max()) return 0.0;
        const cplx c = v.coeff(static_cast<int>(k));
        value *= t.node(leaf).conjugate ? std::conj(c) : c;
    }
    return value;
}

FrequencyPolynomial phase_polynomial(const DecoratedTree& t, int vertex) {
    const TreeNode& n = t.node(vertex);
    if (vertex == 0 || n.edge != EdgeKind::Integral) {
        throw InvalidArgument("phase_polynomial needs the vertex at the top of an integral edge");
    }
    FrequencyPolynomial L = dispersion(t.model(), t.frequency(vertex));
    for (int c : n.children) {
        const FrequencyPolynomial pc = dispersion(t.model(), t.frequency(c));
        if (t.node(c).conjugate) {
            L += pc;
        } else {
            L -= pc;
        }
    }
    return L;
}

std::pair<FrequencyPolynomial, FrequencyPolynomial> resonance_split(const FrequencyPolynomial& L, Model model) {
    const int d = model == Model::Kdv ? 3 : 2;
    if (L.is_zero()) return {L, L};
    if (L.n_vars() > 5 || L.degree() != d || !L.is_homogeneous()) {
        throw Unsupported("phase polynomial outside the order-2 catalog: " + L.to_string());
    }
    FrequencyPolynomial dom(L.n_vars()), low(L.n_vars());
    for (const auto& [e, c] : L.terms()) {
        const bool pure = std::count(e.begin(), e.end(), 0) == static_cast<long>(e.size()) - 1;
        FrequencyPolynomial mono(L.n_vars());
        mono += c * [&] {
            FrequencyPolynomial m = FrequencyPolynomial::constant(L.n_vars(), 1);
            for (std::size_t i = 0; i < e.size(); ++i) m = m * FrequencyPolynomial::variable(L.n_vars(), i).pow(e[i]);
            return m;
        }();
        if (pure) {
            dom += mono;
        } else {
            low += mono;
        }
    }
    return {dom, low};
}

FourierField tree_series(Model model, int r, const FourierField& v, double time, int K, bool discretized, int n) {
    if (r > 2) throw Unsupported("tree series is implemented for r <= 2");
    if (K < 0 || K > v.k_max()) throw InvalidArgument("frequency cap must satisfy 0 <= K <= N/2-1");
    FourierField out(v.n_modes());
    auto coeffs = out.mutable_coeffs();
    const int kmax = v.k_max();
    for (const CatalogTree& ct : enumerate_trees(model, r)) {
        const DecoratedTree& t = ct.tree;
        const double weight =
            std::pow(coupling(model), t.integral_count()) / static_cast<double>(symmetry_factor(t));
        const LinearForm root = t.root_frequency();
        const std::size_t nv = t.n_vars();
        std::vector<std::int64_t> f(nv, -K);
        while (true) {
            const std::int64_t k = apply_form(root, f);
            if (std::abs(k) <= kmax) {
                const cplx ups = elementary_differential(t, v, f);
                if (ups != cplx(0.0, 0.0)) {
                    const cplx pi = discretized ? evaluate_pi_discretized(t, f, time, n, r) : evaluate_pi(t, f, time);
                    coeffs[out.index(static_cast<int>(k))] += weight * ups * pi;
                }
            }
            std::size_t i = 0;
            while (i < nv && f[i] == K) f[i++] = -K;
            if (i == nv) break;
            ++f[i];
        }
    }
    if (v.real_valued() && model == Model::Kdv && out.is_conjugate_symmetric(1e-10)) out.enforce_conjugate_symmetry();
    return out;
}

}  // namespace reslab

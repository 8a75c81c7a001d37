#pragma once

// Crystal carriers (words, factorizations, tableaux), finite crystal graphs,
// and the checks run against them.

#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcrys/error.hpp"
#include "qcrys/insertion.hpp"
#include "qcrys/permwords.hpp"
#include "qcrys/tableaux.hpp"

namespace qcrys {

/// Index of the queer operators f_1bar / e_1bar. Ordinary indices are 1..n-1.
constexpr int QBAR = -1;

std::string index_label(int i);  // "1bar" or the number
/// Indices a crystal of rank n carries: 1bar first (queer, n >= 2), then 1..n-1.
std::vector<int> crystal_indices(int n, bool queer);

// ------------------------------------------------------------------ carriers

/// W_n(m): words over [n].
struct WordCrystal {
    using Element = Word;
    int n;
    bool queer = true;

    std::vector<int> weight(const Word& w) const;
    std::optional<Word> f(const Word& w, int i) const;
    std::optional<Word> e(const Word& w, int i) const;
    std::string key(const Word& w) const { return word_to_string(w); }
    std::string label(const Word& w) const { return word_to_string(w); }
};

/// pair(a, b) for strictly increasing a, b; pairs are (a_i, b_j) with a_i > b_j.
std::vector<std::pair<int, int>> pair_letters(const Word& a, const Word& b);

enum class FactorizationKind { gl, O, Sp };

/// R_n(pi) (gl only), R^O_n(pi) or R^Sp_n(pi).
struct FactorizationCrystal {
    using Element = Factorization;
    int n;
    FactorizationKind kind = FactorizationKind::gl;
    bool queer = false;

    FactorizationCrystal(int n_, FactorizationKind k)
        : n(n_), kind(k), queer(k != FactorizationKind::gl) {}

    std::vector<int> weight(const Factorization& w) const;
    std::optional<Factorization> f(const Factorization& w, int i) const;
    std::optional<Factorization> e(const Factorization& w, int i) const;
    std::string key(const Factorization& w) const { return factorization_key(w); }
    std::string label(const Factorization& w) const;
};

/// ShTab_n with the explicit raising and lowering rules.
struct ShTabCrystal {
    using Element = Tableau;
    int n;
    bool queer = true;

    std::vector<int> weight(const Tableau& t) const { return qcrys::weight(t, n); }
    std::optional<Tableau> f(const Tableau& t, int i) const;
    std::optional<Tableau> e(const Tableau& t, int i) const;
    std::string key(const Tableau& t) const { return tableau_key(t); }
    std::string label(const Tableau& t) const { return tableau_key(t); }
};

/// Positions of T|_[i,i+1] left unmatched by the parenthesis rule, in
/// shifted reading order.
std::vector<Box> unpaired(const Tableau& t, int i);

/// Tab_n with operators transported through the row reading word.
struct TabCrystal {
    using Element = Tableau;
    int n;
    bool queer = false;

    std::vector<int> weight(const Tableau& t) const { return qcrys::weight(t, n); }
    std::optional<Tableau> f(const Tableau& t, int i) const;
    std::optional<Tableau> e(const Tableau& t, int i) const;
    std::string key(const Tableau& t) const { return tableau_key(t); }
    std::string label(const Tableau& t) const { return tableau_key(t); }
};

// ---------------------------------------------------------------------- graph

struct Edge {
    int from;
    int index;
    int to;
    auto operator<=>(const Edge&) const = default;
};

/// A finite crystal as a weighted digraph. Vertices are sorted by key.
/// f[v][s] and e[v][s] hold the target vertex or -1, where slot s is 0 for
/// 1bar and i for index i.
struct CrystalGraph {
    int n = 0;
    bool queer = false;
    std::vector<std::string> keys;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> weights;
    std::vector<std::vector<int>> f;
    std::vector<std::vector<int>> e;

    int size() const { return static_cast<int>(keys.size()); }
    std::vector<int> indices() const { return crystal_indices(n, queer); }
    /// Vertex with the given key, or -1.
    int find(const std::string& key) const;
    /// f-edges ordered by (from, slot).
    std::vector<Edge> edges() const;
};

constexpr int slot_of(int i) { return i == QBAR ? 0 : i; }

/// Default exploration cap, overridable with QC_VERTEX_CAP.
int default_vertex_cap();

template <class C>
struct Explored {
    CrystalGraph graph;
    std::vector<typename C::Element> elements;  // parallel to graph.keys
};

/// Closure of the seeds under every f_i and e_i. Throws resource_error when
/// more than cap vertices are reached.
template <class C>
Explored<C> explore(const C& c, const std::vector<typename C::Element>& seeds, int cap = 0) {
    if (cap <= 0) cap = default_vertex_cap();
    const std::vector<int> idx = crystal_indices(c.n, c.queer);
    std::map<std::string, typename C::Element> found;
    std::deque<typename C::Element> queue;
    for (const auto& s : seeds)
        if (found.emplace(c.key(s), s).second) queue.push_back(s);
    if (static_cast<int>(found.size()) > cap)
        throw resource_error("crystal exploration exceeded the vertex cap of " + std::to_string(cap));
    auto visit = [&](const std::optional<typename C::Element>& y) {
        if (!y) return;
        if (found.emplace(c.key(*y), *y).second) {
            if (static_cast<int>(found.size()) > cap)
                throw resource_error("crystal exploration exceeded the vertex cap of " +
                                     std::to_string(cap));
            queue.push_back(*y);
        }
    };
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (int i : idx) {
            visit(c.f(x, i));
            visit(c.e(x, i));
        }
    }
    Explored<C> out;
    CrystalGraph& g = out.graph;
    g.n = c.n;
    g.queer = c.queer;
    for (const auto& [k, x] : found) {
        g.keys.push_back(k);
        g.labels.push_back(c.label(x));
        g.weights.push_back(c.weight(x));
        out.elements.push_back(x);
    }
    std::map<std::string, int> pos;
    for (int v = 0; v < g.size(); ++v) pos[g.keys[v]] = v;
    const int slots = std::max(c.n, 1);
    g.f.assign(g.size(), std::vector<int>(slots, -1));
    g.e.assign(g.size(), std::vector<int>(slots, -1));
    for (int v = 0; v < g.size(); ++v)
        for (int i : idx) {
            if (auto y = c.f(out.elements[v], i)) g.f[v][slot_of(i)] = pos.at(c.key(*y));
            if (auto y = c.e(out.elements[v], i)) g.e[v][slot_of(i)] = pos.at(c.key(*y));
        }
    return out;
}

/// Weakly connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const CrystalGraph& g);
/// Subgraph on the given vertices (which must be closed under the operators).
CrystalGraph subgraph(const CrystalGraph& g, const std::vector<int>& vertices);

/// (epsilon_i, phi_i) of vertex v.
std::pair<int, int> string_lengths(const CrystalGraph& g, int v, int i);

struct AxiomReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
/// Checks every clause of the gl_n axioms, and the q_n axioms when the graph
/// is queer. At most max_reports violations are recorded.
AxiomReport axioms_check(const CrystalGraph& g, std::size_t max_reports = 20);

/// Vertices with no incoming edge (every e_i absent).
std::vector<int> highest_weights(const CrystalGraph& g);
/// One vertex per component: the one of lexicographically largest weight.
/// In a normal q_n-crystal this is the component's highest weight, since
/// x^mu has coefficient 1 in P_mu. Throws invariant_error if that weight
/// occurs twice in a component.
std::vector<int> queer_highest_weights(const CrystalGraph& g);

/// Checks that phi (vertex of g1 -> vertex of g2) preserves weights and
/// string lengths and commutes with every operator.
bool morphism_check(const std::vector<int>& phi, const CrystalGraph& g1, const CrystalGraph& g2,
                    std::string* why = nullptr);
/// Morphism that maps each component of g1 bijectively onto a component of g2.
bool quasi_isomorphism_check(const std::vector<int>& phi, const CrystalGraph& g1,
                             const CrystalGraph& g2, std::string* why = nullptr);

/// Canonical form of a graph up to isomorphism of weighted labeled digraphs.
std::string canonical_form(const CrystalGraph& g);
bool iso_check(const CrystalGraph& g1, const CrystalGraph& g2);
/// An isomorphism g1 -> g2 if one exists.
std::optional<std::vector<int>> find_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2);

/// Builds phi for morphism checks from an element map.
template <class C1, class C2, class F>
std::vector<int> vertex_map(const Explored<C1>& dom, const C2& cod_carrier, const CrystalGraph& cod,
                            F&& map) {
    std::vector<int> phi;
    for (const auto& x : dom.elements) phi.push_back(cod.find(cod_carrier.key(map(x))));
    return phi;
}

std::string to_dot(const CrystalGraph& g, const std::string& name = "crystal");
std::string to_json(const CrystalGraph& g);

// ------------------------------------------------------------ carrier sets

/// Every n-fold increasing factorization of every word in the set.
std::vector<Factorization> factorizations_of(const std::set<Word>& words, int n);
/// All words of length m over [n].
std::vector<Word> all_words(int n, int m);

// ------------------------------------------------------------ reduction maps

/// Perm_n(m): increasing factorizations of permutations of 1..m in one-line form.
std::vector<Factorization> perm_factorizations(int n, int m);
/// The word whose k-th letter is the index of the factor containing k.
Word inv_map(const Factorization& w);
/// Doubles every letter.
Factorization dbl(const Factorization& w);

}  // namespace qcrys

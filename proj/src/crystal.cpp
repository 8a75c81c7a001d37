#include "qcrys/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qcrys {

std::string index_label(int i) { return i == QBAR ? "1bar" : std::to_string(i); }

std::vector<int> crystal_indices(int n, bool queer) {
    std::vector<int> out;
    if (queer && n >= 2) out.push_back(QBAR);
    for (int i = 1; i < n; ++i) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------- words

std::vector<int> WordCrystal::weight(const Word& w) const {
    std::vector<int> wt(static_cast<std::size_t>(n), 0);
    for (int a : w) {
        if (a < 1 || a > n) throw input_error("letter " + std::to_string(a) + " outside [1,n]");
        ++wt[a - 1];
    }
    return wt;
}

namespace {

// Unmatched ")" positions (letters i) and "(" positions (letters i+1), each
// in left-to-right order.
std::pair<std::vector<int>, std::vector<int>> bracket_unpaired(const std::vector<int>& seq, int i) {
    std::vector<int> closes, opens;
    for (int k = 0; k < static_cast<int>(seq.size()); ++k) {
        if (seq[k] == i + 1) {
            opens.push_back(k);
        } else if (seq[k] == i) {
            if (opens.empty())
                closes.push_back(k);
            else
                opens.pop_back();
        }
    }
    return {closes, opens};
}

}  // namespace

std::optional<Word> WordCrystal::f(const Word& w, int i) const {
    if (i == QBAR) {
        if (n < 2) return std::nullopt;
        auto one = std::find(w.begin(), w.end(), 1);
        auto two = std::find(w.begin(), w.end(), 2);
        if (one == w.end() || (two != w.end() && two < one)) return std::nullopt;
        Word out = w;
        out[one - w.begin()] = 2;
        return out;
    }
    if (i < 1 || i >= n) return std::nullopt;
    auto [closes, opens] = bracket_unpaired(w, i);
    if (closes.empty()) return std::nullopt;
    Word out = w;
    out[closes.back()] = i + 1;
    return out;
}

std::optional<Word> WordCrystal::e(const Word& w, int i) const {
    if (i == QBAR) {
        if (n < 2) return std::nullopt;
        auto one = std::find(w.begin(), w.end(), 1);
        auto two = std::find(w.begin(), w.end(), 2);
        if (two == w.end() || (one != w.end() && one < two)) return std::nullopt;
        Word out = w;
        out[two - w.begin()] = 1;
        return out;
    }
    if (i < 1 || i >= n) return std::nullopt;
    auto [closes, opens] = bracket_unpaired(w, i);
    if (opens.empty()) return std::nullopt;
    Word out = w;
    out[opens.front()] = i;
    return out;
}

// ------------------------------------------------------------- factorizations

std::vector<std::pair<int, int>> pair_letters(const Word& a, const Word& b) {
    std::vector<bool> used(a.size(), false);
    std::vector<std::pair<int, int>> out;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!used[k] && a[k] > *it) {
                used[k] = true;
                out.emplace_back(a[k], *it);
                break;
            }
    }
    return out;
}

namespace {

void insert_sorted(Word& w, int x) { w.insert(std::lower_bound(w.begin(), w.end(), x), x); }
void erase_letter(Word& w, int x) { w.erase(std::find(w.begin(), w.end(), x)); }
bool has_letter(const Word& w, int x) { return std::binary_search(w.begin(), w.end(), x); }

}  // namespace

std::vector<int> FactorizationCrystal::weight(const Factorization& w) const {
    std::vector<int> wt;
    for (const auto& part : w) wt.push_back(static_cast<int>(part.size()));
    return wt;
}

std::string FactorizationCrystal::label(const Factorization& w) const { return factorization_key(w); }

std::optional<Factorization> FactorizationCrystal::f(const Factorization& w, int i) const {
    if (static_cast<int>(w.size()) != n) throw input_error("factorization has the wrong number of factors");
    if (i == QBAR) {
        if (!queer || n < 2) return std::nullopt;
        const Word& a = w[0];
        const Word& b = w[1];
        if (a.empty()) return std::nullopt;
        int x = a.front();
        if (!b.empty() && b.front() <= x) return std::nullopt;
        Factorization out = w;
        if (kind == FactorizationKind::Sp && has_letter(a, x + 1)) {
            erase_letter(out[0], x + 1);
            out[1].insert(out[1].begin(), x - 1);
        } else {
            out[0].erase(out[0].begin());
            out[1].insert(out[1].begin(), x);
        }
        return out;
    }
    if (i < 1 || i >= n) return std::nullopt;
    const Word& a = w[i - 1];
    const Word& b = w[i];
    auto pairs = pair_letters(a, b);
    std::optional<int> x;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        if (std::none_of(pairs.begin(), pairs.end(), [&](auto p) { return p.first == *it; })) {
            x = *it;
            break;
        }
    if (!x) return std::nullopt;
    int y = *x;
    while (has_letter(b, y)) ++y;
    Factorization out = w;
    erase_letter(out[i - 1], *x);
    insert_sorted(out[i], y);
    return out;
}

std::optional<Factorization> FactorizationCrystal::e(const Factorization& w, int i) const {
    if (static_cast<int>(w.size()) != n) throw input_error("factorization has the wrong number of factors");
    if (i == QBAR) {
        if (!queer || n < 2) return std::nullopt;
        const Word& a = w[0];
        const Word& b = w[1];
        if (b.empty()) return std::nullopt;
        int x = b.front();
        if (!a.empty() && a.front() <= x) return std::nullopt;
        Factorization out = w;
        out[1].erase(out[1].begin());
        if (kind == FactorizationKind::Sp && x % 2 != 0)
            insert_sorted(out[0], x + 2);
        else
            out[0].insert(out[0].begin(), x);
        return out;
    }
    if (i < 1 || i >= n) return std::nullopt;
    const Word& a = w[i - 1];
    const Word& b = w[i];
    auto pairs = pair_letters(a, b);
    std::optional<int> y;
    for (int c : b)
        if (std::none_of(pairs.begin(), pairs.end(), [&](auto p) { return p.second == c; })) {
            y = c;
            break;
        }
    if (!y) return std::nullopt;
    int x = *y;
    while (has_letter(a, x)) --x;
    Factorization out = w;
    erase_letter(out[i], *y);
    insert_sorted(out[i - 1], x);
    return out;
}

// ----------------------------------------------------------- shifted tableaux

std::vector<Box> unpaired(const Tableau& t, int i) {
    std::vector<Box> boxes;
    std::vector<int> seq;
    for (auto [x, y] : shword_boxes(t)) {
        int v = value_of(t.at(x, y));
        if (v == i || v == i + 1) {
            boxes.emplace_back(x, y);
            seq.push_back(v);
        }
    }
    auto [closes, opens] = bracket_unpaired(seq, i);
    std::vector<int> keep(closes);
    keep.insert(keep.end(), opens.begin(), opens.end());
    std::sort(keep.begin(), keep.end());
    std::vector<Box> out;
    for (int k : keep) out.push_back(boxes[k]);
    return out;
}

namespace {

// The ribbon of entries with value v containing box b, ordered from its
// northwest end to its southeast end.
std::vector<Box> ribbon(const Tableau& t, Box b, int v) {
    std::vector<Box> out{b};
    std::set<Box> seen{b};
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto [x, y] = out[k];
        for (Box nb : {Box{x + 1, y}, Box{x - 1, y}, Box{x, y + 1}, Box{x, y - 1}}) {
            auto e = t.get(nb.first, nb.second);
            if (e && value_of(*e) == v && seen.insert(nb).second) out.push_back(nb);
        }
    }
    std::sort(out.begin(), out.end(), [](Box p, Box q) {
        return p.first != q.first ? p.first > q.first : p.second < q.second;
    });
    return out;
}

bool is_one_of(std::optional<int> e, int a, int b) { return e && (*e == a || *e == b); }

}  // namespace

std::optional<Tableau> ShTabCrystal::f(const Tableau& t, int i) const {
    if (i == QBAR) {
        if (n < 2) return std::nullopt;
        if (t.rows.empty()) return std::nullopt;
        for (const auto& row : t.rows)
            for (int e : row)
                if (e == primed(2)) return std::nullopt;
        const auto& first = t.rows[0];
        int last_one = -1;
        for (int k = 0; k < static_cast<int>(first.size()); ++k)
            if (first[k] == unprimed(1)) last_one = k;
        if (last_one < 0) return std::nullopt;
        Tableau out = t;
        out.rows[0][last_one] = last_one == 0 ? unprimed(2) : primed(2);
        return out;
    }
    if (i < 1 || i >= n) return std::nullopt;
    const int iu = unprimed(i), jp = primed(i + 1), ju = unprimed(i + 1);
    std::optional<Box> pos;
    for (Box b : unpaired(t, i))
        if (value_of(t.at(b.first, b.second)) == i) pos = b;
    if (!pos) return std::nullopt;
    auto [x, y] = *pos;
    Tableau out = t;
    auto right = t.get(x, y + 1);
    auto up = t.get(x + 1, y);
    if (t.at(x, y) == iu) {
        if (right == jp) {                          // L1(a)
            out.set(x, y, jp);
            out.set(x, y + 1, ju);
        } else if (!is_one_of(up, jp, ju)) {        // L1(b)
            out.set(x, y, ju);
        } else {                                    // L1(c)
            Box nw = ribbon(t, {x + 1, y}, i + 1).front();
            out.set(x, y, jp);
            if (nw.first != nw.second) {
                if (t.at(nw.first, nw.second) != jp) throw invariant_error("f_i: ribbon end is not primed");
                out.set(nw.first, nw.second, ju);
            }
        }
        return out;
    }
    if (up == iu) {                                 // L2(a)
        out.set(x, y, iu);
        out.set(x + 1, y, jp);
    } else if (!is_one_of(right, iu, jp)) {         // L2(b)
        out.set(x, y, jp);
    } else {                                        // L2(c)
        auto rib = ribbon(t, {x, y}, i);
        auto it = std::find(rib.begin(), rib.end(), Box{x, y});
        std::optional<Box> target;
        for (++it; it != rib.end(); ++it)
            if (t.at(it->first, it->second) == iu && !is_one_of(t.get(it->first, it->second + 1), iu, jp)) {
                target = *it;
                break;
            }
        if (!target) throw invariant_error("f_i: no ribbon box for case L2(c)");
        out.set(x, y, iu);
        out.set(target->first, target->second, jp);
    }
    return out;
}

std::optional<Tableau> ShTabCrystal::e(const Tableau& t, int i) const {
    if (i == QBAR) {
        if (n < 2) return std::nullopt;
        if (t.rows.empty()) return std::nullopt;
        Tableau out = t;
        auto& first = out.rows[0];
        if (first[0] == unprimed(2)) {
            first[0] = unprimed(1);
            return out;
        }
        for (int& e : first)
            if (e == primed(2)) {
                e = unprimed(1);
                return out;
            }
        return std::nullopt;
    }
    if (i < 1 || i >= n) return std::nullopt;
    const int ip = primed(i), iu = unprimed(i), jp = primed(i + 1), ju = unprimed(i + 1);
    std::optional<Box> pos;
    for (Box b : unpaired(t, i))
        if (value_of(t.at(b.first, b.second)) == i + 1) {
            pos = b;
            break;
        }
    if (!pos) return std::nullopt;
    auto [x, y] = *pos;
    Tableau out = t;
    auto left = t.get(x, y - 1);
    auto down = t.get(x - 1, y);
    if (t.at(x, y) == ju) {
        if (left == jp) {                           // R1(a)
            out.set(x, y, jp);
            out.set(x, y - 1, iu);
        } else if (!is_one_of(down, iu, jp)) {      // R1(b)
            out.set(x, y, iu);
        } else {                                    // R1(c)
            auto rib = ribbon(t, {x, y}, i + 1);
            auto it = std::find(rib.begin(), rib.end(), Box{x, y});
            std::optional<Box> target;
            for (++it; it != rib.end(); ++it)
                if (t.at(it->first, it->second) == jp &&
                    !is_one_of(t.get(it->first - 1, it->second), iu, jp)) {
                    target = *it;
                    break;
                }
            if (!target) throw invariant_error("e_i: no ribbon box for case R1(c)");
            out.set(x, y, jp);
            out.set(target->first, target->second, iu);
        }
        return out;
    }
    if (down == iu) {                               // R2(a)
        out.set(x, y, iu);
        out.set(x - 1, y, ip);
    } else if (!is_one_of(left, ip, iu)) {          // R2(b)
        out.set(x, y, ip);
    } else {                                        // R2(c)
        Box nw = ribbon(t, {x, y - 1}, i).front();
        out.set(x, y, iu);
        if (nw.first != nw.second) {
            if (t.at(nw.first, nw.second) != iu) throw invariant_error("e_i: ribbon end is primed");
            out.set(nw.first, nw.second, ip);
        }
    }
    return out;
}

// ------------------------------------------------------------ plain tableaux

namespace {

std::optional<Tableau> reshape(const Tableau& t, const std::optional<Word>& w) {
    if (!w) return std::nullopt;
    Tableau out = t;
    std::size_t k = 0;
    for (int x = static_cast<int>(out.rows.size()); x >= 1; --x)
        for (int& e : out.rows[x - 1]) e = unprimed((*w)[k++]);
    return out;
}

}  // namespace

std::optional<Tableau> TabCrystal::f(const Tableau& t, int i) const {
    return reshape(t, WordCrystal{n, false}.f(row_word(t), i));
}

std::optional<Tableau> TabCrystal::e(const Tableau& t, int i) const {
    return reshape(t, WordCrystal{n, false}.e(row_word(t), i));
}

// ---------------------------------------------------------------------- graph

int CrystalGraph::find(const std::string& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    return it != keys.end() && *it == key ? static_cast<int>(it - keys.begin()) : -1;
}

std::vector<Edge> CrystalGraph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < size(); ++v)
        for (int i : indices())
            if (int u = f[v][slot_of(i)]; u >= 0) out.push_back({v, i, u});
    return out;
}

int default_vertex_cap() {
    if (const char* env = std::getenv("QC_VERTEX_CAP")) {
        try {
            int cap = std::stoi(env);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        throw input_error(std::string("QC_VERTEX_CAP must be a positive integer, got '") + env + "'");
    }
    return 200000;
}

std::vector<std::vector<int>> components(const CrystalGraph& g) {
    std::vector<int> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
    for (const auto& ed : g.edges()) parent[root(ed.from)] = root(ed.to);
    for (int v = 0; v < g.size(); ++v)
        for (int s = 0; s < static_cast<int>(g.e[v].size()); ++s)
            if (g.e[v][s] >= 0) parent[root(v)] = root(g.e[v][s]);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < g.size(); ++v) groups[root(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [r, vs] : groups) out.push_back(std::move(vs));
    std::sort(out.begin(), out.end());
    return out;
}

CrystalGraph subgraph(const CrystalGraph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> where(g.size(), -1);
    for (int k = 0; k < static_cast<int>(sorted.size()); ++k) where[sorted[k]] = k;
    CrystalGraph h;
    h.n = g.n;
    h.queer = g.queer;
    auto remap = [&](int u) {
        if (u < 0) return -1;
        if (where[u] < 0) throw input_error("subgraph: vertex set is not closed under the operators");
        return where[u];
    };
    for (int v : sorted) {
        h.keys.push_back(g.keys[v]);
        h.labels.push_back(g.labels[v]);
        h.weights.push_back(g.weights[v]);
        std::vector<int> fv, ev;
        for (int u : g.f[v]) fv.push_back(remap(u));
        for (int u : g.e[v]) ev.push_back(remap(u));
        h.f.push_back(std::move(fv));
        h.e.push_back(std::move(ev));
    }
    return h;
}

namespace {

// Length of the f- or e-string from v; -1 if it revisits a vertex.
int string_length(const std::vector<std::vector<int>>& op, int v, int s) {
    int k = 0;
    int limit = static_cast<int>(op.size());
    while (op[v][s] >= 0) {
        v = op[v][s];
        if (++k > limit) return -1;
    }
    return k;
}

std::string vname(const CrystalGraph& g, int v) { return g.keys[v]; }

}  // namespace

std::pair<int, int> string_lengths(const CrystalGraph& g, int v, int i) {
    int s = slot_of(i);
    return {string_length(g.e, v, s), string_length(g.f, v, s)};
}

AxiomReport axioms_check(const CrystalGraph& g, std::size_t max_reports) {
    AxiomReport rep;
    auto fail = [&](const std::string& msg) {
        if (rep.violations.size() < max_reports) rep.violations.push_back(msg);
    };
    auto apply = [](const std::vector<std::vector<int>>& op, int v, int s) { return v < 0 ? -1 : op[v][s]; };
    const auto idx = g.indices();
    for (int v = 0; v < g.size(); ++v) {
        const auto& wt = g.weights[v];
        if (static_cast<int>(wt.size()) != g.n) fail(vname(g, v) + ": weight has the wrong length");
        for (int c : wt)
            if (c < 0) fail(vname(g, v) + ": negative weight");
        for (int i : idx) {
            int s = slot_of(i);
            std::string at = vname(g, v) + " index " + index_label(i) + ": ";
            if (int u = g.f[v][s]; u >= 0) {
                if (g.e[u][s] != v) fail(at + "f_i(b) = c but e_i(c) != b");
                std::vector<int> expect = wt;
                int a = i == QBAR ? 0 : i - 1;
                --expect[a];
                ++expect[a + 1];
                if (g.weights[u] != expect) fail(at + "weight does not shift across an f-edge");
            }
            if (int u = g.e[v][s]; u >= 0 && g.f[u][s] != v) fail(at + "e_i(c) = b but f_i(b) != c");
            auto [eps, phi] = string_lengths(g, v, i);
            if (eps < 0 || phi < 0) {
                fail(at + "infinite string");
                continue;
            }
            if (i != QBAR && phi - eps != wt[i - 1] - wt[i]) fail(at + "phi - epsilon != wt_i - wt_{i+1}");
            if (i == QBAR) {
                if (eps + phi > 1) fail(at + "epsilon + phi > 1");
                if ((wt[0] != 0 || wt[1] != 0) && eps + phi != 1)
                    fail(at + "epsilon + phi != 1 although wt_1 or wt_2 is nonzero");
                if (int u = g.f[v][0]; u >= 0)
                    for (int j = 3; j < g.n; ++j)
                        if (string_lengths(g, u, j) != string_lengths(g, v, j))
                            fail(at + "f_1bar changes string lengths for index " + std::to_string(j));
                for (int j = 3; j < g.n; ++j) {
                    for (const auto* q : {&g.f, &g.e})
                        for (const auto* r : {&g.f, &g.e})
                            if (apply(*q, apply(*r, v, j), 0) != apply(*r, apply(*q, v, 0), j))
                                fail(at + "queer operator does not commute with index " + std::to_string(j));
                }
            }
        }
    }
    return rep;
}

std::vector<int> highest_weights(const CrystalGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (std::all_of(g.e[v].begin(), g.e[v].end(), [](int u) { return u < 0; })) out.push_back(v);
    return out;
}

std::vector<int> queer_highest_weights(const CrystalGraph& g) {
    std::vector<int> out;
    for (const auto& comp : components(g)) {
        int best = comp.front();
        bool tied = false;
        for (int v : comp) {
            if (v == best) continue;
            if (g.weights[v] > g.weights[best]) {
                best = v;
                tied = false;
            } else if (g.weights[v] == g.weights[best]) {
                tied = true;
            }
        }
        if (tied) throw invariant_error("component of " + g.keys[best] + " has no unique top weight");
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool morphism_check(const std::vector<int>& phi, const CrystalGraph& g1, const CrystalGraph& g2,
                    std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(phi.size()) != g1.size()) return bad("map has the wrong domain size");
    if (g1.n != g2.n || g1.queer != g2.queer) return bad("crystals of different types");
    for (int v = 0; v < g1.size(); ++v) {
        int w = phi[v];
        if (w < 0 || w >= g2.size()) return bad(g1.keys[v] + " has no image");
        if (g1.weights[v] != g2.weights[w]) return bad(g1.keys[v] + ": weight not preserved");
        for (int i : g1.indices()) {
            int s = slot_of(i);
            if (string_lengths(g1, v, i) != string_lengths(g2, w, i))
                return bad(g1.keys[v] + ": string lengths differ for index " + index_label(i));
            for (const auto* op : {&g1.f, &g1.e}) {
                const auto& op2 = op == &g1.f ? g2.f : g2.e;
                int u = (*op)[v][s];
                int expect = u < 0 ? -1 : phi[u];
                if (op2[w][s] != expect)
                    return bad(g1.keys[v] + ": map does not commute with index " + index_label(i));
            }
        }
    }
    return true;
}

bool quasi_isomorphism_check(const std::vector<int>& phi, const CrystalGraph& g1,
                             const CrystalGraph& g2, std::string* why) {
    if (!morphism_check(phi, g1, g2, why)) return false;
    auto comps2 = components(g2);
    std::vector<int> comp_of(g2.size(), -1);
    for (int c = 0; c < static_cast<int>(comps2.size()); ++c)
        for (int v : comps2[c]) comp_of[v] = c;
    for (const auto& comp : components(g1)) {
        std::set<int> image;
        for (int v : comp) image.insert(phi[v]);
        int target = comp_of[phi[comp.front()]];
        if (image.size() != comp.size() || image.size() != comps2[target].size()) {
            if (why) *why = "component of " + g1.keys[comp.front()] + " is not mapped bijectively onto a component";
            return false;
        }
    }
    return true;
}

namespace {

// BFS numbering of a component from root; neighbours taken slot by slot,
// f before e.
std::vector<int> bfs_order(const CrystalGraph& g, int root) {
    std::vector<int> order{root};
    std::map<int, int> seen{{root, 0}};
    for (std::size_t k = 0; k < order.size(); ++k) {
        int v = order[k];
        for (std::size_t s = 0; s < g.f[v].size(); ++s)
            for (int u : {g.f[v][s], g.e[v][s]})
                if (u >= 0 && seen.emplace(u, static_cast<int>(order.size())).second) order.push_back(u);
    }
    return order;
}

std::string encode(const CrystalGraph& g, const std::vector<int>& order) {
    std::map<int, int> num;
    for (int k = 0; k < static_cast<int>(order.size()); ++k) num[order[k]] = k;
    std::ostringstream os;
    for (int v : order) {
        os << '[';
        for (int c : g.weights[v]) os << c << ',';
        os << '|';
        for (std::size_t s = 0; s < g.f[v].size(); ++s) {
            int a = g.f[v][s], b = g.e[v][s];
            os << (a < 0 ? -1 : num.at(a)) << ',' << (b < 0 ? -1 : num.at(b)) << ';';
        }
        os << ']';
    }
    return os.str();
}

struct CanonComponent {
    std::string form;
    std::vector<int> order;
};

CanonComponent canon_component(const CrystalGraph& g, const std::vector<int>& comp) {
    std::vector<int> roots;
    for (int v : comp)
        if (std::all_of(g.e[v].begin(), g.e[v].end(), [](int u) { return u < 0; })) roots.push_back(v);
    if (roots.empty()) roots = comp;
    std::optional<CanonComponent> best;
    for (int r : roots) {
        auto order = bfs_order(g, r);
        auto form = encode(g, order);
        if (!best || form < best->form) best = CanonComponent{form, order};
    }
    return *best;
}

}  // namespace

std::string canonical_form(const CrystalGraph& g) {
    std::vector<std::string> forms;
    for (const auto& comp : components(g)) forms.push_back(canon_component(g, comp).form);
    std::sort(forms.begin(), forms.end());
    std::string out = "n=" + std::to_string(g.n) + (g.queer ? ",q" : ",gl");
    for (const auto& f : forms) out += "{" + f + "}";
    return out;
}

bool iso_check(const CrystalGraph& g1, const CrystalGraph& g2) { return canonical_form(g1) == canonical_form(g2); }

std::optional<std::vector<int>> find_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2) {
    if (g1.n != g2.n || g1.queer != g2.queer || g1.size() != g2.size()) return std::nullopt;
    std::multimap<std::string, CanonComponent> pool;
    for (const auto& comp : components(g2)) {
        auto c = canon_component(g2, comp);
        pool.emplace(c.form, std::move(c));
    }
    std::vector<int> phi(g1.size(), -1);
    for (const auto& comp : components(g1)) {
        auto c = canon_component(g1, comp);
        auto it = pool.find(c.form);
        if (it == pool.end()) return std::nullopt;
        for (std::size_t k = 0; k < c.order.size(); ++k) phi[c.order[k]] = it->second.order[k];
        pool.erase(it);
    }
    return phi;
}

std::string to_dot(const CrystalGraph& g, const std::string& name) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << quote(name) << " {\n";
    for (int v = 0; v < g.size(); ++v) {
        std::string wt;
        for (std::size_t k = 0; k < g.weights[v].size(); ++k) wt += (k ? "," : "") + std::to_string(g.weights[v][k]);
        os << "  v" << v << " [label=" << quote(g.labels[v]) << ", wt=" << quote("(" + wt + ")") << "];\n";
    }
    for (const auto& ed : g.edges())
        os << "  v" << ed.from << " -> v" << ed.to << " [label=" << quote(index_label(ed.index)) << "];\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const CrystalGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["queer"] = g.queer;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.size(); ++v)
        j["vertices"].push_back({{"key", g.keys[v]}, {"label", g.labels[v]}, {"weight", g.weights[v]}});
    j["edges"] = nlohmann::json::array();
    for (const auto& ed : g.edges())
        j["edges"].push_back({{"from", ed.from}, {"index", index_label(ed.index)}, {"to", ed.to}});
    return j.dump(2) + "\n";
}

// -------------------------------------------------------------- carrier sets

std::vector<Factorization> factorizations_of(const std::set<Word>& words, int n) {
    std::vector<Factorization> out;
    for (const auto& w : words)
        for (auto& f : factorizations(w, n)) out.push_back(std::move(f));
    return out;
}

std::vector<Word> all_words(int n, int m) {
    std::vector<Word> out;
    if (n < 1) return m == 0 ? std::vector<Word>{Word{}} : out;
    Word w(static_cast<std::size_t>(m), 1);
    for (;;) {
        out.push_back(w);
        int k = m - 1;
        while (k >= 0 && w[k] == n) w[k--] = 1;
        if (k < 0) break;
        ++w[k];
    }
    return out;
}

// ------------------------------------------------------------ reduction maps

std::vector<Factorization> perm_factorizations(int n, int m) {
    Word p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Factorization> out;
    do {
        for (auto& f : factorizations(p, n)) out.push_back(std::move(f));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Word inv_map(const Factorization& w) {
    Word letters = concat(w);
    int m = static_cast<int>(letters.size());
    Word out(static_cast<std::size_t>(m), 0);
    for (std::size_t j = 0; j < w.size(); ++j)
        for (int a : w[j]) {
            if (a < 1 || a > m || out[a - 1] != 0) throw input_error("inv: factorization is not of a permutation");
            out[a - 1] = static_cast<int>(j) + 1;
        }
    return out;
}

Factorization dbl(const Factorization& w) {
    Factorization out = w;
    for (auto& part : out)
        for (int& a : part) a *= 2;
    return out;
}

}  // namespace qcrys

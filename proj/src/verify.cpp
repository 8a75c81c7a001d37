#include "qcrys/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qcrys/bumping.hpp"
#include "qcrys/crystal.hpp"
#include "qcrys/error.hpp"
#include "qcrys/insertion.hpp"
#include "qcrys/symchar.hpp"
#include "qcrys/tableaux.hpp"

namespace qcrys {

void VerifyReport::fail(const std::string& what) {
    ++failure_count;
    if (failures.size() < 10) failures.push_back(what);
}

int VerifyReport::exit_code() const {
    if (passed()) return 0;
    return conjecture ? 4 : 1;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << target << ": ";
    if (passed()) os << (conjecture ? "checked, no counterexample" : "pass");
    else os << (conjecture ? "COUNTEREXAMPLE" : "FAIL") << " (" << failure_count << " failures)";
    os << " [" << cases << " cases]";
    return os.str();
}

const std::vector<std::string>& verify_target_names() {
    static const std::vector<std::string> names = {
        "crystal-axioms",  "eg-fibers",         "oeg-fibers",          "speg-fibers",
        "q-morphism-O",    "q-morphism-Sp",     "bump-properties",     "dual-equivalence",
        "reduction-lemma", "supersymmetry",     "schurP-positivity",   "once-bound",
        "conjecture-ib-bound", "conjecture-fb-bound"};
    return names;
}

// ---------------------------------------------------------------- corpora

int permutation_window(int max_len) { return max_len + 2; }
int fpf_window(int max_len) { return 2 * ((max_len + 5) / 2); }

std::vector<Permutation> permutation_corpus(int max_len, int window, bool drop_shifts) {
    std::vector<Permutation> out;
    std::vector<int> images(window);
    for (int k = 0; k < window; ++k) images[k] = k + 1;
    do {
        if (drop_shifts && images[0] == 1) continue;
        Permutation p = Permutation::from_one_line(images);
        int l = p.length();
        if (l > 0 && l <= max_len) out.push_back(p);
    } while (std::next_permutation(images.begin(), images.end()));
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        return std::pair(a.length(), a) < std::pair(b.length(), b);
    });
    return out;
}

namespace {

// Partial (or perfect) matchings of [1, window].
void matchings(std::vector<int>& partner, int next, bool perfect,
               const std::function<void(const std::vector<int>&)>& emit) {
    int window = static_cast<int>(partner.size()) - 1;
    while (next <= window && partner[next]) ++next;
    if (next > window) {
        emit(partner);
        return;
    }
    if (!perfect) {
        partner[next] = next;
        matchings(partner, next + 1, perfect, emit);
        partner[next] = 0;
    }
    for (int j = next + 1; j <= window; ++j) {
        if (partner[j]) continue;
        partner[next] = j;
        partner[j] = next;
        matchings(partner, next + 1, perfect, emit);
        partner[next] = partner[j] = 0;
    }
}

}  // namespace

std::vector<Permutation> involution_corpus(int max_len, int window, bool drop_shifts) {
    std::vector<Permutation> out;
    std::vector<int> partner(window + 1, 0);
    matchings(partner, 1, false, [&](const std::vector<int>& p) {
        if (drop_shifts && p[1] == 1) return;
        Permutation z = Permutation::from_one_line(std::vector<int>(p.begin() + 1, p.end()));
        int l = length_invariants(z).ell_flavor;
        if (l > 0 && l <= max_len) out.push_back(z);
    });
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        return std::pair(length_invariants(a).ell_flavor, a) < std::pair(length_invariants(b).ell_flavor, b);
    });
    return out;
}

std::vector<FpfInvolution> fpf_corpus(int max_len, int window, bool drop_shifts) {
    if (window % 2) throw input_error("fpf window must be even");
    std::vector<FpfInvolution> out;
    std::vector<int> partner(window + 1, 0);
    matchings(partner, 1, true, [&](const std::vector<int>& p) {
        if (drop_shifts && p[1] == 2) return;
        std::vector<std::pair<int, int>> cycles;
        for (int i = 1; i <= window; ++i)
            if (i < p[i]) cycles.emplace_back(i, p[i]);
        FpfInvolution z = FpfInvolution::from_cycles(cycles);
        int l = length_invariants(z).ell_flavor;
        if (l > 0 && l <= max_len) out.push_back(z);
    });
    std::sort(out.begin(), out.end(), [](const FpfInvolution& a, const FpfInvolution& b) {
        return std::pair(length_invariants(a).ell_flavor, a) < std::pair(length_invariants(b).ell_flavor, b);
    });
    return out;
}

std::vector<Permutation> sigma_set(int m) {
    const int M = m + 1;
    std::vector<Permutation> out;
    // Choose 2 < i_1 < i_1 + 1 < i_2 < ... < i_k < M with gaps of at least 2.
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& is) {
        std::vector<std::vector<int>> cycles;
        int left = 1;
        for (int i : is) {
            cycles.push_back({left, i});
            left = i - 1;
        }
        cycles.push_back({left, M});
        out.push_back(Permutation::from_cycles(cycles));
        int from = is.empty() ? 3 : is.back() + 2;
        for (int i = from; i < M; ++i) {
            is.push_back(i);
            grow(is);
            is.pop_back();
        }
    };
    std::vector<int> is;
    grow(is);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation even_involution(int m) {
    Permutation p;
    for (int k = 1; k <= m; ++k) p = p.times_s(2 * k);
    return p;
}

FpfInvolution even_fpf_involution(int m) {
    const int M = m + 1;
    std::vector<std::pair<int, int>> cycles;
    for (int i = 1; i <= 2 * M; ++i) {
        int j;
        if (i == 1 || i == 2 * M - 2) j = i + 2;
        else if (i == 3 || i == 2 * M) j = i - 2;
        else if (i % 2 == 0) j = i + 3;
        else j = i - 3;
        if (i < j) cycles.emplace_back(i, j);
    }
    return FpfInvolution::from_cycles(cycles);
}

namespace {

// ---------------------------------------------------------------- helpers

std::string fkey(const Factorization& f) { return factorization_key(f); }

std::string ptab(InsertKind k, const Factorization& f) { return tableau_key(insert(k, f, false).P); }
std::string qtab(InsertKind k, const Factorization& f) { return tableau_key(insert(k, f, false).Q); }

struct Family {
    std::string name;
    FactorizationKind kind;
    InsertKind insert;
    Relation relation;
    Flavor flavor;
};

const Family gl_family{"R", FactorizationKind::gl, InsertKind::eg, Relation::K, Flavor::reduced};
const Family o_family{"R^O", FactorizationKind::O, InsertKind::oeg, Relation::O, Flavor::involution};
const Family sp_family{"R^Sp", FactorizationKind::Sp, InsertKind::speg, Relation::Sp, Flavor::fpf};

// One class of words per target element, with a printable name.
struct WordClass {
    std::string pi;
    std::set<Word> words;
    int length = 0;
};

std::vector<WordClass> classes(const Family& fam, int max_len, bool drop_shifts) {
    std::vector<WordClass> out;
    auto add = [&](const std::string& name, std::set<Word> ws, int l) {
        out.push_back({name, std::move(ws), l});
    };
    if (fam.flavor == Flavor::reduced) {
        for (const auto& p : permutation_corpus(max_len, permutation_window(max_len), drop_shifts))
            add(p.to_string(), enumerate_words(p, Flavor::reduced), p.length());
    } else if (fam.flavor == Flavor::involution) {
        for (const auto& p : involution_corpus(max_len, permutation_window(max_len), drop_shifts))
            add(p.to_string(), enumerate_words(p, Flavor::involution), length_invariants(p).ell_flavor);
    } else {
        for (const auto& p : fpf_corpus(max_len, fpf_window(max_len), drop_shifts))
            add(p.to_string(), enumerate_words(p), length_invariants(p).ell_flavor);
    }
    return out;
}

Explored<FactorizationCrystal> factorization_graph(const Family& fam, const std::set<Word>& words, int n) {
    FactorizationCrystal c(n, fam.kind);
    return explore(c, factorizations_of(words, n));
}

// ---------------------------------------------------------------- targets

void fibers(VerifyReport& rep, const Family& fam, const VerifyBounds& b) {
    for (const auto& wc : classes(fam, b.maxlen, true)) {
        std::map<std::string, std::set<Word>> by_p;
        for (const auto& w : wc.words) by_p[ptab(fam.insert, singletons(w))].insert(w);
        for (const auto& [p, ws] : by_p) {
            ++rep.cases;
            if (equivalence_class(*ws.begin(), fam.relation) != ws)
                rep.fail(wc.pi + ": P-fiber " + p + " is not an equivalence class (contains " +
                         word_to_string(*ws.begin()) + ")");
        }
        for (int n = 1; n <= b.n; ++n) {
            auto carrier = factorizations_of(wc.words, n);
            auto ex = factorization_graph(fam, wc.words, n);
            if (ex.graph.size() != static_cast<int>(carrier.size()))
                rep.fail(fam.name + "_" + std::to_string(n) + wc.pi + ": operators leave the carrier set");
            std::map<std::string, int> owner;
            auto comps = components(ex.graph);
            for (std::size_t c = 0; c < comps.size(); ++c) {
                ++rep.cases;
                std::set<std::string> ps;
                for (int v : comps[c]) ps.insert(ptab(fam.insert, ex.elements[v]));
                if (ps.size() != 1) {
                    rep.fail(fam.name + "_" + std::to_string(n) + wc.pi + ": component of " +
                             ex.graph.keys[comps[c][0]] + " meets " + std::to_string(ps.size()) + " P-values");
                    continue;
                }
                if (!owner.emplace(*ps.begin(), static_cast<int>(c)).second)
                    rep.fail(fam.name + "_" + std::to_string(n) + wc.pi + ": P-value " + *ps.begin() +
                             " spans two components");
            }
        }
    }
}

void q_morphism(VerifyReport& rep, const Family& fam, const VerifyBounds& b) {
    for (const auto& wc : classes(fam, b.maxlen, true)) {
        for (int n = 1; n <= b.n; ++n) {
            ++rep.cases;
            auto dom = factorization_graph(fam, wc.words, n);
            ShTabCrystal sh{n};
            std::vector<Tableau> images;
            for (const auto& x : dom.elements) images.push_back(insert(fam.insert, x, false).Q);
            auto cod = explore(sh, images);
            auto phi = vertex_map(dom, sh, cod.graph,
                                  [&](const Factorization& x) { return insert(fam.insert, x, false).Q; });
            std::string why;
            if (!quasi_isomorphism_check(phi, dom.graph, cod.graph, &why))
                rep.fail(fam.name + "_" + std::to_string(n) + wc.pi + ": " + why);
            for (const auto& t : images)
                if (t.size() != wc.length) {
                    rep.fail(fam.name + "_" + std::to_string(n) + wc.pi + ": recording tableau of the wrong size");
                    break;
                }
        }
    }
}

// All flavor words of length <= max_len over the default window.
std::vector<Word> flavor_words(const Family& fam, int max_len) {
    std::set<Word> all;
    for (const auto& wc : classes(fam, max_len, false)) all.insert(wc.words.begin(), wc.words.end());
    std::vector<Word> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

// Targets pi for which some deletion of w lies in the class of pi.
std::vector<BumpTarget> bump_targets(const Word& w, Flavor flavor) {
    std::map<std::string, BumpTarget> found;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
        Word d = del(w, i);
        if (flavor == Flavor::reduced) {
            if (is_reduced_word(d)) {
                auto t = BumpTarget::reduced(word_to_permutation(d));
                found.emplace(t.to_string(), t);
            }
        } else if (flavor == Flavor::involution) {
            if (auto z = involution_of_word(d)) {
                auto t = BumpTarget::involution(*z);
                found.emplace(t.to_string(), t);
            }
        } else if (auto z = fpf_of_word(d)) {
            auto t = BumpTarget::fpf_involution(*z);
            found.emplace(t.to_string(), t);
        }
    }
    std::vector<BumpTarget> out;
    for (auto& [k, t] : found) out.push_back(t);
    return out;
}

Word ck0_for(const Family& fam, const Word& w) {
    if (fam.flavor == Flavor::involution) return ck0_O(w);
    if (fam.flavor == Flavor::fpf) return ck0_Sp(w);
    return w;
}

std::string show(const Word& w, const BumpTarget& t) { return "w=" + word_to_string(w) + " pi=" + t.to_string(); }

void bump_properties(VerifyReport& rep, const Family& fam, const VerifyBounds& b) {
    std::map<std::string, std::map<Word, Word>> preimage;
    for (const auto& w : flavor_words(fam, b.maxlen)) {
        for (const auto& t : bump_targets(w, fam.flavor)) {
            ++rep.cases;
            try {
                Word v = bump(w, t);
                if (!is_flavor_reduced(v, fam.flavor)) rep.fail(show(w, t) + ": image leaves the word class");
                auto [it, fresh] = preimage[t.to_string()].emplace(v, w);
                if (!fresh) rep.fail(show(w, t) + ": same image as " + word_to_string(it->second));
                if (descent_set(v) != descent_set(w)) rep.fail(show(w, t) + ": descent set changed");
                for (int i = 1; i + 2 <= static_cast<int>(w.size()); ++i)
                    if (ck(v, i) != bump(ck(w, i), t))
                        rep.fail(show(w, t) + ": does not commute with ck_" + std::to_string(i));
                if (fam.flavor != Flavor::reduced && ck0_for(fam, v) != bump(ck0_for(fam, w), t))
                    rep.fail(show(w, t) + ": does not commute with ck_0");
                if (qtab(fam.insert, singletons(v)) != qtab(fam.insert, singletons(w)))
                    rep.fail(show(w, t) + ": recording tableau changed");
                if (fam.flavor == Flavor::reduced)
                    for (std::size_t k = 0; k < w.size(); ++k)
                        if (v[k] - w[k] < 0 || v[k] - w[k] > 1)
                            rep.fail(show(w, t) + ": a letter moved by more than one");
                for (int n = 1; n <= b.n; ++n) {
                    FactorizationCrystal c(n, fam.kind);
                    for (const auto& x : factorizations(w, n)) {
                        Factorization bx = bump_factorization(x, t);
                        if (!is_increasing_factorization(bx))
                            rep.fail(show(w, t) + ": factor " + fkey(bx) + " is not increasing");
                        for (int i : crystal_indices(n, c.queer)) {
                            auto fx = c.f(x, i);
                            auto fbx = c.f(bx, i);
                            bool ok = fx.has_value() == fbx.has_value() &&
                                      (!fx || bump_factorization(*fx, t) == *fbx);
                            auto ex = c.e(x, i);
                            auto ebx = c.e(bx, i);
                            ok = ok && ex.has_value() == ebx.has_value() &&
                                 (!ex || bump_factorization(*ex, t) == *ebx);
                            if (!ok)
                                rep.fail(show(w, t) + ": does not commute with index " + index_label(i) +
                                         " at " + fkey(x));
                        }
                    }
                }
            } catch (const std::exception& e) {
                rep.fail(show(w, t) + ": " + e.what());
            }
        }
    }
}

void increment_bound(VerifyReport& rep, const Family& fam, int allowed, const VerifyBounds& b) {
    for (const auto& w : flavor_words(fam, b.maxlen))
        for (const auto& t : bump_targets(w, fam.flavor)) {
            ++rep.cases;
            Word v = bump(w, t);
            for (std::size_t k = 0; k < w.size(); ++k)
                if (v[k] < w[k] || v[k] - w[k] > allowed) {
                    rep.fail(show(w, t) + ": bump gives " + word_to_string(v));
                    break;
                }
        }
}

void dual_words(VerifyReport& rep, const Family& fam, const VerifyBounds& b) {
    for (const auto& w : flavor_words(fam, b.maxlen)) {
        Tableau q = insert(fam.insert, singletons(w), false).Q;
        ++rep.cases;
        if (tableau_key(insert(fam.insert, singletons(ck0_for(fam, w)), false).Q) != tableau_key(dual_equiv(q, 0)))
            rep.fail(word_to_string(w) + ": ck_0 does not match d_0");
        for (int i = 1; i + 2 <= static_cast<int>(w.size()); ++i)
            if (insert(fam.insert, singletons(ck(w, i)), false).Q != dual_equiv(q, i))
                rep.fail(word_to_string(w) + ": ck_" + std::to_string(i) + " does not match d_" + std::to_string(i));
    }
}

using OptTab = std::optional<Tableau>;

OptTab chain(const ShTabCrystal& c, const Tableau& t, const std::vector<std::pair<char, int>>& ops) {
    OptTab cur = t;
    // ops apply right to left, as in f_i f_{i+1} e_i e_{i+1}(T)
    for (auto it = ops.rbegin(); it != ops.rend() && cur; ++it)
        cur = it->first == 'f' ? c.f(*cur, it->second) : c.e(*cur, it->second);
    return cur;
}

void dual_tableaux(VerifyReport& rep, const VerifyBounds& b) {
    for (int k = 1; k <= b.boxes; ++k)
        for (const auto& mu : strict_partitions(k, k))
            for (const auto& t : standard_shifted(mu, true)) {
                const std::string tk = tableau_key(t);
                ShTabCrystal c{k};
                auto des = tableau_descents(t);
                auto in_des = [&](int i) { return std::find(des.begin(), des.end(), i) != des.end(); };
                for (int i = 0; i + 2 <= k; ++i) {
                    ++rep.cases;
                    Tableau d = dual_equiv(t, i);
                    if (!is_standard(d)) rep.fail(tk + ": d_" + std::to_string(i) + " is not standard");
                    if (dual_equiv(d, i) != t) rep.fail(tk + ": d_" + std::to_string(i) + " is not an involution");
                }
                for (int i = 1; i < k; ++i) {
                    ++rep.cases;
                    auto f = c.f(t, i);
                    auto e = c.e(t, i);
                    if (in_des(i)) {
                        if (f || e) rep.fail(tk + ": operators of a descent " + std::to_string(i) + " act");
                        continue;
                    }
                    Tableau up = t;
                    Box bi = *box_of(t, i);
                    up.set(bi.first, bi.second, t.at(bi.first, bi.second) + 2);
                    Tableau down = t;
                    Box bj = *box_of(t, i + 1);
                    down.set(bj.first, bj.second, t.at(bj.first, bj.second) - 2);
                    if (f != OptTab(up)) rep.fail(tk + ": f_" + std::to_string(i) + " is not the single increment");
                    if (e != OptTab(down)) rep.fail(tk + ": e_" + std::to_string(i) + " is not the single decrement");
                }
                for (int i = 1; i + 2 <= k; ++i) {
                    bool a = in_des(i), bb = in_des(i + 1);
                    if (a == bb) continue;
                    ++rep.cases;
                    OptTab got = a ? chain(c, t, {{'f', i}, {'f', i + 1}, {'e', i}, {'e', i + 1}})
                                   : chain(c, t, {{'f', i + 1}, {'f', i}, {'e', i + 1}, {'e', i}});
                    if (got != OptTab(dual_equiv(t, i)))
                        rep.fail(tk + ": composite at " + std::to_string(i) + " differs from d_" + std::to_string(i));
                }
            }
}

bool bijective(const std::vector<int>& phi, int size) {
    std::vector<int> seen(size, 0);
    for (int v : phi) {
        if (v < 0 || v >= size || seen[v]) return false;
        seen[v] = 1;
    }
    return static_cast<int>(phi.size()) == size;
}

std::set<Word> word_permutations(Word w) {
    std::set<Word> out;
    std::sort(w.begin(), w.end());
    do out.insert(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

void reduction(VerifyReport& rep, const VerifyBounds& b) {
    const int max_m = std::min(b.maxlen, 5);
    for (int m = 1; m <= max_m; ++m) {
        Word ident(m), evens(m);
        for (int k = 0; k < m; ++k) ident[k] = k + 1, evens[k] = 2 * (k + 1);
        std::set<Word> perm_words = word_permutations(ident);
        std::set<Word> even_words = word_permutations(evens);
        const std::string tag = "m=" + std::to_string(m);

        ++rep.cases;
        std::set<Permutation> sig;
        for (const auto& w : perm_words) sig.insert(*involution_of_word(w));
        auto expect = sigma_set(m);
        if (std::vector<Permutation>(sig.begin(), sig.end()) != expect)
            rep.fail(tag + ": involutions of Perm(m) differ from Sigma(m)");
        std::set<Word> union_words;
        for (const auto& s : expect) {
            auto ws = enumerate_words(s, Flavor::involution);
            union_words.insert(ws.begin(), ws.end());
        }
        if (union_words != perm_words) rep.fail(tag + ": words of Sigma(m) are not Perm(m)");
        ++rep.cases;
        if (enumerate_words(even_involution(m), Flavor::involution) != even_words)
            rep.fail(tag + ": involution words of s_2 s_4 ... are not Even(m)");
        if (enumerate_words(even_fpf_involution(m)) != even_words)
            rep.fail(tag + ": fpf words of " + even_fpf_involution(m).to_string() + " are not Even(m)");

        for (int n = 1; n <= b.n; ++n) {
            const std::string at = tag + " n=" + std::to_string(n);
            auto perms = perm_factorizations(n, m);
            for (const auto& w : perms) {
                ++rep.cases;
                Word inv = inv_map(w);
                auto hm = hm_insert(inv);
                auto o = oeg_insert(w, false);
                auto o2 = oeg_insert(dbl(w), false);
                auto s2 = speg_insert(dbl(w), false);
                if (o.P != hm.Q) rep.fail(at + " " + fkey(w) + ": P^O_EG differs from Q_HM of the inverse");
                if (o.Q != o2.Q || o.Q != s2.Q || o.Q != hm.P)
                    rep.fail(at + " " + fkey(w) + ": recording tableaux differ");
            }
            ++rep.cases;
            FactorizationCrystal oc(n, FactorizationKind::O), sc(n, FactorizationKind::Sp);
            auto dom = explore(oc, perms);
            if (dom.graph.size() != static_cast<int>(perms.size()))
                rep.fail(at + ": Perm_n(m) is not closed under the operators");
            WordCrystal wcry{n};
            auto words = explore(wcry, all_words(n, m));
            auto phi = vertex_map(dom, wcry, words.graph, inv_map);
            std::string why;
            if (!bijective(phi, words.graph.size()) || !morphism_check(phi, dom.graph, words.graph, &why))
                rep.fail(at + ": inv is not an isomorphism " + why);
            auto even = factorizations_of(even_words, n);
            auto eo = explore(oc, even);
            auto es = explore(sc, even);
            if (eo.graph.keys != es.graph.keys || eo.graph.f != es.graph.f || eo.graph.e != es.graph.e)
                rep.fail(at + ": orthogonal and symplectic structures on Even_n(m) differ");
            auto psi = vertex_map(dom, oc, eo.graph, dbl);
            if (!bijective(psi, eo.graph.size()) || !morphism_check(psi, dom.graph, eo.graph, &why))
                rep.fail(at + ": dbl is not an isomorphism " + why);
        }
    }
}

// Every crystal the suite constructs, handed to a visitor.
void each_crystal(const VerifyBounds& b, bool queer_only,
                  const std::function<void(const std::string&, const CrystalGraph&)>& visit) {
    for (int n = 1; n <= b.n; ++n) {
        const std::string rank = "_" + std::to_string(n);
        if (!queer_only)
            for (const auto& wc : classes(gl_family, b.maxlen, true))
                visit("R" + rank + wc.pi, factorization_graph(gl_family, wc.words, n).graph);
        for (const auto& wc : classes(o_family, b.maxlen, true))
            visit("R^O" + rank + wc.pi, factorization_graph(o_family, wc.words, n).graph);
        for (const auto& wc : classes(sp_family, b.maxlen, true))
            visit("R^Sp" + rank + wc.pi, factorization_graph(sp_family, wc.words, n).graph);
        for (int k = 1; k <= b.maxlen; ++k) {
            for (const auto& mu : strict_partitions(k, n)) {
                ShTabCrystal c{n};
                visit("ShTab" + rank + shape_to_string(mu), explore(c, shifted_tableaux(mu, n)).graph);
            }
            if (!queer_only)
                for (const auto& la : partitions(k, n)) {
                    TabCrystal c{n};
                    visit("Tab" + rank + shape_to_string(la), explore(c, plain_tableaux(la, n)).graph);
                }
            WordCrystal c{n};
            visit("W" + rank + "(" + std::to_string(k) + ")", explore(c, all_words(n, k)).graph);
        }
    }
}

void crystal_axioms(VerifyReport& rep, const VerifyBounds& b) {
    each_crystal(b, false, [&](const std::string& name, const CrystalGraph& g) {
        ++rep.cases;
        auto r = axioms_check(g, 3);
        for (const auto& v : r.violations) rep.fail(name + ": " + v);
    });
}

void supersymmetry(VerifyReport& rep, const VerifyBounds& b) {
    each_crystal(b, true, [&](const std::string& name, const CrystalGraph& g) {
        if (g.n < 2) return;
        ++rep.cases;
        Polynomial ch = character(g);
        if (!is_symmetric(ch) || !is_supersymmetric(ch)) rep.fail(name + ": character is not supersymmetric");
        for (const auto& comp : components(g)) {
            ++rep.cases;
            Polynomial c = character(subgraph(g, comp));
            if (!is_supersymmetric(c)) rep.fail(name + ": component of " + g.keys[comp[0]] + " is not supersymmetric");
        }
    });
}

void positivity(VerifyReport& rep, const VerifyBounds& b) {
    auto check = [&](const std::string& name, const Polynomial& F, const CrystalGraph& g, Basis basis) {
        ++rep.cases;
        try {
            Expansion ex = expand(F, basis);
            for (const auto& [shape, c] : ex)
                if (c < 0) rep.fail(name + ": negative coefficient at " + shape_to_string(shape));
            Expansion hw = highest_weight_counts(g);
            if (ex != hw)
                rep.fail(name + ": expansion " + expansion_to_string(ex, basis) + " but highest weights give " +
                         expansion_to_string(hw, basis));
        } catch (const std::exception& e) {
            rep.fail(name + ": " + e.what());
        }
    };
    for (const auto& p : permutation_corpus(b.maxlen, permutation_window(b.maxlen), true)) {
        int n = p.length();
        auto g = factorization_graph(gl_family, enumerate_words(p, Flavor::reduced), n).graph;
        check("F" + p.to_string(), stanley_poly(p, Flavor::reduced, n), g, Basis::schur);
    }
    for (const auto& p : involution_corpus(b.maxlen, permutation_window(b.maxlen), true)) {
        int n = length_invariants(p).ell_flavor;
        auto g = factorization_graph(o_family, enumerate_words(p, Flavor::involution), n).graph;
        check("F^O" + p.to_string(), stanley_poly(p, Flavor::involution, n), g, Basis::schurP);
    }
    for (const auto& p : fpf_corpus(b.maxlen, fpf_window(b.maxlen), true)) {
        int n = length_invariants(p).ell_flavor;
        auto g = factorization_graph(sp_family, enumerate_words(p), n).graph;
        check("F^Sp" + p.to_string(), stanley_poly(p, n), g, Basis::schurP);
    }
}

void check_bounds(const VerifyBounds& b) {
    if (b.maxlen < 1 || b.maxlen > max_verify_len) throw input_error("--maxlen must be in [1, 7]");
    if (b.n < 1 || b.n > max_verify_n) throw input_error("--n must be in [1, 5]");
    if (b.boxes < 1 || b.boxes > max_verify_boxes) throw input_error("--boxes must be in [1, 9]");
}

}  // namespace

VerifyReport run_verify(const std::string& target, const VerifyBounds& bounds) {
    check_bounds(bounds);
    VerifyReport rep;
    rep.target = target;
    if (target == "crystal-axioms") crystal_axioms(rep, bounds);
    else if (target == "eg-fibers") fibers(rep, gl_family, bounds);
    else if (target == "oeg-fibers") fibers(rep, o_family, bounds);
    else if (target == "speg-fibers") fibers(rep, sp_family, bounds);
    else if (target == "q-morphism-O") q_morphism(rep, o_family, bounds);
    else if (target == "q-morphism-Sp") q_morphism(rep, sp_family, bounds);
    else if (target == "bump-properties") {
        bump_properties(rep, gl_family, bounds);
        bump_properties(rep, o_family, bounds);
        bump_properties(rep, sp_family, bounds);
    } else if (target == "dual-equivalence") {
        dual_words(rep, o_family, bounds);
        dual_words(rep, sp_family, bounds);
        dual_tableaux(rep, bounds);
    } else if (target == "reduction-lemma") reduction(rep, bounds);
    else if (target == "supersymmetry") supersymmetry(rep, bounds);
    else if (target == "schurP-positivity") positivity(rep, bounds);
    else if (target == "once-bound") increment_bound(rep, gl_family, 1, bounds);
    else if (target == "conjecture-ib-bound") {
        rep.conjecture = true;
        increment_bound(rep, o_family, 1, bounds);
    } else if (target == "conjecture-fb-bound") {
        rep.conjecture = true;
        increment_bound(rep, sp_family, 2, bounds);
    } else {
        throw input_error("unknown verify target '" + target + "'");
    }
    return rep;
}

}  // namespace qcrys

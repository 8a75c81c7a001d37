#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "qcrys/crystal.hpp"
#include "qcrys/error.hpp"
#include "reference.hpp"

using namespace qcrys;

namespace {

Factorization fac(const std::string& s) {
    Factorization f;
    Word cur;
    for (char c : s) {
        if (c == '(') cur.clear();
        else if (c == ')') f.push_back(cur);
        else cur.push_back(c - '0');
    }
    return f;
}

Tableau q_of(InsertKind kind, const Factorization& f) { return insert(kind, f, false).Q; }

// Removes one f-edge together with its matching e-edge.
CrystalGraph without_edge(CrystalGraph g, const Edge& e) {
    int s = slot_of(e.index);
    g.f[e.from][s] = -1;
    g.e[e.to][s] = -1;
    return g;
}

}  // namespace

TEST_CASE("pairing of increasing words") {
    auto p = pair_letters({1, 3, 4, 5, 8, 10, 11}, {2, 6, 9, 12, 13});
    CHECK(std::set<std::pair<int, int>>(p.begin(), p.end()) ==
          std::set<std::pair<int, int>>{{10, 9}, {8, 6}, {3, 2}});
    // Every pair of subsets of [7] against the iterative description.
    for (int x = 0; x < 128; ++x)
        for (int y = 0; y < 128; ++y) {
            Word a, b;
            for (int k = 0; k < 7; ++k) {
                if (x >> k & 1) a.push_back(k + 1);
                if (y >> k & 1) b.push_back(k + 1);
            }
            auto got = pair_letters(a, b);
            CHECK(std::set<std::pair<int, int>>(got.begin(), got.end()) == oracle::pair_recursive(a, b));
        }
}

TEST_CASE("word crystal example") {
    WordCrystal c{3};
    Word w = {1, 2, 2, 3, 3, 1, 3, 2, 1, 2};
    CHECK(c.f(w, 2) == Word{1, 2, 3, 3, 3, 1, 3, 2, 1, 2});
    CHECK(c.e(w, 2) == Word{1, 2, 2, 2, 3, 1, 3, 2, 1, 2});
    CHECK(c.f(w, QBAR) == Word{2, 2, 2, 3, 3, 1, 3, 2, 1, 2});
    CHECK_FALSE(c.e(w, QBAR).has_value());
    CHECK(c.weight(w) == std::vector<int>{3, 4, 3});
}

TEST_CASE("word crystals satisfy the axioms and are normal") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 4; ++m)
            for (bool queer : {false, true}) {
                WordCrystal c{n, queer};
                auto g = explore(c, all_words(n, m)).graph;
                CHECK(g.size() == static_cast<int>(all_words(n, m).size()));
                auto ax = axioms_check(g);
                CHECK_MESSAGE(ax.ok(), (ax.ok() ? "" : ax.violations.front()));
            }
}

TEST_CASE("shifted tableau operators agree with mixed insertion") {
    // P_HM carries the word crystal onto the tableau crystal and Q_HM is
    // constant on components.
    for (int n = 2; n <= 3; ++n) {
        WordCrystal wc{n};
        ShTabCrystal tc{n};
        for (int m = 1; m <= 5; ++m)
            for (const auto& w : all_words(n, m)) {
                auto r = hm_insert(w);
                for (int i : crystal_indices(n, true)) {
                    auto fw = wc.f(w, i);
                    auto ft = tc.f(r.P, i);
                    REQUIRE(fw.has_value() == ft.has_value());
                    if (fw) {
                        auto rf = hm_insert(*fw);
                        CHECK(rf.P == *ft);
                        CHECK(rf.Q == r.Q);
                    }
                    auto ew = wc.e(w, i);
                    auto et = tc.e(r.P, i);
                    REQUIRE(ew.has_value() == et.has_value());
                    if (ew) CHECK(hm_insert(*ew).P == *et);
                }
            }
    }
}

TEST_CASE("tableau crystals have Schur and Schur-P characters") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k) {
            for (const auto& mu : strict_partitions(k, n)) {
                auto g = explore(ShTabCrystal{n}, shifted_tableaux(mu, n)).graph;
                CHECK(axioms_check(g).ok());
                CHECK(components(g).size() == 1);
                auto top = queer_highest_weights(g);
                REQUIRE(top.size() == 1);
                auto wt = g.weights[top[0]];
                while (!wt.empty() && wt.back() == 0) wt.pop_back();
                CHECK(wt == mu);
            }
            for (const auto& lambda : partitions(k, n)) {
                auto g = explore(TabCrystal{n}, plain_tableaux(lambda, n)).graph;
                CHECK(axioms_check(g).ok());
                auto hw = highest_weights(g);
                REQUIRE(hw.size() == 1);
                auto wt = g.weights[hw[0]];
                while (!wt.empty() && wt.back() == 0) wt.pop_back();
                CHECK(wt == lambda);
            }
        }
}

TEST_CASE("reference graphs") {
    auto ref = reference::load_graphs();
    REQUIRE(ref.size() == 3);

    auto sh = explore(ShTabCrystal{3}, shifted_tableaux({3, 1}, 3));
    FactorizationCrystal oc(3, FactorizationKind::O);
    auto o_words = enumerate_words(Permutation::from_cycles({{1, 3}, {2, 5}}), Flavor::involution);
    auto ox = explore(oc, factorizations_of(o_words, 3));
    FactorizationCrystal sc(3, FactorizationKind::Sp);
    auto s_words = enumerate_words(FpfInvolution::from_cycles({{1, 4}, {2, 6}, {3, 5}}));
    auto sx = explore(sc, factorizations_of(s_words, 3));

    for (const auto* g : {&sh.graph, &ox.graph, &sx.graph}) {
        CHECK(g->size() == 24);
        CHECK(g->edges().size() == 38);
        CHECK(axioms_check(*g).ok());
        CHECK(components(*g).size() == 1);
    }
    CHECK(reference::edge_set(sh.graph) == ref["shtab"]);
    CHECK(reference::edge_set(ox.graph) == ref["ortho"]);
    CHECK(reference::edge_set(sx.graph) == ref["sympl"]);

    CHECK(ox.graph.find("(134)(2)()") >= 0);
    CHECK(sx.graph.find("(245)(3)()") >= 0);
    CHECK(oc.f(fac("(134)(2)()"), 1) == fac("(13)(24)()"));
    CHECK(oc.f(fac("(134)(2)()"), QBAR) == fac("(34)(12)()"));
    CHECK(sc.f(fac("(245)(3)()"), QBAR) == fac("(45)(23)()"));

    CHECK(iso_check(sh.graph, ox.graph));
    CHECK(iso_check(sh.graph, sx.graph));
    CHECK(iso_check(ox.graph, sx.graph));
    for (const auto* g : {&sh.graph, &ox.graph, &sx.graph}) {
        auto top = queer_highest_weights(*g);
        REQUIRE(top.size() == 1);
        CHECK(g->weights[top[0]] == std::vector<int>{3, 1, 0});
    }

    auto phi_o = vertex_map(ox, ShTabCrystal{3}, sh.graph, [](const Factorization& f) { return q_of(InsertKind::oeg, f); });
    auto phi_s = vertex_map(sx, ShTabCrystal{3}, sh.graph, [](const Factorization& f) { return q_of(InsertKind::speg, f); });
    std::string why;
    CHECK_MESSAGE(quasi_isomorphism_check(phi_o, ox.graph, sh.graph, &why), why);
    CHECK_MESSAGE(quasi_isomorphism_check(phi_s, sx.graph, sh.graph, &why), why);
}

TEST_CASE("negative controls") {
    auto sh = explore(ShTabCrystal{3}, shifted_tableaux({3, 1}, 3));
    for (const auto& e : sh.graph.edges()) {
        auto broken = without_edge(sh.graph, e);
        CHECK_FALSE(axioms_check(broken).ok());
    }
    FactorizationCrystal oc(3, FactorizationKind::O);
    auto ox = explore(oc, factorizations_of(enumerate_words(Permutation::from_cycles({{1, 3}, {2, 5}}), Flavor::involution), 3));
    auto phi = vertex_map(ox, ShTabCrystal{3}, sh.graph, [](const Factorization& f) { return q_of(InsertKind::oeg, f); });
    // Swap the images of two vertices of equal weight.
    bool swapped = false;
    for (int a = 0; a < ox.graph.size() && !swapped; ++a)
        for (int b = a + 1; b < ox.graph.size() && !swapped; ++b)
            if (ox.graph.weights[a] == ox.graph.weights[b]) {
                std::swap(phi[a], phi[b]);
                swapped = true;
            }
    REQUIRE(swapped);
    CHECK_FALSE(quasi_isomorphism_check(phi, ox.graph, sh.graph));
    auto other = explore(ShTabCrystal{3}, shifted_tableaux({4}, 3)).graph;
    CHECK_FALSE(iso_check(sh.graph, other));
}

TEST_CASE("recording tableaux are quasi-isomorphisms") {
    const std::vector<Permutation> inv = {Permutation::from_cycles({{1, 4}, {2, 3}}),
                                          Permutation::from_cycles({{1, 2}, {3, 6}, {4, 5}}),
                                          Permutation::from_cycles({{1, 5}})};
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : inv) {
            FactorizationCrystal c(n, FactorizationKind::O);
            auto x = explore(c, factorizations_of(enumerate_words(p, Flavor::involution), n));
            CHECK(axioms_check(x.graph).ok());
            std::vector<Tableau> images;
            for (const auto& f : x.elements) images.push_back(q_of(InsertKind::oeg, f));
            auto t = explore(ShTabCrystal{n}, images);
            auto phi = vertex_map(x, ShTabCrystal{n}, t.graph, [](const Factorization& f) { return q_of(InsertKind::oeg, f); });
            CHECK(quasi_isomorphism_check(phi, x.graph, t.graph));
        }
        for (const auto& p : {Permutation::from_cycles({{1, 3, 2}}), Permutation::from_cycles({{1, 4}, {2, 5}})}) {
            FactorizationCrystal c(n, FactorizationKind::gl);
            auto x = explore(c, factorizations_of(enumerate_words(p, Flavor::reduced), n));
            CHECK(axioms_check(x.graph).ok());
            std::vector<Tableau> images;
            for (const auto& f : x.elements) images.push_back(q_of(InsertKind::eg, f));
            auto t = explore(TabCrystal{n}, images);
            auto phi = vertex_map(x, TabCrystal{n}, t.graph, [](const Factorization& f) { return q_of(InsertKind::eg, f); });
            CHECK(quasi_isomorphism_check(phi, x.graph, t.graph));
        }
    }
}

TEST_CASE("reduction maps") {
    CHECK(inv_map({{2, 4, 5}, {}, {1}, {3}}) == Word{3, 1, 4, 1, 1});
    CHECK(dbl({{1, 3}, {}}) == Factorization{{2, 6}, {}});
    CHECK(perm_factorizations(2, 2).size() == 4);  // (12)(), (1)(2), ()(12), (2)(1)
    Factorization w = {{}, {3, 6}, {1, 2, 4, 5}};
    Word inv = inv_map(w);
    CHECK(inv == Word{3, 3, 2, 3, 3, 2});
    auto hm = hm_insert(inv);
    auto o = oeg_insert(w);
    CHECK(tableau_key(o.P) == "1,2,4,5/3,6");
    CHECK(tableau_key(o.Q) == "2,2,3',3/3,3");
    CHECK(o.P == hm.Q);
    CHECK(o.Q == hm.P);
    CHECK(oeg_insert(dbl(w)).Q == o.Q);
    CHECK(speg_insert(dbl(w)).Q == o.Q);
}

TEST_CASE("exports and caps") {
    auto g = explore(ShTabCrystal{2}, shifted_tableaux({2}, 2)).graph;
    std::string dot = to_dot(g, "demo");
    CHECK(dot.rfind("digraph \"demo\" {", 0) == 0);
    CHECK(dot.find("wt") != std::string::npos);
    auto j = nlohmann::json::parse(to_json(g));
    CHECK(j.is_object());
    CHECK_THROWS_AS(explore(WordCrystal{3}, all_words(3, 4), 10), resource_error);
    CHECK(crystal_indices(3, true) == std::vector<int>{QBAR, 1, 2});
    CHECK(index_label(QBAR) == "1bar");
}

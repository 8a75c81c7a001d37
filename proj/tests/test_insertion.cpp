#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "qcrys/error.hpp"
#include "qcrys/insertion.hpp"

using namespace qcrys;

namespace {

Permutation cyc(std::vector<std::vector<int>> c) { return Permutation::from_cycles(c); }

std::string key(const Tableau& t) { return tableau_key(t); }

bool strictly_increasing(const Word& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k] <= w[k - 1]) return false;
    return true;
}

}  // namespace

TEST_CASE("Edelman-Greene insertion example") {
    auto r = eg_insert({{4}, {2, 3}, {2}});
    CHECK(key(r.P) == "2,3/3/4");
    CHECK(key(r.Q) == "1,2/2/3");
    CHECK_FALSE(r.P.shifted);
    auto one = eg_insert({{5}});
    CHECK(key(one.P) == "5");
    CHECK(key(one.Q) == "1");
    CHECK_THROWS_AS(eg_insert({{1}, {1}}), input_error);
    CHECK_THROWS_AS(eg_insert({{2, 1}}), input_error);
}

TEST_CASE("orthogonal insertion example and its intermediate tableaux") {
    auto r = oeg_insert({{4}, {2, 3}, {2}, {1}});
    CHECK(key(r.P) == "1,2,3,4/4");
    CHECK(key(r.Q) == "1,2',3',4'/2");
    const std::vector<std::string> chain = {"4", "2,4", "2,3/4", "2,3,4/4", "1,2,3,4/4"};
    Word w = {4, 2, 3, 2, 1};
    for (std::size_t k = 1; k <= w.size(); ++k)
        CHECK(key(oeg_insert(singletons(Word(w.begin(), w.begin() + k))).P) == chain[k - 1]);
    CHECK_THROWS_AS(oeg_insert({{2}, {2}}), input_error);
}

TEST_CASE("symplectic insertion example") {
    auto r = speg_insert({{4}, {2, 3}, {1, 2}});
    CHECK(key(r.P) == "2,3,4/4,5");
    CHECK(key(r.Q) == "1,2',3'/2,3'");
    CHECK(key(speg_insert({{2}}).P) == "2");
    CHECK_THROWS_AS(speg_insert({{1}}), input_error);
    auto back = invert_insertion(r.P, r.Q, InsertKind::speg);
    REQUIRE(back.has_value());
    CHECK(*back == Factorization{{4}, {2, 3}, {1, 2}});
}

TEST_CASE("mixed insertion example") {
    auto r = hm_insert({3, 3, 2, 3, 3, 2});
    CHECK(key(r.P) == "2,2,3',3/3,3");
    CHECK(key(r.Q) == "1,2,4,5/3,6");
    CHECK(key(hm_insert({1}).P) == "1");
    CHECK(hm_insert({}).P.empty());
    CHECK_THROWS_AS(hm_insert({0}), input_error);
}

TEST_CASE("mixed insertion is a bijection on short words") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 4; ++m) {
            std::map<std::pair<std::string, std::string>, Word> seen;
            for (const auto& w : oracle::words(m, n)) {
                auto r = hm_insert(w);
                CHECK(r.P.shape() == r.Q.shape());
                CHECK(is_semistandard(r.P));
                CHECK(is_standard(r.Q));
                std::vector<int> counts(n, 0);
                for (int a : w) ++counts[a - 1];
                CHECK(weight(r.P, n) == counts);
                CHECK(seen.emplace(std::make_pair(key(r.P), key(r.Q)), w).second);
                auto back = invert_insertion(r.P, r.Q, InsertKind::hm);
                REQUIRE(back.has_value());
                CHECK(concat(*back) == w);
            }
        }
}

TEST_CASE("insertion invariants on involution and fpf word classes") {
    const std::vector<Permutation> involutions = {cyc({{1, 3}, {2, 5}}), cyc({{1, 4}}), cyc({{1, 5}, {2, 4}}),
                                                  cyc({{1, 2}, {3, 6}, {4, 5}})};
    for (const auto& p : involutions)
        for (int n = 1; n <= 3; ++n) {
            std::set<std::pair<std::string, std::string>> pairs;
            for (const auto& w : enumerate_words(p, Flavor::involution))
                for (const auto& f : factorizations(w, n)) {
                    auto r = oeg_insert(f);
                    CHECK(r.P.shape() == r.Q.shape());
                    CHECK(is_increasing(r.P));
                    CHECK(is_semistandard(r.Q));
                    CHECK(word_in_class(row_word(r.P), p, Flavor::involution));
                    CHECK(pairs.insert({key(r.P), key(r.Q)}).second);
                    bool singles = true;
                    for (const auto& x : f) singles = singles && x.size() == 1;
                    CHECK(is_standard(r.Q) == (singles && static_cast<int>(f.size()) == static_cast<int>(w.size())));
                    auto back = invert_insertion(r.P, r.Q, InsertKind::oeg, n);
                    REQUIRE(back.has_value());
                    CHECK(*back == f);
                }
        }
    for (const auto& p : {FpfInvolution::from_cycles({{1, 4}, {2, 6}, {3, 5}}),
                          FpfInvolution::from_cycles({{1, 2}, {3, 6}, {4, 5}}),
                          FpfInvolution::from_cycles({{1, 6}, {2, 5}, {3, 4}})})
        for (int n = 1; n <= 3; ++n) {
            std::set<std::pair<std::string, std::string>> pairs;
            for (const auto& w : enumerate_words(p))
                for (const auto& f : factorizations(w, n)) {
                    auto r = speg_insert(f);
                    CHECK(r.P.shape() == r.Q.shape());
                    CHECK(is_semistandard(r.Q));
                    CHECK(word_in_class(row_word(r.P), p));
                    CHECK(pairs.insert({key(r.P), key(r.Q)}).second);
                    auto back = invert_insertion(r.P, r.Q, InsertKind::speg, n);
                    REQUIRE(back.has_value());
                    CHECK(*back == f);
                }
        }
}

TEST_CASE("Edelman-Greene insertion is a bijection onto pairs") {
    for (const auto& p : {cyc({{1, 3}, {2, 5}}), cyc({{1, 4, 2}}), cyc({{1, 5}})})
        for (int n = 1; n <= 3; ++n) {
            std::set<std::pair<std::string, std::string>> pairs;
            for (const auto& w : enumerate_words(p, Flavor::reduced))
                for (const auto& f : factorizations(w, n)) {
                    auto r = eg_insert(f);
                    CHECK(r.P.shape() == r.Q.shape());
                    CHECK(is_increasing(r.P));
                    CHECK(is_semistandard(r.Q));
                    CHECK(word_in_class(row_word(r.P), p, Flavor::reduced));
                    CHECK(equivalence_class(row_word(r.P), Relation::K).count(w));
                    CHECK(pairs.insert({key(r.P), key(r.Q)}).second);
                    auto back = invert_insertion(r.P, r.Q, InsertKind::eg, n);
                    REQUIRE(back.has_value());
                    CHECK(*back == f);
                }
        }
}

TEST_CASE("symplectic diagonal rule only fires on even letters") {
    for (int len = 1; len <= 6; ++len)
        for (const auto& w : oracle::words(len, 6)) {
            if (!is_fpf_involution_word(w)) continue;
            auto r = speg_insert(singletons(w));
            for (const auto& step : r.trace)
                for (auto [x, y] : step.diagonal_hits) CHECK(y % 2 == 0);
        }
}

TEST_CASE("descent sets survive orthogonal and symplectic insertion") {
    for (int len = 1; len <= 5; ++len)
        for (const auto& w : oracle::words(len, 5)) {
            if (is_involution_word(w)) CHECK(tableau_descents(oeg_insert(singletons(w)).Q) == descent_set(w));
            if (is_fpf_involution_word(w)) CHECK(tableau_descents(speg_insert(singletons(w)).Q) == descent_set(w));
        }
}

TEST_CASE("increments preserve recording tableaux") {
    for (int len = 1; len <= 5; ++len) {
        auto all = oracle::words(len, 5);
        std::vector<Word> red, inv;
        for (const auto& w : all) {
            if (is_reduced_word(w)) red.push_back(w);
            if (is_involution_word(w)) inv.push_back(w);
        }
        auto check = [](const std::vector<Word>& ws, InsertKind kind) {
            std::set<Word> pool(ws.begin(), ws.end());
            for (const auto& w : ws)
                for (int mask = 1; mask < (1 << w.size()); ++mask) {
                    Word v = w;
                    for (std::size_t k = 0; k < w.size(); ++k) v[k] += (mask >> k) & 1;
                    if (!pool.count(v)) continue;
                    CHECK(insert(kind, singletons(v)).Q == insert(kind, singletons(w)).Q);
                }
        };
        check(red, InsertKind::eg);
        check(inv, InsertKind::oeg);
    }
}

TEST_CASE("factorization helpers") {
    CHECK(concat({{4}, {2, 3}, {}}) == Word{4, 2, 3});
    CHECK(factorizations({4, 2, 3}, 2) == std::vector<Factorization>{{{4}, {2, 3}}});
    for (const auto& f : factorizations({1, 3, 2, 4}, 3)) {
        CHECK(f.size() == 3);
        for (const auto& x : f) CHECK(strictly_increasing(x));
    }
    CHECK(split({1, 2, 3}, {1, 0, 2}) == Factorization{{1}, {}, {2, 3}});
    CHECK(factorization_key({{4}, {2, 3}, {}}) == "(4)(23)()");
    CHECK(invert_insertion(Tableau{true, {}}, Tableau{true, {}}, InsertKind::oeg) == Factorization{});
}

#include <doctest.h>

#include "oracles.hpp"
#include "qcrys/error.hpp"
#include "qcrys/tableaux.hpp"

using namespace qcrys;

namespace {

Tableau shifted(const std::string& s) { return parse_tableau(s, true); }
Tableau plain(const std::string& s) { return parse_tableau(s, false); }

// Standard shifted tableaux of shape mu, counted by removing outer corners.
long long count_standard(std::vector<int> mu) {
    int total = 0;
    for (int r : mu) total += r;
    if (total == 0) return 1;
    long long c = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        bool corner = k + 1 == mu.size() ? true : mu[k + 1] < mu[k] - 1;
        if (!corner) continue;
        auto nu = mu;
        if (--nu[k] == 0) nu.pop_back();
        c += count_standard(nu);
    }
    return c;
}

// i such that i + 1 comes before i in the word.
std::vector<int> inverse_descents(const Word& w) {
    std::vector<int> pos(w.size() + 2, 0);
    for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = static_cast<int>(k);
    std::vector<int> out;
    for (int i = 1; i < static_cast<int>(w.size()); ++i)
        if (pos[i + 1] < pos[i]) out.push_back(i);
    return out;
}

long long coefficient_sum(const Polynomial& p) {
    long long s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

}  // namespace

TEST_CASE("entries use the doubled encoding") {
    CHECK(unprimed(3) == 6);
    CHECK(primed(3) == 5);
    CHECK(value_of(5) == 3);
    CHECK(toggle_prime(5) == 6);
    CHECK(entry_to_string(5) == "3'");
    CHECK(entry_from_string("3'") == 5);
    CHECK_THROWS_AS(entry_from_string("x"), input_error);
}

TEST_CASE("parse and render") {
    Tableau t = shifted("1 2' 4' 5 9/3 6' 8/7");
    CHECK(t.shape() == std::vector<int>{5, 3, 1});
    CHECK(t.at(2, 3) == primed(6));
    CHECK(tableau_key(t) == "1,2',4',5,9/3,6',8/7");
    CHECK(parse_tableau(tableau_key(t), true) == t);
    CHECK(plain("224/34").rows == std::vector<std::vector<int>>{{4, 4, 8}, {6, 8}});
    CHECK_THROWS_AS(parse_tableau("1 2/1 2 3", false), input_error);
}

TEST_CASE("tableau predicates") {
    Tableau a = plain("2 2 4/3 4"), b = plain("2 3 4/3 4"), c = plain("1 2 4/3 5");
    CHECK(is_semistandard(a));
    CHECK_FALSE(is_increasing(a));
    CHECK(is_increasing(b));
    CHECK_FALSE(is_standard(b));
    CHECK(is_standard(c));
    Tableau one = plain("1");
    CHECK(is_semistandard(one));
    CHECK(is_increasing(one));
    CHECK(is_standard(one));
    CHECK_FALSE(is_semistandard(shifted("2' 3")));
}

TEST_CASE("reading words") {
    CHECK(row_word(plain("2 2 4/3 4")) == Word{3, 4, 2, 2, 4});
    CHECK(row_word(plain("2 3 4/3 4")) == Word{3, 4, 2, 3, 4});
    CHECK(row_word(plain("1 2 4/3 5")) == Word{3, 5, 1, 2, 4});
    CHECK(col_word(plain("2 2 4/3 4")) == Word{3, 2, 4, 2, 4});
    CHECK(col_word(plain("1 2 4/3 5")) == Word{3, 1, 5, 2, 4});
    Tableau t = shifted("1 2' 4' 5 9/3 6' 8/7");
    CHECK(shword(t) == Word{4, 6, 7, 2, 3, 8, 1, 5, 9});
    CHECK(shword(Tableau{true, {}}).empty());
}

TEST_CASE("tableau descents") {
    Tableau t = shifted("1 2' 4' 5 9/3 6' 8/7");
    CHECK(tableau_descents(t) == std::vector<int>{1, 3, 5});
    CHECK(tableau_descents_by_cases(t) == std::vector<int>{1, 3, 5});
    CHECK(tableau_descents(shifted("1")).empty());
    for (int k = 1; k <= 6; ++k)
        for (const auto& mu : strict_partitions(k, k))
            for (const auto& s : standard_shifted(mu, true)) {
                CAPTURE(tableau_key(s));
                CHECK(tableau_descents(s) == tableau_descents_by_cases(s));
                CHECK(tableau_descents(s) == inverse_descents(shword(s)));
            }
    CHECK_THROWS_AS(tableau_descents(shifted("1 1")), input_error);
}

TEST_CASE("weights") {
    CHECK(weight(shifted("2 2 4'/3 4"), 5) == std::vector<int>{0, 2, 1, 2, 0});
    CHECK(weight(Tableau{true, {}}, 3) == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(weight(shifted("1 4"), 3), input_error);
}

TEST_CASE("enumeration matches Schur and Schur-P characters") {
    CHECK(shifted_tableaux({3, 1}, 3).size() == 24);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 5; ++m) {
            for (const auto& lambda : partitions(m, n)) {
                Polynomial ch(n);
                for (const auto& t : plain_tableaux(lambda, n)) {
                    CHECK(is_semistandard(t));
                    CHECK(weight(t, n).size() == static_cast<std::size_t>(n));
                    ch.add_term(weight(t, n), 1);
                }
                CHECK(ch == oracle::schur(lambda, n));
            }
            for (const auto& mu : strict_partitions(m, n)) {
                Polynomial ch(n);
                for (const auto& t : shifted_tableaux(mu, n)) {
                    CHECK(is_semistandard(t));
                    ch.add_term(weight(t, n), 1);
                }
                CHECK(ch == oracle::schurP(mu, n));
            }
        }
}

TEST_CASE("standard shifted tableaux counts") {
    for (int k = 1; k <= 7; ++k)
        for (const auto& mu : strict_partitions(k, k)) {
            long long g = count_standard(mu);
            CHECK(static_cast<long long>(standard_shifted(mu, false).size()) == g);
            long long diag_free = 1LL << (k - static_cast<int>(mu.size()));
            CHECK(static_cast<long long>(standard_shifted(mu, true).size()) == g * diag_free);
            for (const auto& t : standard_shifted(mu, true)) CHECK(is_standard(t));
        }
    CHECK(coefficient_sum(oracle::schurP({3, 1}, 3)) == 24);
}

TEST_CASE("star and dual equivalence operators") {
    Tableau t = shifted("1 2' 4' 5 9/3 6' 8/7");
    for (int i = 1; i < 9; ++i) {
        Tableau s = star_op(t, i);
        CHECK(is_standard(s));
        CHECK(star_op(s, i) == t);
    }
    CHECK_THROWS_AS(star_op(t, 9), input_error);
    for (int k = 1; k <= 7; ++k)
        for (const auto& mu : strict_partitions(k, k))
            for (const auto& s : standard_shifted(mu, true))
                for (int i = 0; i + 2 <= k; ++i) {
                    Tableau d = dual_equiv(s, i);
                    CHECK(is_standard(d));
                    CHECK(d.shape() == s.shape());
                    CHECK(dual_equiv(d, i) == s);
                }
    // The final dual equivalence example.
    Tableau q = shifted("1 2 3/4");
    CHECK(tableau_key(dual_equiv(q, 0)) == "1,2',3/4");
    CHECK(tableau_key(dual_equiv(q, 2)) == "1,2,4/3");
}

TEST_CASE("box lookup") {
    Tableau t = shifted("1 2' 4' 5 9/3 6' 8/7");
    CHECK(box_of(t, 7) == Box{3, 3});
    CHECK(box_of(t, 6) == Box{2, 3});
    CHECK_FALSE(box_of(t, 10).has_value());
}

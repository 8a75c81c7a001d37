#include <doctest.h>

#include "oracles.hpp"
#include "qcrys/bumping.hpp"
#include "qcrys/error.hpp"
#include "qcrys/verify.hpp"

using namespace qcrys;

namespace {

Permutation cyc(std::vector<std::vector<int>> c) { return Permutation::from_cycles(c); }

std::vector<MarkedWord> tail(const BumpTrace& t) { return {t.chain.begin() + 1, t.chain.end()}; }

Word replay(Word w, const std::vector<Permutation>& atoms) {
    for (const auto& a : atoms) w = bump(w, BumpTarget::reduced(a));
    return w;
}

}  // namespace

TEST_CASE("deletion") {
    CHECK(del({2, 1, 3, 4}, 2) == Word{2, 3, 4});
    CHECK(del({7}, 1).empty());
    CHECK_THROWS_AS(del({1, 2}, 3), input_error);
    CHECK_THROWS_AS(del({1, 2}, 0), input_error);
}

TEST_CASE("involution bump example") {
    auto t = BumpTarget::involution(cyc({{2, 5}}));
    Word w = {2, 1, 3, 4};
    CHECK(is_marked(w, 2, t));
    CHECK(word_in_class({2, 3, 4}, cyc({{2, 5}}), Flavor::involution));
    auto tr = bump_trace(w, t);
    CHECK(tr.chain.front() == MarkedWord{w, 2});
    CHECK(tail(tr) == std::vector<MarkedWord>{{{2, 2, 3, 4}, 2}, {{3, 2, 3, 4}, 1}, {{3, 2, 4, 4}, 3}, {{3, 2, 4, 5}, 4}});
    CHECK(tr.result == Word{3, 2, 4, 5});
    CHECK(companion_index({3, 2, 3, 4}, 1, t) == 3);
    CHECK(companion_index({2, 2, 3, 4}, 2, t) == 1);
    CHECK(decompose_bump(w, t) == std::vector<Permutation>{word_to_permutation({2, 3, 4}), word_to_permutation({3, 2, 4})});
    CHECK(replay(w, decompose_bump(w, t)) == tr.result);
    CHECK_THROWS_AS(BumpTarget::involution(cyc({{1, 2, 3}})), input_error);
}

TEST_CASE("fpf bump example") {
    auto pi = FpfInvolution::from_cycles({{1, 2}, {3, 6}, {4, 5}});
    auto t = BumpTarget::fpf_involution(pi);
    Word w = {2, 4, 3};
    auto tr = bump_trace(w, t);
    std::vector<Word> words;
    for (const auto& m : tail(tr)) words.push_back(m.word);
    CHECK(words == std::vector<Word>{{3, 4, 3}, {4, 4, 3}, {4, 5, 3}, {4, 5, 4}, {4, 5, 5}, {4, 6, 5}});
    CHECK(tr.result == Word{4, 6, 5});
    CHECK(bump(w, t) == Word{4, 6, 5});

    const Permutation a = word_to_permutation({4, 3}), b = word_to_permutation({4, 5});
    auto seq = decompose_bump(w, t);
    CHECK(seq == std::vector<Permutation>{a, a, b, b});
    CHECK(replay(w, seq) == Word{4, 6, 5});
    // Three copies of s4s3 followed by s4s5 stall at 463.
    CHECK(replay(w, {a, a, a, b}) == Word{4, 6, 3});
}

TEST_CASE("semi-reduced words") {
    auto pi = fpf_of_word({4});
    REQUIRE(pi.has_value());
    auto s = BumpTarget::fpf_involution(*pi);
    CHECK(push_step({{4, 2}, 2}, s) == MarkedWord{{4, 3}, 2});
    MarkedWord m{{2, 4}, 1};
    for (int k = 0; k < 3; ++k) m = push_step(m, s);
    CHECK(m == MarkedWord{{4, 5}, 2});
    // Words reached along the example chain that are terminal.
    auto t = BumpTarget::fpf_involution(FpfInvolution::from_cycles({{1, 2}, {3, 6}, {4, 5}}));
    auto tr = bump_trace({2, 4, 3}, t);
    for (const auto& m : tr.chain) {
        bool semi = is_semi_reduced(m.word, t.fpf);
        if (semi) CHECK_FALSE(is_fpf_involution_word(m.word));
    }
}

TEST_CASE("ordinary bumps") {
    auto t = BumpTarget::reduced(word_to_permutation({3, 4}));
    // No deletion of 12 lies in R(s3s4).
    CHECK(bump({1, 2}, t) == Word{1, 2});
    CHECK(bump_trace({1, 2}, t).chain.empty());
    CHECK_THROWS_AS(bump({1, 1}, t), input_error);
    // Every bump raises letters by zero or one.
    for (const auto& p : permutation_corpus(4, 6, false))
        for (const auto& w : enumerate_words(p, Flavor::reduced))
            for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
                Word d = del(w, i);
                auto tt = BumpTarget::reduced(word_to_permutation(d));
                Word v = bump(w, tt);
                for (std::size_t k = 0; k < w.size(); ++k) CHECK((v[k] - w[k] == 0 || v[k] - w[k] == 1));
                CHECK(is_reduced_word(v));
                CHECK(descent_set(v) == descent_set(w));
            }
}

TEST_CASE("atom sequences replay every involution and fpf bump") {
    for (const auto& p : involution_corpus(4, 6, false))
        for (const auto& d : enumerate_words(p, Flavor::involution)) {
            auto t = BumpTarget::involution(p);
            // Insert any letter to get a marked word for p.
            for (std::size_t pos = 0; pos <= d.size(); ++pos)
                for (int a = 1; a <= 6; ++a) {
                    Word w = d;
                    w.insert(w.begin() + static_cast<long>(pos), a);
                    if (!is_involution_word(w)) continue;
                    auto seq = decompose_bump(w, t);
                    for (const auto& x : seq) CHECK(atoms(p).count(x) == 1);
                    CHECK(replay(w, seq) == bump(w, t));
                }
        }
    for (const auto& p : fpf_corpus(3, 6, false))
        for (const auto& d : enumerate_words(p)) {
            auto t = BumpTarget::fpf_involution(p);
            for (std::size_t pos = 0; pos <= d.size(); ++pos)
                for (int a = 1; a <= 6; ++a) {
                    Word w = d;
                    w.insert(w.begin() + static_cast<long>(pos), a);
                    if (!is_fpf_involution_word(w)) continue;
                    auto seq = decompose_bump(w, t);
                    for (const auto& x : seq) CHECK(atoms(p).count(x) == 1);
                    CHECK(replay(w, seq) == bump(w, t));
                }
        }
}

TEST_CASE("factorization bumps keep factor lengths") {
    auto p = cyc({{1, 3}, {2, 5}});
    auto t = BumpTarget::involution(p);
    for (int a = 1; a <= 5; ++a)
        for (const auto& d : enumerate_words(p, Flavor::involution)) {
            Word w = d;
            w.push_back(a);
            if (!is_involution_word(w)) continue;
            for (const auto& f : factorizations(w, 2)) {
                auto g = bump_factorization(f, t);
                REQUIRE(g.size() == f.size());
                for (std::size_t k = 0; k < f.size(); ++k) CHECK(g[k].size() == f[k].size());
                CHECK(is_increasing_factorization(g));
            }
        }
}

TEST_CASE("bump input validation") {
    auto t = BumpTarget::involution(cyc({{2, 5}}));
    CHECK_THROWS_AS(bump({2, 2}, t), input_error);
    CHECK_THROWS_AS(companion_index({2, 1, 3, 4}, 1, t), input_error);
    CHECK(t.to_string() == "(2,5)");
}

#include "qcrys/bumping.hpp"

#include <algorithm>

#include "qcrys/error.hpp"

namespace qcrys {

BumpTarget BumpTarget::reduced(const Permutation& p) {
    BumpTarget t;
    t.flavor = Flavor::reduced;
    t.perm = p;
    return t;
}

BumpTarget BumpTarget::involution(const Permutation& p) {
    if (!p.is_involution()) throw input_error(p.to_string() + " is not an involution");
    BumpTarget t;
    t.flavor = Flavor::involution;
    t.perm = p;
    return t;
}

BumpTarget BumpTarget::fpf_involution(const FpfInvolution& p) {
    BumpTarget t;
    t.flavor = Flavor::fpf;
    t.fpf = p;
    return t;
}

std::string BumpTarget::to_string() const {
    return flavor == Flavor::fpf ? fpf.to_string() : perm.to_string();
}

Word del(const Word& w, int i) {
    if (i < 1 || i > static_cast<int>(w.size()))
        throw input_error("del: index " + std::to_string(i) + " out of range");
    Word out = w;
    out.erase(out.begin() + (i - 1));
    return out;
}

bool is_marked(const Word& w, int i, const BumpTarget& t) {
    if (i < 1 || i > static_cast<int>(w.size())) return false;
    Word d = del(w, i);
    return t.flavor == Flavor::fpf ? word_in_class(d, t.fpf) : word_in_class(d, t.perm, t.flavor);
}

bool is_flavor_reduced(const Word& w, Flavor flavor) {
    switch (flavor) {
        case Flavor::reduced: return is_reduced_word(w);
        case Flavor::involution: return is_involution_word(w);
        case Flavor::fpf: return is_fpf_involution_word(w);
    }
    return false;
}

bool is_semi_reduced(const Word& w, const FpfInvolution& pi) {
    if (is_fpf_involution_word(w) || !is_reduced_word(w)) return false;
    FpfInvolution p;
    for (int a : w) p = p.conjugate(a);
    return p == pi;
}

namespace {

// push keeps the mark in place on terminal states.
bool keeps_mark(const Word& w, const BumpTarget& t) {
    if (is_flavor_reduced(w, t.flavor)) return true;
    return t.flavor == Flavor::fpf && is_semi_reduced(w, t.fpf);
}

}  // namespace

int companion_index(const Word& w, int i, const BumpTarget& t) {
    if (!is_marked(w, i, t)) throw input_error("companion_index: (w, i) is not a marked word");
    if (keeps_mark(w, t)) throw input_error("companion_index: the marked word has no companion");
    int found = 0;
    for (int j = 1; j <= static_cast<int>(w.size()); ++j) {
        if (j == i || !is_marked(w, j, t)) continue;
        if (found) throw invariant_error("companion_index: more than one companion for " + word_to_string(w));
        found = j;
    }
    if (!found) throw invariant_error("companion_index: no companion for " + word_to_string(w));
    return found;
}

MarkedWord push_step(const MarkedWord& mw, const BumpTarget& t) {
    if (!is_marked(mw.word, mw.mark, t)) throw input_error("push: (w, i) is not a marked word");
    int j = keeps_mark(mw.word, t) ? mw.mark : companion_index(mw.word, mw.mark, t);
    MarkedWord out{mw.word, j};
    ++out.word[j - 1];
    return out;
}

namespace {

void require_in_class(const Word& w, Flavor flavor) {
    if (!is_flavor_reduced(w, flavor))
        throw input_error(word_to_string(w) + " is not a " + flavor_name(flavor) + " word");
}

int default_cap(const Word& w) {
    if (w.empty()) return 10;
    auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    return 10 * (static_cast<int>(w.size()) + 1) * (*hi - *lo + 3);
}

}  // namespace

BumpTrace bump_trace(const Word& w, const BumpTarget& t, int cap) {
    require_in_class(w, t.flavor);
    if (cap <= 0) cap = default_cap(w);
    int start = 0;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i)
        if (is_marked(w, i, t)) {
            if (start) throw invariant_error("bump: more than one marked index in " + word_to_string(w));
            start = i;
        }
    BumpTrace tr;
    if (!start) {
        tr.result = w;
        return tr;
    }
    MarkedWord cur{w, start};
    tr.chain.push_back(cur);
    do {
        if (static_cast<int>(tr.chain.size()) > cap)
            throw invariant_error("bump: push chain from " + word_to_string(w) + " exceeded " +
                                  std::to_string(cap) + " steps");
        cur = push_step(cur, t);
        tr.chain.push_back(cur);
    } while (!is_flavor_reduced(cur.word, t.flavor));
    tr.result = cur.word;
    return tr;
}

Word bump(const Word& w, const BumpTarget& t) { return bump_trace(w, t).result; }

Factorization bump_factorization(const Factorization& f, const BumpTarget& t) {
    std::vector<int> lengths;
    for (const auto& part : f) lengths.push_back(static_cast<int>(part.size()));
    return split(bump(concat(f), t), lengths);
}

std::vector<Permutation> decompose_bump(const Word& w, const BumpTarget& t) {
    BumpTrace tr = bump_trace(w, t);
    std::vector<Permutation> out;
    for (std::size_t k = 0; k + 1 < tr.chain.size(); ++k) {
        const Word& v = tr.chain[k].word;
        if (!is_reduced_word(v)) continue;
        int next = tr.chain[k + 1].mark;
        out.push_back(word_to_permutation(del(v, next)));
    }
    return out;
}

}  // namespace qcrys

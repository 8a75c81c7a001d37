#pragma once

// Marked words and Little bumping operators for reduced, involution and
// fpf-involution words.

#include <string>
#include <vector>

#include "qcrys/insertion.hpp"
#include "qcrys/permwords.hpp"

namespace qcrys {

/// The permutation pi a bump is taken relative to, with its word flavor.
struct BumpTarget {
    Flavor flavor = Flavor::reduced;
    Permutation perm;   // reduced and involution flavors
    FpfInvolution fpf;  // fpf flavor

    static BumpTarget reduced(const Permutation& p);
    /// Throws input_error unless p is an involution.
    static BumpTarget involution(const Permutation& p);
    static BumpTarget fpf_involution(const FpfInvolution& p);

    std::string to_string() const;
};

struct MarkedWord {
    Word word;
    int mark = 1;  // 1-based
    auto operator<=>(const MarkedWord&) const = default;
};

/// w with its i-th letter (1-based) removed; throws input_error if out of range.
Word del(const Word& w, int i);

/// del_i(w) lies in the word class of the target.
bool is_marked(const Word& w, int i, const BumpTarget& t);
/// Reduced, inv-reduced or fpf-reduced according to the flavor.
bool is_flavor_reduced(const Word& w, Flavor flavor);
/// Not an fpf-involution word, but a reduced word whose conjugation action
/// carries 1_fpf to pi.
bool is_semi_reduced(const Word& w, const FpfInvolution& pi);

/// The unique j != i with (w, j) marked. Throws input_error if (w, i) is not
/// marked or is already terminal for the flavor, and invariant_error unless
/// exactly one candidate exists.
int companion_index(const Word& w, int i, const BumpTarget& t);

/// One push / ipush / fpush step.
MarkedWord push_step(const MarkedWord& mw, const BumpTarget& t);

struct BumpTrace {
    Word result;
    /// Marked words from the starting one through the terminal one; empty
    /// when no index is marked and the word is left unchanged.
    std::vector<MarkedWord> chain;
};

/// Throws input_error unless w lies in the flavor's word class. The push
/// chain is capped (0 picks a bound from the word) and overflow throws
/// invariant_error.
BumpTrace bump_trace(const Word& w, const BumpTarget& t, int cap = 0);
Word bump(const Word& w, const BumpTarget& t);

/// Bumps the concatenation and cuts it at the original factor lengths.
Factorization bump_factorization(const Factorization& f, const BumpTarget& t);

/// Atoms alpha_1, ..., alpha_l of the target with bump(w) equal to
/// b_{alpha_l} ... b_{alpha_1}(w). Each reduced state of the push chain
/// contributes the permutation of the word obtained by deleting the letter
/// about to be pushed.
std::vector<Permutation> decompose_bump(const Word& w, const BumpTarget& t);

}  // namespace qcrys

#pragma once

// Text grammar for command-line inputs and JSON renderings of results.

#include <string>
#include <vector>

#include "qcrys/bumping.hpp"
#include "qcrys/insertion.hpp"
#include "qcrys/permwords.hpp"
#include "qcrys/tableaux.hpp"

namespace qcrys {

/// "2134" (one digit per letter) or "2,1,3,4" / "2 1 3 4". Empty text is
/// the empty word.
Word parse_word(const std::string& text);
/// "(4)(23)(12)" with "()" for empty factors; letters inside a group follow
/// parse_word. Text without parentheses is read as a word in singletons.
Factorization parse_factorization(const std::string& text);
/// Cycle notation "(1,3)(2,5)"; "" or "()" is the identity.
Permutation parse_permutation(const std::string& text);
/// 2-cycles on a finite window; 1_fpf fills in everything not mentioned.
FpfInvolution parse_fpf(const std::string& text);
/// "3,1", "(3,1)" or "31".
std::vector<int> parse_shape(const std::string& text);
InsertKind parse_insert_kind(const std::string& text);

/// Lexicographically first reduced word as "s2s3s4"; "1" for the identity.
std::string s_word(const Permutation& p);

std::string tableau_json(const Tableau& t);
std::string insertion_json(const InsertionResult& r, InsertKind kind, const Factorization& input);
/// Pretty P, Q and per-letter trace.
std::string insertion_text(const InsertionResult& r);
std::string bump_json(const Word& w, const BumpTarget& t, const BumpTrace& tr,
                      const std::vector<Permutation>& atoms);

}  // namespace qcrys

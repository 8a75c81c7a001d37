#pragma once

// Edelman-Greene insertion and its orthogonal and symplectic shifted
// analogues, Haiman mixed insertion, and inversion by class search.

#include <optional>
#include <string>
#include <vector>

#include "qcrys/permwords.hpp"
#include "qcrys/tableaux.hpp"

namespace qcrys {

/// Tuple of strictly increasing, possibly empty, words.
using Factorization = std::vector<Word>;

enum class InsertKind { eg, oeg, speg, hm };

std::string insert_kind_name(InsertKind k);

struct InsertStep {
    bool column_inserted = false;
    /// (x, y) for each time the diagonal exception fired with x <= y.
    std::vector<std::pair<int, int>> diagonal_hits;
};

struct InsertionResult {
    Tableau P;
    Tableau Q;
    std::vector<InsertStep> trace;  // one entry per inserted letter
};

Word concat(const Factorization& f);
Factorization singletons(const Word& w);
bool is_increasing_factorization(const Factorization& f);
/// Every way to cut w into n strictly increasing consecutive pieces.
std::vector<Factorization> factorizations(const Word& w, int n);
/// Cuts w into pieces of the given lengths (no increase check).
Factorization split(const Word& w, const std::vector<int>& lengths);
std::string factorization_key(const Factorization& f);

/// With check = true, throws input_error unless the factors are increasing
/// and their concatenation lies in the word class the algorithm needs.
InsertionResult eg_insert(const Factorization& f, bool check = true);
InsertionResult oeg_insert(const Factorization& f, bool check = true);
InsertionResult speg_insert(const Factorization& f, bool check = true);
/// Letters must be positive; Q records positions.
InsertionResult hm_insert(const Word& w);

InsertionResult insert(InsertKind kind, const Factorization& f, bool check = true);

/// The unique input with insertion pair (P, Q), found by searching the
/// equivalence class singled out by P. For hm the result has one factor.
/// Q does not record trailing empty factors; pass factors to pad to that
/// count. Returns nullopt when no preimage exists.
std::optional<Factorization> invert_insertion(const Tableau& P, const Tableau& Q, InsertKind kind, int factors = 0);

}  // namespace qcrys

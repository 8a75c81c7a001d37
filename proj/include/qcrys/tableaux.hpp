#pragma once

// Plain and shifted tableaux in French notation.
//
// Entries use a doubled encoding so primes stay exact: 2k is k and 2k-1 is
// k'. Row 1 is the bottom row; row x of a shifted tableau starts in column x.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcrys/permwords.hpp"

namespace qcrys {

constexpr int unprimed(int k) { return 2 * k; }
constexpr int primed(int k) { return 2 * k - 1; }
constexpr bool is_primed(int e) { return e % 2 != 0; }
/// The number k underlying k or k'.
constexpr int value_of(int e) { return is_primed(e) ? (e + 1) / 2 : e / 2; }
constexpr int toggle_prime(int e) { return is_primed(e) ? e + 1 : e - 1; }

std::string entry_to_string(int e);
/// Parses "3" or "3'"; throws input_error otherwise.
int entry_from_string(const std::string& s);

using Box = std::pair<int, int>;  // (row, column), both 1-based

struct Tableau {
    bool shifted = false;
    std::vector<std::vector<int>> rows;  // bottom row first

    int row_start(int x) const { return shifted ? x : 1; }
    bool contains(int x, int y) const;
    int at(int x, int y) const;
    std::optional<int> get(int x, int y) const;
    void set(int x, int y, int e);

    std::vector<int> shape() const;
    int size() const;
    bool empty() const { return rows.empty(); }
    /// Boxes in row order, bottom row first.
    std::vector<Box> boxes() const;
    /// Appends e to row x (creating the row if x is one past the top).
    void append(int x, int e);

    auto operator<=>(const Tableau&) const = default;
};

/// "1 2' 3/3" style input: rows bottom to top separated by '/', entries by
/// spaces or commas. A row of single digits may be written without separators.
Tableau parse_tableau(const std::string& text, bool shifted);
/// Compact single-line form used as a canonical key, e.g. "1,2',3/3".
std::string tableau_key(const Tableau& t);
/// Multi-line French rendering (top row printed first).
std::string tableau_pretty(const Tableau& t);

bool is_semistandard(const Tableau& t);
bool is_increasing(const Tableau& t);
bool is_standard(const Tableau& t);

Word row_word(const Tableau& t);
Word col_word(const Tableau& t);
Word shword(const Tableau& t);
/// Boxes in the order their entries appear in shword(t).
std::vector<Box> shword_boxes(const Tableau& t);

/// Des(shword(T)); throws input_error unless t is standard shifted.
std::vector<int> tableau_descents(const Tableau& t);
/// The same set via the three-case box characterization.
std::vector<int> tableau_descents_by_cases(const Tableau& t);

/// Counts of i and i' for i in [n]; throws input_error if an entry exceeds n.
std::vector<int> weight(const Tableau& t, int n);

std::vector<std::vector<int>> partitions(int m, int max_parts);
std::vector<std::vector<int>> strict_partitions(int m, int max_parts);

/// Tab_n(lambda).
std::vector<Tableau> plain_tableaux(const std::vector<int>& lambda, int n);
/// ShTab_n(mu).
std::vector<Tableau> shifted_tableaux(const std::vector<int>& mu, int n);
/// Standard shifted tableaux of shape mu, with or without primed entries.
std::vector<Tableau> standard_shifted(const std::vector<int>& mu, bool primes_allowed);

/// Box holding k or k' in a standard tableau.
std::optional<Box> box_of(const Tableau& t, int k);

/// s_i * T; throws input_error unless t is standard shifted and 1 <= i < |T|.
Tableau star_op(const Tableau& t, int i);
/// Dual equivalence operator d_i on standard shifted tableaux.
Tableau dual_equiv(const Tableau& t, int i);

}  // namespace qcrys

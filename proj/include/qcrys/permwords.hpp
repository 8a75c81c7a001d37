#pragma once

// Permutations of Z with finite support, fixed-point-free involutions,
// reduced / involution / fpf-involution words and Coxeter-Knuth moves.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qcrys {

using Word = std::vector<int>;

enum class Flavor { reduced, involution, fpf };

// K, O, Sp: Coxeter-Knuth closures (ck_i, plus ck0_O or ck0_Sp).
// braid, braid_O, braid_Sp: braid relations, plus the initial-letter
// relation defining =_O or =_Sp.
enum class Relation { K, O, Sp, braid, braid_O, braid_Sp };

std::string flavor_name(Flavor f);

/// A bijection of Z moving finitely many points.
///
/// Stored as the sorted list of pairs (i, p(i)) with p(i) != i, so two
/// permutations are equal exactly when their lists are.
class Permutation {
public:
    Permutation() = default;

    /// Throws input_error unless the pairs describe a bijection.
    static Permutation from_pairs(std::vector<std::pair<int, int>> pairs);
    /// Cycle notation; 1-cycles are allowed and ignored.
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);
    /// images[k] is the image of first + k.
    static Permutation from_one_line(const std::vector<int>& images, int first = 1);

    int operator()(int i) const;
    /// (p * q)(i) = p(q(i)).
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    Permutation times_s(int i) const;  // p s_i
    Permutation s_times(int i) const;  // s_i p

    const std::vector<std::pair<int, int>>& support() const { return moved_; }
    bool is_identity() const { return moved_.empty(); }
    bool is_involution() const;
    /// Smallest and largest moved points; (1, 0) for the identity.
    std::pair<int, int> bounds() const;

    int length() const;      // number of inversions
    int two_cycles() const;  // kappa
    std::vector<std::vector<int>> cycles() const;
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    void set(int i, int v);
    std::vector<std::pair<int, int>> moved_;
};

/// A fixed-point-free involution of Z agreeing with 1_fpf off a finite set.
///
/// 1_fpf maps i to i - (-1)^i, i.e. it pairs 2k-1 with 2k. Only the
/// points where the involution differs from 1_fpf are stored.
class FpfInvolution {
public:
    FpfInvolution() = default;  // 1_fpf

    static int base(int i) { return i % 2 == 0 ? i - 1 : i + 1; }

    /// Lift from 2-cycles on a finite window. Cycles that agree with 1_fpf
    /// may be listed or omitted. Throws input_error unless the result is a
    /// fixed-point-free involution.
    static FpfInvolution from_cycles(const std::vector<std::pair<int, int>>& cycles);

    int operator()(int i) const;
    FpfInvolution conjugate(int i) const;  // s_i p s_i

    const std::vector<std::pair<int, int>>& overrides() const { return over_; }
    bool is_base() const { return over_.empty(); }
    /// Even-aligned window [lo, hi] (lo odd, hi even) containing every override.
    std::pair<int, int> window() const;
    /// The 2-cycles (a, b), a < b, on which the involution differs from 1_fpf.
    std::vector<std::pair<int, int>> cycles() const;
    /// The finite permutation equal to this involution on (-m, m] and fixing
    /// everything else, for the smallest even m >= min_m covering the overrides.
    Permutation restriction(int& m, int min_m = 0) const;

    int length() const;  // l^Sp
    std::string to_string() const;

    auto operator<=>(const FpfInvolution&) const = default;

private:
    std::vector<std::pair<int, int>> over_;
};

Permutation simple_transposition(int i);
Permutation demazure_step(const Permutation& p, int i);
Permutation rtimes_step(const Permutation& p, int i);

Permutation word_to_permutation(const Word& w);
bool is_reduced_word(const Word& w);

/// The involution built by the rtimes product, if w is an involution word.
std::optional<Permutation> involution_of_word(const Word& w);
bool is_involution_word(const Word& w);
/// The conjugate of 1_fpf reached by w, if w is an fpf-involution word.
std::optional<FpfInvolution> fpf_of_word(const Word& w);
bool is_fpf_involution_word(const Word& w);

/// Membership in R(p) (reduced) or R^O(p) (involution).
bool word_in_class(const Word& w, const Permutation& p, Flavor flavor);
/// Membership in R^Sp(p).
bool word_in_class(const Word& w, const FpfInvolution& p);

/// R(p) or R^O(p) by descent recursion. Throws input_error if the flavor is
/// fpf or p is not an involution when one is required.
std::set<Word> enumerate_words(const Permutation& p, Flavor flavor);
/// R^Sp(p) by descent recursion.
std::set<Word> enumerate_words(const FpfInvolution& p);

std::set<Permutation> atoms(const Permutation& p);    // A^O
std::set<Permutation> atoms(const FpfInvolution& p);  // A^Sp

/// Des(w) as 1-based positions.
std::vector<int> descent_set(const Word& w);

/// Coxeter-Knuth move on positions i, i+1, i+2 (1-based); identity when the
/// window does not fit.
Word ck(const Word& w, int i);
Word ck0_O(const Word& w);
Word ck0_Sp(const Word& w);

/// Closure of w under the chosen relation, by breadth-first search.
std::set<Word> equivalence_class(const Word& w, Relation r);

struct LengthInvariants {
    int ell = 0;         // l(p), or l(sigma) of the window restriction for fpf
    int ell_flavor = 0;  // l^O or l^Sp
    int kappa = 0;       // number of 2-cycles (of sigma for fpf)
};
LengthInvariants length_invariants(const Permutation& involution);
LengthInvariants length_invariants(const FpfInvolution& p);

Word star(const Word& w);
Permutation star(const Permutation& p);
FpfInvolution star(const FpfInvolution& p);
Word shift(int m, const Word& w);
Permutation shift(int m, const Permutation& p);
/// Throws input_error for odd m.
FpfInvolution shift(int m, const FpfInvolution& p);

/// Shape mu if p is inv-Grassmannian (empty for the identity).
std::optional<std::vector<int>> inv_grassmannian_shape(const Permutation& p);
/// The involution p-hat attached to an fpf-involution.
Permutation fpf_hat(const FpfInvolution& p);
/// Shape nu if p is fpf-Grassmannian (empty for 1_fpf).
std::optional<std::vector<int>> fpf_grassmannian_shape(const FpfInvolution& p);

std::string word_to_string(const Word& w);

}  // namespace qcrys

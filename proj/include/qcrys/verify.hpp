#pragma once

// Exhaustive verification suite over bounded corpora. Each target checks a
// family of identities and reports the first counterexamples it meets.

#include <string>
#include <vector>

#include "qcrys/permwords.hpp"

namespace qcrys {

struct VerifyBounds {
    int maxlen = 5;  // word length, l^K(pi), or m for Perm_n(m)
    int n = 3;       // largest crystal rank
    int boxes = 7;   // standard shifted tableaux size bound
};

/// Hard caps on the bounds; larger values throw input_error.
constexpr int max_verify_len = 7;
constexpr int max_verify_n = 5;
constexpr int max_verify_boxes = 9;

struct VerifyReport {
    std::string target;
    bool conjecture = false;
    long long cases = 0;
    std::vector<std::string> failures;  // first few counterexamples
    long long failure_count = 0;
    std::vector<std::string> notes;

    bool passed() const { return failure_count == 0; }
    void fail(const std::string& what);
    /// 0 on pass; 1 for a theorem failure, 4 for a conjecture counterexample.
    int exit_code() const;
    std::string summary() const;
};

const std::vector<std::string>& verify_target_names();
/// Throws input_error for unknown names or bounds beyond the caps.
VerifyReport run_verify(const std::string& target, const VerifyBounds& bounds);

// ---------------------------------------------------------------- corpora

/// Permutations of [1, window] with 0 < l <= max_len. With drop_shifts,
/// permutations fixing 1 are skipped since they are shifts of smaller ones.
std::vector<Permutation> permutation_corpus(int max_len, int window, bool drop_shifts);
/// Involutions of [1, window] with 0 < l^O <= max_len.
std::vector<Permutation> involution_corpus(int max_len, int window, bool drop_shifts);
/// Fpf-involutions agreeing with 1_fpf outside [1, window] (window even)
/// with 0 < l^Sp <= max_len. drop_shifts skips those fixing the pair {1, 2}.
std::vector<FpfInvolution> fpf_corpus(int max_len, int window, bool drop_shifts);

/// Default windows used for a length bound.
int permutation_window(int max_len);
int fpf_window(int max_len);

/// Involutions of the permutation words of 1..m: (1, M) together with
/// (1,i_1)(i_1-1,i_2)...(i_k-1,M) for 1 < i_1-1 < i_1 < ... < i_k < M, where
/// M = m + 1.
std::vector<Permutation> sigma_set(int m);
/// s_2 s_4 ... s_{2m}.
Permutation even_involution(int m);
/// The fpf-involution whose words are the permutations of 2, 4, ..., 2m.
FpfInvolution even_fpf_involution(int m);

}  // namespace qcrys

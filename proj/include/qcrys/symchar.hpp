#pragma once

// Integer polynomials in n variables, crystal characters, Schur and Schur-P
// polynomials, and expansions into those bases.

#include <map>
#include <string>
#include <vector>

#include "qcrys/crystal.hpp"
#include "qcrys/permwords.hpp"

namespace qcrys {

class Polynomial {
public:
    using Exponent = std::vector<int>;

    explicit Polynomial(int n = 0) : n_(n) {}
    static Polynomial constant(int n, long long c);
    static Polynomial monomial(const Exponent& e, long long c = 1);
    /// x_i for 1 <= i <= n.
    static Polynomial variable(int n, int i);

    int n() const { return n_; }
    const std::map<Exponent, long long>& terms() const { return terms_; }
    long long coefficient(const Exponent& e) const;
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(const Exponent& e, long long c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(long long c) const;
    bool operator==(const Polynomial& rhs) const = default;

    /// Swaps x_i and x_{i+1}.
    Polynomial swap_variables(int i) const;

    /// Terms in decreasing lexicographic order, e.g. "x1^2*x2 + 2*x1*x2*x3".
    std::string to_string() const;
    /// [{"exponents": [...], "coefficient": c}, ...] in the same order.
    std::string to_json() const;

private:
    void check(const Polynomial& rhs) const;

    int n_;
    std::map<Exponent, long long> terms_;
};

/// Sum of x^wt(b) over the vertices.
Polynomial character(const CrystalGraph& g);

Polynomial schur_poly(const std::vector<int>& lambda, int n);
Polynomial schurP_poly(const std::vector<int>& mu, int n);

bool is_symmetric(const Polynomial& p);
/// p(x1, -x1, x3, ..., xn) is free of x1. Throws input_error when n < 2.
bool is_supersymmetric(const Polynomial& p);

/// F_pi (reduced flavor) or the involution Stanley polynomial F-hat_pi,
/// truncated to n variables.
Polynomial stanley_poly(const Permutation& pi, Flavor flavor, int n);
/// The fpf-involution Stanley polynomial, truncated to n variables.
Polynomial stanley_poly(const FpfInvolution& pi, int n);

enum class Basis { schur, schurP };
std::string basis_name(Basis b);

using Expansion = std::map<std::vector<int>, long long>;

/// Coefficients of p in the Schur or Schur-P basis by leading-monomial
/// elimination. Throws input_error unless p is symmetric (supersymmetric for
/// Schur-P), and invariant_error if a leading exponent is not a valid shape.
Expansion expand(const Polynomial& p, Basis basis);

/// Highest weights of g bucketed by weight with trailing zeros dropped:
/// e-sources for gl crystals, top-weight vertices of components for q_n.
Expansion highest_weight_counts(const CrystalGraph& g);

std::string shape_to_string(const std::vector<int>& shape);
std::string expansion_to_string(const Expansion& e, Basis basis);

}  // namespace qcrys

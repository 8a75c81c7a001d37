#include "qcrys/symchar.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qcrys/error.hpp"
#include "qcrys/tableaux.hpp"

namespace qcrys {

Polynomial Polynomial::constant(int n, long long c) {
    Polynomial p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

Polynomial Polynomial::monomial(const Exponent& e, long long c) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    if (i < 1 || i > n) throw input_error("variable index out of range");
    Exponent e(n, 0);
    e[i - 1] = 1;
    return monomial(e);
}

long long Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int a : e) s += a;
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::add_term(const Exponent& e, long long c) {
    if (static_cast<int>(e.size()) != n_) throw input_error("exponent vector has the wrong length");
    for (int a : e)
        if (a < 0) throw input_error("negative exponent");
    if (c == 0) return;
    long long& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

void Polynomial::check(const Polynomial& rhs) const {
    if (rhs.n_ != n_) throw input_error("polynomials in different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial p = *this;
    return p += rhs;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial p = *this;
    return p -= rhs;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check(rhs);
    Polynomial p(n_);
    for (const auto& [a, c] : terms_)
        for (const auto& [b, d] : rhs.terms_) {
            Exponent e(n_);
            for (int k = 0; k < n_; ++k) e[k] = a[k] + b[k];
            p.add_term(e, c * d);
        }
    return p;
}

Polynomial Polynomial::operator*(long long c) const {
    Polynomial p(n_);
    for (const auto& [e, d] : terms_) p.add_term(e, c * d);
    return p;
}

Polynomial Polynomial::swap_variables(int i) const {
    if (i < 1 || i >= n_) throw input_error("swap_variables: index out of range");
    Polynomial p(n_);
    for (const auto& [e0, c] : terms_) {
        Exponent e = e0;
        std::swap(e[i - 1], e[i]);
        p.add_term(e, c);
    }
    return p;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        long long mag = c < 0 ? -c : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (int k = 0; k < n_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) os << mag;
        else if (mag == 1) os << mono;
        else os << mag << '*' << mono;
    }
    return os.str();
}

std::string Polynomial::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        j.push_back({{"exponents", it->first}, {"coefficient", it->second}});
    return j.dump();
}

Polynomial character(const CrystalGraph& g) {
    Polynomial p(g.n);
    for (const auto& wt : g.weights) p.add_term(wt, 1);
    return p;
}

namespace {

Polynomial tableau_sum(const std::vector<Tableau>& ts, int n) {
    Polynomial p(n);
    for (const auto& t : ts) p.add_term(weight(t, n), 1);
    return p;
}

}  // namespace

Polynomial schur_poly(const std::vector<int>& lambda, int n) {
    return tableau_sum(plain_tableaux(lambda, n), n);
}

Polynomial schurP_poly(const std::vector<int>& mu, int n) {
    return tableau_sum(shifted_tableaux(mu, n), n);
}

bool is_symmetric(const Polynomial& p) {
    for (int i = 1; i < p.n(); ++i)
        if (p.swap_variables(i) != p) return false;
    return true;
}

bool is_supersymmetric(const Polynomial& p) {
    if (p.n() < 2) throw input_error("supersymmetry needs at least two variables");
    Polynomial q(p.n());
    for (const auto& [e0, c] : p.terms()) {
        Polynomial::Exponent e = e0;
        e[0] += e[1];
        e[1] = 0;
        q.add_term(e, e0[1] % 2 ? -c : c);
    }
    for (const auto& [e, c] : q.terms())
        if (e[0] > 0) return false;
    return true;
}

namespace {

Polynomial factorization_sum(const std::set<Word>& words, int n) {
    Polynomial p(n);
    for (const auto& f : factorizations_of(words, n)) {
        Polynomial::Exponent e;
        for (const auto& part : f) e.push_back(static_cast<int>(part.size()));
        p.add_term(e, 1);
    }
    return p;
}

}  // namespace

Polynomial stanley_poly(const Permutation& pi, Flavor flavor, int n) {
    if (flavor == Flavor::fpf) throw input_error("stanley_poly: use the fpf overload");
    if (flavor == Flavor::involution && !pi.is_involution())
        throw input_error(pi.to_string() + " is not an involution");
    return factorization_sum(enumerate_words(pi, flavor), n);
}

Polynomial stanley_poly(const FpfInvolution& pi, int n) {
    return factorization_sum(enumerate_words(pi), n);
}

std::string basis_name(Basis b) { return b == Basis::schur ? "schur" : "schurP"; }

Expansion expand(const Polynomial& p, Basis basis) {
    if (!is_symmetric(p)) throw input_error("expand: polynomial is not symmetric");
    if (basis == Basis::schurP && p.n() >= 2 && !is_supersymmetric(p))
        throw input_error("expand: polynomial is not supersymmetric");
    Expansion out;
    Polynomial rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().rbegin();
        std::vector<int> shape = lead;
        if (!std::is_sorted(shape.rbegin(), shape.rend()))
            throw invariant_error("expand: leading exponent is not a partition");
        while (!shape.empty() && shape.back() == 0) shape.pop_back();
        if (basis == Basis::schurP && std::adjacent_find(shape.begin(), shape.end()) != shape.end())
            throw invariant_error("expand: leading exponent " + shape_to_string(shape) +
                                  " is not a strict partition");
        long long coeff = c;
        Polynomial b = basis == Basis::schur ? schur_poly(shape, p.n()) : schurP_poly(shape, p.n());
        if (b.coefficient(lead) != 1) throw invariant_error("expand: basis element is not unitriangular");
        rest -= b * coeff;
        out[shape] += coeff;
    }
    return out;
}

Expansion highest_weight_counts(const CrystalGraph& g) {
    Expansion out;
    for (int v : g.queer ? queer_highest_weights(g) : highest_weights(g)) {
        std::vector<int> shape = g.weights[v];
        while (!shape.empty() && shape.back() == 0) shape.pop_back();
        ++out[shape];
    }
    return out;
}

std::string shape_to_string(const std::vector<int>& shape) {
    std::string s = "(";
    for (std::size_t k = 0; k < shape.size(); ++k) s += (k ? "," : "") + std::to_string(shape[k]);
    return s + ")";
}

std::string expansion_to_string(const Expansion& e, Basis basis) {
    if (e.empty()) return "0";
    std::string s;
    const char* sym = basis == Basis::schur ? "s" : "P";
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (it->second != 1) s += std::to_string(it->second) + "*";
        s += sym + shape_to_string(it->first);
    }
    return s;
}

}  // namespace qcrys

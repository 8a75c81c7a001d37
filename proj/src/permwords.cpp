#include "qcrys/permwords.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

#include "qcrys/error.hpp"

namespace qcrys {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::reduced: return "reduced";
        case Flavor::involution: return "involution";
        case Flavor::fpf: return "fpf";
    }
    return "?";
}

// ---------------------------------------------------------------- Permutation

namespace {

bool pair_key_less(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return a.first < b.first;
}

}  // namespace

Permutation Permutation::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::erase_if(pairs, [](const auto& pr) { return pr.first == pr.second; });
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> dom, img;
    for (auto [i, v] : pairs) {
        dom.push_back(i);
        img.push_back(v);
    }
    if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
        throw input_error("permutation: repeated point in domain");
    std::sort(img.begin(), img.end());
    if (img != dom) throw input_error("permutation: pairs do not define a bijection");
    Permutation p;
    p.moved_ = std::move(pairs);
    return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
    std::vector<std::pair<int, int>> pairs;
    std::set<int> seen;
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (!seen.insert(c[k]).second)
                throw input_error("permutation: point " + std::to_string(c[k]) +
                                  " appears in two cycles");
            pairs.emplace_back(c[k], c[(k + 1) % c.size()]);
        }
    }
    return from_pairs(std::move(pairs));
}

Permutation Permutation::from_one_line(const std::vector<int>& images, int first) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < images.size(); ++k)
        pairs.emplace_back(first + static_cast<int>(k), images[k]);
    return from_pairs(std::move(pairs));
}

int Permutation::operator()(int i) const {
    auto it = std::lower_bound(moved_.begin(), moved_.end(), std::pair{i, 0}, pair_key_less);
    if (it != moved_.end() && it->first == i) return it->second;
    return i;
}

void Permutation::set(int i, int v) {
    auto it = std::lower_bound(moved_.begin(), moved_.end(), std::pair{i, 0}, pair_key_less);
    bool present = it != moved_.end() && it->first == i;
    if (v == i) {
        if (present) moved_.erase(it);
    } else if (present) {
        it->second = v;
    } else {
        moved_.insert(it, {i, v});
    }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    std::vector<int> pts;
    for (auto [i, v] : moved_) pts.push_back(i);
    for (auto [i, v] : rhs.moved_) pts.push_back(i);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Permutation out;
    for (int i : pts) {
        int v = (*this)(rhs(i));
        if (v != i) out.moved_.emplace_back(i, v);
    }
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    for (auto [i, v] : moved_) out.moved_.emplace_back(v, i);
    std::sort(out.moved_.begin(), out.moved_.end());
    return out;
}

Permutation Permutation::times_s(int i) const {
    Permutation out = *this;
    int a = (*this)(i), b = (*this)(i + 1);
    out.set(i, b);
    out.set(i + 1, a);
    return out;
}

Permutation Permutation::s_times(int i) const {
    int j1 = i, j2 = i + 1;
    for (auto [k, v] : moved_) {
        if (v == i) j1 = k;
        if (v == i + 1) j2 = k;
    }
    Permutation out = *this;
    out.set(j1, i + 1);
    out.set(j2, i);
    return out;
}

bool Permutation::is_involution() const {
    return std::all_of(moved_.begin(), moved_.end(),
                       [&](const auto& pr) { return (*this)(pr.second) == pr.first; });
}

std::pair<int, int> Permutation::bounds() const {
    if (moved_.empty()) return {1, 0};
    return {moved_.front().first, moved_.back().first};
}

int Permutation::length() const {
    auto [lo, hi] = bounds();
    std::vector<int> line;
    for (int i = lo; i <= hi; ++i) line.push_back((*this)(i));
    int inv = 0;
    for (std::size_t a = 0; a < line.size(); ++a)
        for (std::size_t b = a + 1; b < line.size(); ++b)
            if (line[a] > line[b]) ++inv;
    return inv;
}

int Permutation::two_cycles() const {
    int k = 0;
    for (auto [i, v] : moved_)
        if (i < v && (*this)(v) == i) ++k;
    return k;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::set<int> done;
    for (auto [i, v] : moved_) {
        if (done.count(i)) continue;
        std::vector<int> c;
        for (int j = i; !done.count(j); j = (*this)(j)) {
            done.insert(j);
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::to_string() const {
    if (moved_.empty()) return "1";
    std::ostringstream os;
    for (const auto& c : cycles()) {
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
        os << ')';
    }
    return os.str();
}

// -------------------------------------------------------------- FpfInvolution

FpfInvolution FpfInvolution::from_cycles(const std::vector<std::pair<int, int>>& cycles) {
    std::map<int, int> m;
    for (auto [a, b] : cycles) {
        if (a == b) throw input_error("fpf involution: fixed point " + std::to_string(a));
        if (m.count(a) || m.count(b))
            throw input_error("fpf involution: overlapping cycles at (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
        m[a] = b;
        m[b] = a;
    }
    FpfInvolution p;
    for (auto [i, v] : m)
        if (v != base(i)) p.over_.emplace_back(i, v);
    for (auto [i, v] : p.over_) {
        int partner = base(i);
        bool covered = std::binary_search(p.over_.begin(), p.over_.end(),
                                          std::pair{partner, 0}, pair_key_less);
        if (!covered)
            throw input_error("fpf involution: " + std::to_string(partner) +
                              " would be matched both to " + std::to_string(i) +
                              " (by 1_fpf) and elsewhere");
    }
    return p;
}

int FpfInvolution::operator()(int i) const {
    auto it = std::lower_bound(over_.begin(), over_.end(), std::pair{i, 0}, pair_key_less);
    if (it != over_.end() && it->first == i) return it->second;
    return base(i);
}

std::pair<int, int> FpfInvolution::window() const {
    if (over_.empty()) return {1, 0};
    int lo = over_.front().first, hi = over_.back().first;
    if (lo % 2 == 0) --lo;
    if (hi % 2 != 0) ++hi;
    return {lo, hi};
}

FpfInvolution FpfInvolution::conjugate(int i) const {
    auto [wlo, whi] = window();
    int lo = std::min(over_.empty() ? i : wlo, i) - 2;
    int hi = std::max(over_.empty() ? i + 1 : whi, i + 1) + 2;
    auto s = [i](int j) { return j == i ? i + 1 : (j == i + 1 ? i : j); };
    FpfInvolution out;
    for (int j = lo; j <= hi; ++j) {
        int v = s((*this)(s(j)));
        if (v != base(j)) out.over_.emplace_back(j, v);
    }
    return out;
}

std::vector<std::pair<int, int>> FpfInvolution::cycles() const {
    std::vector<std::pair<int, int>> out;
    for (auto [i, v] : over_)
        if (i < v) out.emplace_back(i, v);
    return out;
}

Permutation FpfInvolution::restriction(int& m, int min_m) const {
    auto [lo, hi] = window();
    m = std::max(min_m, 0);
    if (!over_.empty()) m = std::max({m, 1 - lo, hi});
    if (m % 2 != 0) ++m;
    std::vector<std::pair<int, int>> pairs;
    for (int j = -m + 1; j <= m; ++j) pairs.emplace_back(j, (*this)(j));
    return Permutation::from_pairs(std::move(pairs));
}

int FpfInvolution::length() const {
    int m = 0;
    Permutation sigma = restriction(m);
    return (sigma.length() - m) / 2;
}

std::string FpfInvolution::to_string() const {
    if (over_.empty()) return "1fpf";
    std::ostringstream os;
    for (auto [a, b] : cycles()) os << '(' << a << ',' << b << ')';
    return os.str();
}

// ---------------------------------------------------------------------- words

Permutation simple_transposition(int i) { return Permutation{}.times_s(i); }

Permutation demazure_step(const Permutation& p, int i) {
    return p(i) < p(i + 1) ? p.times_s(i) : p;
}

Permutation rtimes_step(const Permutation& p, int i) {
    Permutation right = p.times_s(i);
    Permutation left = p.s_times(i);
    if (right != left) return left.times_s(i);
    return right;
}

Permutation word_to_permutation(const Word& w) {
    Permutation p;
    for (int i : w) p = p.times_s(i);
    return p;
}

bool is_reduced_word(const Word& w) {
    return word_to_permutation(w).length() == static_cast<int>(w.size());
}

std::optional<Permutation> involution_of_word(const Word& w) {
    Permutation p;
    for (int i : w) {
        if (p(i) > p(i + 1)) return std::nullopt;
        p = rtimes_step(p, i);
    }
    return p;
}

bool is_involution_word(const Word& w) { return involution_of_word(w).has_value(); }

std::optional<FpfInvolution> fpf_of_word(const Word& w) {
    FpfInvolution p;
    for (int i : w) {
        if (p(i) > p(i + 1)) return std::nullopt;
        p = p.conjugate(i);
    }
    return p;
}

bool is_fpf_involution_word(const Word& w) { return fpf_of_word(w).has_value(); }

bool word_in_class(const Word& w, const Permutation& p, Flavor flavor) {
    switch (flavor) {
        case Flavor::reduced:
            return is_reduced_word(w) && word_to_permutation(w) == p;
        case Flavor::involution: {
            auto q = involution_of_word(w);
            return q && *q == p;
        }
        case Flavor::fpf: break;
    }
    throw input_error("word_in_class: fpf flavor needs an FpfInvolution");
}

bool word_in_class(const Word& w, const FpfInvolution& p) {
    auto q = fpf_of_word(w);
    return q && *q == p;
}

namespace {

// Right descents i of a map f agreeing with id or 1_fpf outside [lo, hi].
template <class F>
std::vector<int> descents_in(const F& f, int lo, int hi) {
    std::vector<int> out;
    for (int i = lo - 1; i <= hi; ++i)
        if (f(i) > f(i + 1)) out.push_back(i);
    return out;
}

using WordList = std::vector<Word>;

const WordList& reduced_rec(const Permutation& p, std::map<Permutation, WordList>& memo) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    WordList out;
    if (p.is_identity()) {
        out.push_back({});
    } else {
        auto [lo, hi] = p.bounds();
        for (int i : descents_in(p, lo, hi)) {
            WordList sub = reduced_rec(p.times_s(i), memo);
            for (auto& w : sub) {
                w.push_back(i);
                out.push_back(std::move(w));
            }
        }
    }
    return memo[p] = std::move(out);
}

const WordList& involution_rec(const Permutation& p, std::map<Permutation, WordList>& memo) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    WordList out;
    if (p.is_identity()) {
        out.push_back({});
    } else {
        auto [lo, hi] = p.bounds();
        for (int i : descents_in(p, lo, hi)) {
            // p commutes with s_i exactly when (i, i+1) is a cycle of p.
            Permutation prev = p(i) == i + 1 ? p.times_s(i) : p.s_times(i).times_s(i);
            WordList sub = involution_rec(prev, memo);
            for (auto& w : sub) {
                w.push_back(i);
                out.push_back(std::move(w));
            }
        }
    }
    return memo[p] = std::move(out);
}

const WordList& fpf_rec(const FpfInvolution& p, std::map<FpfInvolution, WordList>& memo) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    WordList out;
    if (p.is_base()) {
        out.push_back({});
    } else {
        auto [lo, hi] = p.window();
        for (int i : descents_in(p, lo, hi)) {
            if (p(i) == i + 1) continue;
            WordList sub = fpf_rec(p.conjugate(i), memo);
            for (auto& w : sub) {
                w.push_back(i);
                out.push_back(std::move(w));
            }
        }
    }
    return memo[p] = std::move(out);
}

}  // namespace

std::set<Word> enumerate_words(const Permutation& p, Flavor flavor) {
    std::map<Permutation, WordList> memo;
    switch (flavor) {
        case Flavor::reduced: {
            const auto& ws = reduced_rec(p, memo);
            return {ws.begin(), ws.end()};
        }
        case Flavor::involution: {
            if (!p.is_involution())
                throw input_error("enumerate_words: " + p.to_string() + " is not an involution");
            const auto& ws = involution_rec(p, memo);
            return {ws.begin(), ws.end()};
        }
        case Flavor::fpf: break;
    }
    throw input_error("enumerate_words: fpf flavor needs an FpfInvolution");
}

std::set<Word> enumerate_words(const FpfInvolution& p) {
    std::map<FpfInvolution, WordList> memo;
    const auto& ws = fpf_rec(p, memo);
    return {ws.begin(), ws.end()};
}

std::set<Permutation> atoms(const Permutation& p) {
    std::set<Permutation> out;
    for (const auto& w : enumerate_words(p, Flavor::involution)) out.insert(word_to_permutation(w));
    return out;
}

std::set<Permutation> atoms(const FpfInvolution& p) {
    std::set<Permutation> out;
    for (const auto& w : enumerate_words(p)) out.insert(word_to_permutation(w));
    return out;
}

std::vector<int> descent_set(const Word& w) {
    std::vector<int> out;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1] > w[k]) out.push_back(static_cast<int>(k));
    return out;
}

Word ck(const Word& w, int i) {
    if (i < 1 || i + 2 > static_cast<int>(w.size())) return w;
    Word v = w;
    int x = v[i - 1], y = v[i], z = v[i + 1];
    if (x == z) {
        if (y == x + 1 || y == x - 1) {
            v[i - 1] = y;
            v[i] = x;
            v[i + 1] = y;
        }
        return v;
    }
    if ((x < z && z < y) || (y < z && z < x)) {
        std::swap(v[i - 1], v[i]);  // acb <-> cab
    } else if ((z < x && x < y) || (y < x && x < z)) {
        std::swap(v[i], v[i + 1]);  // bca <-> bac
    }
    return v;
}

Word ck0_O(const Word& w) {
    if (w.size() < 2) return w;
    Word v = w;
    std::swap(v[0], v[1]);
    return v;
}

Word ck0_Sp(const Word& w) {
    if (w.size() < 2) return w;
    Word v = w;
    if (v[1] == v[0] + 1) {
        v[1] = v[0] - 1;
    } else if (v[1] == v[0] - 1) {
        v[1] = v[0] + 1;
    } else if ((v[0] - v[1]) % 2 == 0) {
        std::swap(v[0], v[1]);
    }
    return v;
}

namespace {

void braid_neighbours(const Word& w, std::vector<Word>& out) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (std::abs(w[k] - w[k + 1]) > 1) {
            Word v = w;
            std::swap(v[k], v[k + 1]);
            out.push_back(std::move(v));
        }
        if (k + 2 < w.size() && w[k] == w[k + 2] && std::abs(w[k] - w[k + 1]) == 1) {
            Word v = w;
            v[k] = v[k + 2] = w[k + 1];
            v[k + 1] = w[k];
            out.push_back(std::move(v));
        }
    }
}

}  // namespace

std::set<Word> equivalence_class(const Word& w, Relation r) {
    std::set<Word> seen{w};
    std::deque<Word> queue{w};
    std::vector<Word> next;
    while (!queue.empty()) {
        Word u = std::move(queue.front());
        queue.pop_front();
        next.clear();
        switch (r) {
            case Relation::K:
            case Relation::O:
            case Relation::Sp:
                for (int i = 1; i + 2 <= static_cast<int>(u.size()); ++i) next.push_back(ck(u, i));
                if (r == Relation::O) next.push_back(ck0_O(u));
                if (r == Relation::Sp) next.push_back(ck0_Sp(u));
                break;
            case Relation::braid:
            case Relation::braid_O:
            case Relation::braid_Sp:
                braid_neighbours(u, next);
                if (r == Relation::braid_O) next.push_back(ck0_O(u));
                if (r == Relation::braid_Sp && u.size() >= 2 && std::abs(u[1] - u[0]) == 1) {
                    Word v = u;
                    v[1] = 2 * u[0] - u[1];
                    next.push_back(std::move(v));
                }
                break;
        }
        for (auto& v : next)
            if (seen.insert(v).second) queue.push_back(std::move(v));
    }
    return seen;
}

LengthInvariants length_invariants(const Permutation& involution) {
    if (!involution.is_involution())
        throw input_error("length_invariants: " + involution.to_string() + " is not an involution");
    LengthInvariants li;
    li.ell = involution.length();
    li.kappa = involution.two_cycles();
    li.ell_flavor = (li.ell + li.kappa) / 2;
    return li;
}

LengthInvariants length_invariants(const FpfInvolution& p) {
    int m = 0;
    Permutation sigma = p.restriction(m);
    LengthInvariants li;
    li.ell = sigma.length();
    li.kappa = sigma.two_cycles();
    li.ell_flavor = (li.ell - m) / 2;
    return li;
}

Word star(const Word& w) {
    Word v;
    for (int a : w) v.push_back(-a);
    return v;
}

Permutation star(const Permutation& p) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, v] : p.support()) pairs.emplace_back(1 - i, 1 - v);
    return Permutation::from_pairs(std::move(pairs));
}

FpfInvolution star(const FpfInvolution& p) {
    std::vector<std::pair<int, int>> cyc;
    for (auto [a, b] : p.cycles()) cyc.emplace_back(1 - b, 1 - a);
    return FpfInvolution::from_cycles(cyc);
}

Word shift(int m, const Word& w) {
    Word v;
    for (int a : w) v.push_back(a + m);
    return v;
}

Permutation shift(int m, const Permutation& p) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, v] : p.support()) pairs.emplace_back(i + m, v + m);
    return Permutation::from_pairs(std::move(pairs));
}

FpfInvolution shift(int m, const FpfInvolution& p) {
    if (m % 2 != 0) throw input_error("shift: fpf-involutions only shift by even amounts");
    std::vector<std::pair<int, int>> cyc;
    for (auto [a, b] : p.cycles()) cyc.emplace_back(a + m, b + m);
    return FpfInvolution::from_cycles(cyc);
}

std::optional<std::vector<int>> inv_grassmannian_shape(const Permutation& p) {
    if (!p.is_involution()) return std::nullopt;
    if (p.is_identity()) return std::vector<int>{};
    std::vector<std::pair<int, int>> cyc;
    for (auto [i, v] : p.support()) {
        if (i < v) cyc.emplace_back(i, v);
    }
    // Every moved point lies in a 2-cycle, so cyc covers the support.
    int r = static_cast<int>(cyc.size());
    int m = cyc.front().first - 1;
    for (int k = 0; k < r; ++k) {
        if (cyc[k].first != m + 1 + k) return std::nullopt;
        if (k > 0 && cyc[k].second <= cyc[k - 1].second) return std::nullopt;
    }
    if (cyc.front().second <= m + r) return std::nullopt;
    std::vector<int> mu(r);
    for (int k = 0; k < r; ++k) mu[r - 1 - k] = cyc[k].second - m - r;
    return mu;
}

Permutation fpf_hat(const FpfInvolution& p) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, v] : p.overrides()) {
        int lo = std::min(i, v), hi = std::max(i, v);
        bool found = false;
        for (int j = lo + 1; j < hi && !found; ++j) found = j < p(j);
        if (found) pairs.emplace_back(i, v);
    }
    return Permutation::from_pairs(std::move(pairs));
}

std::optional<std::vector<int>> fpf_grassmannian_shape(const FpfInvolution& p) {
    if (p.is_base()) return std::vector<int>{};
    auto mu = inv_grassmannian_shape(fpf_hat(p));
    if (!mu) return std::nullopt;
    std::vector<int> nu;
    for (int part : *mu)
        if (part > 1) nu.push_back(part - 1);
    return nu;
}

std::string word_to_string(const Word& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](int a) { return a >= 0 && a <= 9; });
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!digits && k) s += ',';
        s += std::to_string(w[k]);
    }
    return s;
}

}  // namespace qcrys

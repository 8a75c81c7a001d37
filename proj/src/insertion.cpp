#include "qcrys/insertion.hpp"

#include <algorithm>
#include <map>

#include "qcrys/error.hpp"

namespace qcrys {

std::string insert_kind_name(InsertKind k) {
    switch (k) {
        case InsertKind::eg: return "eg";
        case InsertKind::oeg: return "oeg";
        case InsertKind::speg: return "speg";
        case InsertKind::hm: return "hm";
    }
    return "?";
}

Word concat(const Factorization& f) {
    Word w;
    for (const auto& part : f) w.insert(w.end(), part.begin(), part.end());
    return w;
}

Factorization singletons(const Word& w) {
    Factorization f;
    for (int a : w) f.push_back({a});
    return f;
}

bool is_increasing_factorization(const Factorization& f) {
    for (const auto& part : f)
        for (std::size_t k = 1; k < part.size(); ++k)
            if (part[k - 1] >= part[k]) return false;
    return true;
}

std::vector<Factorization> factorizations(const Word& w, int n) {
    std::vector<Factorization> out;
    if (n < 0) return out;
    Factorization cur;
    auto rec = [&](auto&& self, std::size_t start, int left) -> void {
        if (left == 0) {
            if (start == w.size()) out.push_back(cur);
            return;
        }
        std::size_t end = start;
        cur.emplace_back();
        for (;;) {
            self(self, end, left - 1);
            if (end == w.size()) break;
            if (end > start && w[end - 1] >= w[end]) break;
            cur.back().push_back(w[end]);
            ++end;
        }
        cur.pop_back();
    };
    rec(rec, 0, n);
    return out;
}

Factorization split(const Word& w, const std::vector<int>& lengths) {
    Factorization f;
    std::size_t pos = 0;
    for (int len : lengths) {
        if (len < 0 || pos + len > w.size()) throw input_error("factor lengths do not match word");
        f.emplace_back(w.begin() + pos, w.begin() + pos + len);
        pos += len;
    }
    if (pos != w.size()) throw input_error("factor lengths do not match word");
    return f;
}

std::string factorization_key(const Factorization& f) {
    std::string s;
    for (const auto& part : f) s += "(" + word_to_string(part) + ")";
    return s;
}

namespace {

// Working grid of raw letters; row x (1-based) starts in column x when shifted.
struct Grid {
    bool shifted;
    std::vector<std::vector<int>> rows;

    int start(int x) const { return shifted ? x : 1; }
    int rows_count() const { return static_cast<int>(rows.size()); }
    int& cell(int x, int y) { return rows[x - 1][y - start(x)]; }
    bool has(int x, int y) const {
        if (x < 1 || x > rows_count()) return false;
        int c = y - start(x);
        return c >= 0 && c < static_cast<int>(rows[x - 1].size());
    }
    int column_height(int y) const {
        int h = 0;
        while (has(h + 1, y)) ++h;
        return h;
    }
    // Adds a box at the end of row x, which must land in column y.
    void add(int x, int y, int v) {
        if (x == rows_count() + 1) rows.emplace_back();
        if (x > rows_count() || start(x) + static_cast<int>(rows[x - 1].size()) != y)
            throw invariant_error("insertion produced a non-shape");
        rows[x - 1].push_back(v);
        if (x > 1 && !has(x - 1, y)) throw invariant_error("insertion produced a non-shape");
    }
};

enum class Variant { eg, oeg, speg };

struct Placement {
    Box box;
    InsertStep step;
};

// Inserts a into g following the chosen rule; returns the new box.
Placement insert_letter(Grid& g, int a, Variant v) {
    Placement out;
    int x = a;
    bool column_mode = false;
    int r = 1;  // row index in row mode
    int c = 1;  // column index in column mode
    for (;;) {
        if (!column_mode) {
            if (r > g.rows_count()) {
                int y0 = g.start(r);
                g.add(r, y0, x);
                out.box = {r, y0};
                return out;
            }
            auto& row = g.rows[r - 1];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                int y0 = g.start(r) + static_cast<int>(row.size());
                g.add(r, y0, x);
                out.box = {r, y0};
                return out;
            }
            int y = *it;
            int col = g.start(r) + static_cast<int>(it - row.begin());
            bool diagonal = g.shifted && col == r;
            if (x == y) {
                if (diagonal && v == Variant::oeg) {
                    out.step.diagonal_hits.emplace_back(x, y);
                    column_mode = true;
                    c = col + 1;
                } else {
                    ++r;
                }
                x = y + 1;
                continue;
            }
            // x < y
            if (diagonal) {
                out.step.diagonal_hits.emplace_back(x, y);
                column_mode = true;
                c = col + 1;
                if (v == Variant::speg && y == x + 1) {
                    x = y + 1;
                } else {
                    *it = x;
                    x = y;
                }
                continue;
            }
            *it = x;
            x = y;
            ++r;
        } else {
            out.step.column_inserted = true;
            int h = g.column_height(c);
            int found = 0;
            for (int k = 1; k <= h; ++k)
                if (g.cell(k, c) >= x) {
                    found = k;
                    break;
                }
            if (found == 0) {
                g.add(h + 1, c, x);
                out.box = {h + 1, c};
                return out;
            }
            int& cell = g.cell(found, c);
            int y = cell;
            if (x < y) cell = x;
            x = (x == y) ? y + 1 : y;
            ++c;
        }
    }
}

InsertionResult run(const Factorization& f, Variant v) {
    Grid g{v != Variant::eg, {}};
    Tableau Q;
    Q.shifted = g.shifted;
    InsertionResult res;
    for (std::size_t j = 0; j < f.size(); ++j) {
        int label = static_cast<int>(j) + 1;
        for (int a : f[j]) {
            Placement p = insert_letter(g, a, v);
            int e = p.step.column_inserted ? primed(label) : unprimed(label);
            auto [bx, by] = p.box;
            if (bx == static_cast<int>(Q.rows.size()) + 1) Q.rows.emplace_back();
            if (bx > static_cast<int>(Q.rows.size()) ||
                Q.row_start(bx) + static_cast<int>(Q.rows[bx - 1].size()) != by)
                throw invariant_error("recording tableau out of step");
            Q.rows[bx - 1].push_back(e);
            res.trace.push_back(std::move(p.step));
        }
    }
    res.P.shifted = g.shifted;
    for (const auto& row : g.rows) {
        std::vector<int> enc;
        for (int a : row) enc.push_back(unprimed(a));
        res.P.rows.push_back(std::move(enc));
    }
    res.Q = std::move(Q);
    return res;
}

void require_increasing(const Factorization& f) {
    if (!is_increasing_factorization(f))
        throw input_error("factors of " + factorization_key(f) + " are not strictly increasing");
}

}  // namespace

InsertionResult eg_insert(const Factorization& f, bool check) {
    if (check) {
        require_increasing(f);
        if (!is_reduced_word(concat(f)))
            throw input_error(word_to_string(concat(f)) + " is not a reduced word");
    }
    return run(f, Variant::eg);
}

InsertionResult oeg_insert(const Factorization& f, bool check) {
    if (check) {
        require_increasing(f);
        if (!is_involution_word(concat(f)))
            throw input_error(word_to_string(concat(f)) + " is not an involution word");
    }
    return run(f, Variant::oeg);
}

InsertionResult speg_insert(const Factorization& f, bool check) {
    if (check) {
        require_increasing(f);
        if (!is_fpf_involution_word(concat(f)))
            throw input_error(word_to_string(concat(f)) + " is not an fpf-involution word");
    }
    return run(f, Variant::speg);
}

InsertionResult hm_insert(const Word& w) {
    Tableau P;
    P.shifted = true;
    Tableau Q;
    Q.shifted = true;
    InsertionResult res;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (w[pos] < 1) throw input_error("mixed insertion needs positive letters");
        int x = unprimed(w[pos]);
        bool column_mode = false;
        int r = 1;
        int c = 1;
        InsertStep step;
        Box placed{};
        auto height = [&](int y) {
            int h = 0;
            while (P.contains(h + 1, y)) ++h;
            return h;
        };
        for (;;) {
            if (!column_mode) {
                if (r > static_cast<int>(P.rows.size())) {
                    P.rows.push_back({x});
                    placed = {r, r};
                    break;
                }
                auto& row = P.rows[r - 1];
                auto it = std::upper_bound(row.begin(), row.end(), x);
                if (it == row.end()) {
                    placed = {r, r + static_cast<int>(row.size())};
                    row.push_back(x);
                    break;
                }
                int col = r + static_cast<int>(it - row.begin());
                int y = *it;
                *it = x;
                if (col == r) {
                    step.diagonal_hits.emplace_back(value_of(x), value_of(y));
                    x = toggle_prime(y);
                    column_mode = true;
                    c = col + 1;
                } else if (is_primed(y)) {
                    x = y;
                    column_mode = true;
                    c = col + 1;
                } else {
                    x = y;
                    ++r;
                }
            } else {
                step.column_inserted = true;
                int h = height(c);
                int found = 0;
                for (int k = 1; k <= h; ++k)
                    if (P.at(k, c) > x) {
                        found = k;
                        break;
                    }
                if (found == 0) {
                    if (h + 1 == static_cast<int>(P.rows.size()) + 1) P.rows.emplace_back();
                    if (!(P.row_start(h + 1) + static_cast<int>(P.rows[h].size()) == c))
                        throw invariant_error("mixed insertion produced a non-shape");
                    P.rows[h].push_back(x);
                    placed = {h + 1, c};
                    break;
                }
                int y = P.at(found, c);
                P.set(found, c, x);
                x = y;
                if (is_primed(y)) {
                    ++c;
                } else {
                    column_mode = false;
                    r = found + 1;
                }
            }
        }
        auto [bx, by] = placed;
        if (bx == static_cast<int>(Q.rows.size()) + 1) Q.rows.emplace_back();
        if (Q.row_start(bx) + static_cast<int>(Q.rows[bx - 1].size()) != by)
            throw invariant_error("recording tableau out of step");
        Q.rows[bx - 1].push_back(unprimed(static_cast<int>(pos) + 1));
        res.trace.push_back(std::move(step));
    }
    res.P = std::move(P);
    res.Q = std::move(Q);
    return res;
}

InsertionResult insert(InsertKind kind, const Factorization& f, bool check) {
    switch (kind) {
        case InsertKind::eg: return eg_insert(f, check);
        case InsertKind::oeg: return oeg_insert(f, check);
        case InsertKind::speg: return speg_insert(f, check);
        case InsertKind::hm: return hm_insert(concat(f));
    }
    throw input_error("unknown insertion kind");
}

namespace {

std::vector<int> factor_lengths(const Tableau& Q) {
    std::map<int, int> count;
    int top = 0;
    for (const auto& row : Q.rows)
        for (int e : row) {
            ++count[value_of(e)];
            top = std::max(top, value_of(e));
        }
    std::vector<int> lengths;
    for (int j = 1; j <= top; ++j) lengths.push_back(count.count(j) ? count[j] : 0);
    return lengths;
}

}  // namespace

std::optional<Factorization> invert_insertion(const Tableau& P, const Tableau& Q, InsertKind kind, int factors) {
    if (P.shape() != Q.shape()) return std::nullopt;
    if (kind == InsertKind::hm) {
        int n = 0;
        for (const auto& row : P.rows)
            for (int e : row) n = std::max(n, value_of(e));
        int m = P.size();
        Word w(static_cast<std::size_t>(m), 1);
        if (m == 0) return Factorization{Word{}};
        for (;;) {
            auto res = hm_insert(w);
            if (res.P == P && res.Q == Q) return Factorization{w};
            int k = m - 1;
            while (k >= 0 && w[k] == n) w[k--] = 1;
            if (k < 0) break;
            ++w[k];
        }
        return std::nullopt;
    }

    Relation rel = kind == InsertKind::eg ? Relation::K : kind == InsertKind::oeg ? Relation::O : Relation::Sp;
    Word seed;
    for (int e : row_word(P)) seed.push_back(e);
    auto valid = [&](const Word& w) {
        switch (kind) {
            case InsertKind::eg: return is_reduced_word(w);
            case InsertKind::oeg: return is_involution_word(w);
            default: return is_fpf_involution_word(w);
        }
    };
    if (!valid(seed)) return std::nullopt;
    std::vector<int> lengths = factor_lengths(Q);
    if (static_cast<int>(lengths.size()) > factors && factors > 0) return std::nullopt;
    lengths.resize(std::max<std::size_t>(lengths.size(), std::max(factors, 0)), 0);
    std::set<Word> cls = equivalence_class(seed, rel);
    for (const Word& w : cls) {
        Factorization f = split(w, lengths);
        if (!is_increasing_factorization(f)) continue;
        auto res = insert(kind, f, false);
        if (res.P == P && res.Q == Q) return f;
    }
    return std::nullopt;
}

}  // namespace qcrys

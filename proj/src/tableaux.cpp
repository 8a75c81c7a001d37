#include "qcrys/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qcrys/error.hpp"

namespace qcrys {

std::string entry_to_string(int e) {
    return std::to_string(value_of(e)) + (is_primed(e) ? "'" : "");
}

int entry_from_string(const std::string& s) {
    std::string body = s;
    bool prime = !body.empty() && body.back() == '\'';
    if (prime) body.pop_back();
    if (body.empty()) throw input_error("empty tableau entry");
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(body, &used);
    } catch (const std::exception&) {
        throw input_error("bad tableau entry '" + s + "'");
    }
    if (used != body.size()) throw input_error("bad tableau entry '" + s + "'");
    return prime ? primed(k) : unprimed(k);
}

// --------------------------------------------------------------------- Tableau

bool Tableau::contains(int x, int y) const {
    if (x < 1 || x > static_cast<int>(rows.size())) return false;
    int c = y - row_start(x);
    return c >= 0 && c < static_cast<int>(rows[x - 1].size());
}

int Tableau::at(int x, int y) const { return rows[x - 1][y - row_start(x)]; }

std::optional<int> Tableau::get(int x, int y) const {
    if (!contains(x, y)) return std::nullopt;
    return at(x, y);
}

void Tableau::set(int x, int y, int e) { rows[x - 1][y - row_start(x)] = e; }

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

int Tableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

std::vector<Box> Tableau::boxes() const {
    std::vector<Box> out;
    for (int x = 1; x <= static_cast<int>(rows.size()); ++x)
        for (std::size_t c = 0; c < rows[x - 1].size(); ++c)
            out.emplace_back(x, row_start(x) + static_cast<int>(c));
    return out;
}

void Tableau::append(int x, int e) {
    if (x == static_cast<int>(rows.size()) + 1) rows.emplace_back();
    rows.at(x - 1).push_back(e);
}

namespace {

std::vector<std::string> split_row(const std::string& row) {
    std::vector<std::string> tokens;
    std::string cur;
    bool separated = row.find_first_of(", ") != std::string::npos;
    for (char ch : row) {
        if (ch == ' ' || ch == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else if (!separated && ch != '\'' && !cur.empty()) {
            tokens.push_back(cur);
            cur = std::string(1, ch);
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

}  // namespace

Tableau parse_tableau(const std::string& text, bool shifted) {
    Tableau t;
    t.shifted = shifted;
    std::string trimmed = text;
    std::erase_if(trimmed, [](char c) { return c == '\n' || c == '\t'; });
    if (trimmed.empty() || trimmed == "()" || trimmed == "{}") return t;
    std::stringstream ss(trimmed);
    std::string row;
    while (std::getline(ss, row, '/')) {
        std::vector<int> r;
        for (const auto& tok : split_row(row)) r.push_back(entry_from_string(tok));
        if (r.empty()) throw input_error("empty row in tableau '" + text + "'");
        t.rows.push_back(std::move(r));
    }
    for (std::size_t x = 1; x < t.rows.size(); ++x) {
        bool ok = shifted ? t.rows[x].size() < t.rows[x - 1].size()
                          : t.rows[x].size() <= t.rows[x - 1].size();
        if (!ok) throw input_error("tableau '" + text + "' does not have a valid shape");
    }
    return t;
}

std::string tableau_key(const Tableau& t) {
    std::string s;
    for (std::size_t x = 0; x < t.rows.size(); ++x) {
        if (x) s += '/';
        for (std::size_t c = 0; c < t.rows[x].size(); ++c) {
            if (c) s += ',';
            s += entry_to_string(t.rows[x][c]);
        }
    }
    return s;
}

std::string tableau_pretty(const Tableau& t) {
    std::size_t width = 1;
    for (const auto& r : t.rows)
        for (int e : r) width = std::max(width, entry_to_string(e).size());
    std::string out;
    for (int x = static_cast<int>(t.rows.size()); x >= 1; --x) {
        std::string line(static_cast<std::size_t>(t.row_start(x) - 1) * (width + 1), ' ');
        for (int e : t.rows[x - 1]) {
            std::string s = entry_to_string(e);
            line += s + std::string(width + 1 - s.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

// ------------------------------------------------------------------ predicates

bool is_semistandard(const Tableau& t) {
    for (auto [x, y] : t.boxes()) {
        int e = t.at(x, y);
        if (t.shifted) {
            if (e < 1) return false;
            if (is_primed(e) && x == y) return false;
        } else if (is_primed(e)) {
            return false;
        }
        if (auto left = t.get(x, y - 1)) {
            if (*left > e) return false;
            if (t.shifted && is_primed(e) && *left == e) return false;
        }
        if (auto below = t.get(x - 1, y)) {
            if (*below > e) return false;
            if (*below == e && (!t.shifted || !is_primed(e))) return false;
        }
    }
    return true;
}

bool is_increasing(const Tableau& t) {
    for (auto [x, y] : t.boxes()) {
        int e = t.at(x, y);
        if (is_primed(e)) return false;
        if (auto left = t.get(x, y - 1); left && *left >= e) return false;
        if (auto below = t.get(x - 1, y); below && *below >= e) return false;
    }
    return true;
}

bool is_standard(const Tableau& t) {
    int m = t.size();
    std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
    for (const auto& r : t.rows)
        for (int e : r) {
            int k = value_of(e);
            if (k < 1 || k > m || seen[k]++) return false;
        }
    return t.shifted ? is_semistandard(t) : is_increasing(t);
}

// --------------------------------------------------------------- reading words

Word row_word(const Tableau& t) {
    Word w;
    for (int x = static_cast<int>(t.rows.size()); x >= 1; --x)
        for (int e : t.rows[x - 1]) w.push_back(value_of(e));
    return w;
}

Word col_word(const Tableau& t) {
    Word w;
    int maxcol = 0;
    for (auto [x, y] : t.boxes()) maxcol = std::max(maxcol, y);
    for (int y = 1; y <= maxcol; ++y)
        for (int x = static_cast<int>(t.rows.size()); x >= 1; --x)
            if (t.contains(x, y)) w.push_back(value_of(t.at(x, y)));
    return w;
}

std::vector<Box> shword_boxes(const Tableau& t) {
    int rows = static_cast<int>(t.rows.size());
    int q = rows;
    for (auto [x, y] : t.boxes()) q = std::max(q, y);
    std::vector<Box> out;
    for (int i = q; i >= 1; --i) {
        for (int x = 1; x <= rows; ++x)
            if (t.contains(x, i) && is_primed(t.at(x, i))) out.emplace_back(x, i);
        if (i <= rows)
            for (int y = t.row_start(i); t.contains(i, y); ++y)
                if (!is_primed(t.at(i, y))) out.emplace_back(i, y);
    }
    return out;
}

Word shword(const Tableau& t) {
    Word w;
    for (auto [x, y] : shword_boxes(t)) w.push_back(value_of(t.at(x, y)));
    return w;
}

std::optional<Box> box_of(const Tableau& t, int k) {
    for (auto [x, y] : t.boxes())
        if (value_of(t.at(x, y)) == k) return Box{x, y};
    return std::nullopt;
}

namespace {

void require_standard_shifted(const Tableau& t, const char* what) {
    if (!t.shifted || !is_standard(t))
        throw input_error(std::string(what) + ": expected a standard shifted tableau");
}

}  // namespace

std::vector<int> tableau_descents(const Tableau& t) {
    require_standard_shifted(t, "tableau_descents");
    Word w = shword(t);
    std::vector<int> pos(w.size() + 2, 0);
    for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = static_cast<int>(k);
    std::vector<int> out;
    for (int i = 1; i + 1 <= static_cast<int>(w.size()); ++i)
        if (pos[i] > pos[i + 1]) out.push_back(i);
    return out;
}

std::vector<int> tableau_descents_by_cases(const Tableau& t) {
    require_standard_shifted(t, "tableau_descents_by_cases");
    std::vector<int> out;
    for (int i = 1; i < t.size(); ++i) {
        auto [xa, ya] = *box_of(t, i);
        auto [xb, yb] = *box_of(t, i + 1);
        bool pa = is_primed(t.at(xa, ya)), pb = is_primed(t.at(xb, yb));
        bool des = (!pa && !pb && xb > xa) || (pa && pb && yb > ya) || (!pa && pb);
        if (des) out.push_back(i);
    }
    return out;
}

std::vector<int> weight(const Tableau& t, int n) {
    std::vector<int> wt(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (const auto& r : t.rows)
        for (int e : r) {
            int k = value_of(e);
            if (k < 1 || k > n)
                throw input_error("weight: entry " + entry_to_string(e) + " outside [1," +
                                  std::to_string(n) + "]");
            ++wt[k - 1];
        }
    return wt;
}

// ------------------------------------------------------------------ enumeration

std::vector<std::vector<int>> partitions(int m, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<std::vector<int>> strict_partitions(int m, int max_parts) {
    auto all = partitions(m, max_parts);
    std::erase_if(all, [](const std::vector<int>& p) {
        return std::adjacent_find(p.begin(), p.end()) != p.end();
    });
    return all;
}

namespace {

Tableau empty_of_shape(const std::vector<int>& shape, bool shifted) {
    Tableau t;
    t.shifted = shifted;
    for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
    return t;
}

// Fills boxes in row order; each candidate is checked against its left and
// lower neighbours only, which suffices because rows and columns are weakly
// increasing.
void fill(Tableau& t, const std::vector<Box>& order, std::size_t k, int lo_code, int hi_code,
          std::vector<Tableau>& out) {
    if (k == order.size()) {
        out.push_back(t);
        return;
    }
    auto [x, y] = order[k];
    for (int e = lo_code; e <= hi_code; ++e) {
        if (!t.shifted && is_primed(e)) continue;
        if (t.shifted && is_primed(e) && x == y) continue;
        if (auto left = t.get(x, y - 1)) {
            if (*left > e) continue;
            if (t.shifted && is_primed(e) && *left == e) continue;
        }
        if (auto below = t.get(x - 1, y)) {
            if (*below > e) continue;
            if (*below == e && !is_primed(e)) continue;
        }
        t.set(x, y, e);
        fill(t, order, k + 1, lo_code, hi_code, out);
    }
    t.set(x, y, 0);
}

}  // namespace

std::vector<Tableau> plain_tableaux(const std::vector<int>& lambda, int n) {
    Tableau t = empty_of_shape(lambda, false);
    std::vector<Tableau> out;
    if (static_cast<int>(lambda.size()) > n) return out;
    fill(t, t.boxes(), 0, unprimed(1), unprimed(n), out);
    return out;
}

std::vector<Tableau> shifted_tableaux(const std::vector<int>& mu, int n) {
    Tableau t = empty_of_shape(mu, true);
    std::vector<Tableau> out;
    fill(t, t.boxes(), 0, primed(1), unprimed(n), out);
    return out;
}

std::vector<Tableau> standard_shifted(const std::vector<int>& mu, bool primes_allowed) {
    Tableau t = empty_of_shape(mu, true);
    int m = t.size();
    std::vector<Tableau> bases;
    // Place 1..m one at a time into cells whose left and lower neighbours are filled.
    std::function<void(int)> grow = [&](int k) {
        if (k > m) {
            bases.push_back(t);
            return;
        }
        for (auto [x, y] : t.boxes()) {
            if (t.at(x, y) != 0) continue;
            auto left = t.get(x, y - 1);
            auto below = t.get(x - 1, y);
            if ((left && *left == 0) || (below && *below == 0)) continue;
            t.set(x, y, unprimed(k));
            grow(k + 1);
            t.set(x, y, 0);
        }
    };
    grow(1);
    if (!primes_allowed) return bases;
    std::vector<Tableau> out;
    for (const auto& b : bases) {
        std::vector<Box> off;
        for (auto [x, y] : b.boxes())
            if (x != y) off.emplace_back(x, y);
        for (unsigned mask = 0; mask < (1u << off.size()); ++mask) {
            Tableau c = b;
            for (std::size_t j = 0; j < off.size(); ++j)
                if (mask >> j & 1u) c.set(off[j].first, off[j].second, c.at(off[j].first, off[j].second) - 1);
            out.push_back(std::move(c));
        }
    }
    return out;
}

// ------------------------------------------------------------ dual equivalence

Tableau star_op(const Tableau& t, int i) {
    require_standard_shifted(t, "star_op");
    if (i < 1 || i >= t.size()) throw input_error("star_op: index out of range");
    Box a = *box_of(t, i), b = *box_of(t, i + 1);
    Tableau out = t;
    if (a.first == b.first || a.second == b.second) {
        if (a.first != a.second) out.set(a.first, a.second, toggle_prime(t.at(a.first, a.second)));
        if (b.first != b.second) out.set(b.first, b.second, toggle_prime(t.at(b.first, b.second)));
    } else {
        out.set(a.first, a.second, t.at(a.first, a.second) + 2);
        out.set(b.first, b.second, t.at(b.first, b.second) - 2);
    }
    return out;
}

Tableau dual_equiv(const Tableau& t, int i) {
    require_standard_shifted(t, "dual_equiv");
    int n = t.size();
    if (i < 0 || i + 1 < 1 || i + 1 > n - 1) return t;
    if (i == 0) return star_op(t, 1);
    Word w = shword(t);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = static_cast<int>(k);
    auto between = [&](int b, int a, int c) {
        return (pos[a] < pos[b] && pos[b] < pos[c]) || (pos[c] < pos[b] && pos[b] < pos[a]);
    };
    if (between(i + 2, i, i + 1)) return star_op(t, i);
    if (between(i, i + 1, i + 2)) return star_op(t, i + 1);
    return t;
}

}  // namespace qcrys

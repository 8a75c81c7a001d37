#include "qcrys/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "qcrys/error.hpp"

namespace qcrys {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const std::string& context) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw input_error("");
        return v;
    } catch (const std::exception&) {
        throw input_error("bad integer '" + tok + "' in " + context);
    }
}

std::vector<int> parse_ints(const std::string& text, const std::string& context) {
    std::string s = trim(text);
    std::vector<int> out;
    if (s.empty()) return out;
    bool separated = s.find_first_of(", ") != std::string::npos;
    if (!separated) {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw input_error("bad character in " + context + ": " + s);
            out.push_back(c - '0');
        }
        return out;
    }
    std::string tok;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream ws(s);
    while (ws >> tok) out.push_back(parse_int(tok, context));
    return out;
}

// Splits "(a)(b)..." into the group bodies.
std::vector<std::string> groups(const std::string& text, const std::string& context) {
    std::vector<std::string> out;
    std::string s = trim(text);
    std::size_t k = 0;
    while (k < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[k]))) {
            ++k;
            continue;
        }
        if (s[k] != '(') throw input_error("expected '(' in " + context + ": " + s);
        auto close = s.find(')', k);
        if (close == std::string::npos) throw input_error("unbalanced parentheses in " + context + ": " + s);
        out.push_back(s.substr(k + 1, close - k - 1));
        k = close + 1;
    }
    return out;
}

}  // namespace

Word parse_word(const std::string& text) { return parse_ints(text, "word"); }

Factorization parse_factorization(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) return {};
    if (s[0] != '(') return singletons(parse_word(s));
    Factorization f;
    for (const auto& g : groups(s, "factorization")) f.push_back(parse_word(g));
    return f;
}

Permutation parse_permutation(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    for (const auto& g : groups(text, "permutation")) {
        auto c = parse_ints(g, "cycle");
        if (!c.empty()) cycles.push_back(c);
    }
    return Permutation::from_cycles(cycles);
}

FpfInvolution parse_fpf(const std::string& text) {
    std::vector<std::pair<int, int>> cycles;
    for (const auto& g : groups(text, "fpf-involution")) {
        auto c = parse_ints(g, "cycle");
        if (c.empty()) continue;
        if (c.size() != 2) throw input_error("fpf-involution cycles must be 2-cycles");
        cycles.emplace_back(c[0], c[1]);
    }
    return FpfInvolution::from_cycles(cycles);
}

std::vector<int> parse_shape(const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    auto shape = parse_ints(s, "shape");
    for (std::size_t k = 0; k < shape.size(); ++k)
        if (shape[k] <= 0 || (k && shape[k] > shape[k - 1])) throw input_error("shape must be a partition: " + text);
    return shape;
}

InsertKind parse_insert_kind(const std::string& text) {
    for (auto k : {InsertKind::eg, InsertKind::oeg, InsertKind::speg, InsertKind::hm})
        if (text == insert_kind_name(k)) return k;
    throw input_error("unknown insertion flavor '" + text + "'");
}

std::string s_word(const Permutation& p) {
    Word w = *enumerate_words(p, Flavor::reduced).begin();
    if (w.empty()) return "1";
    std::string out;
    for (int a : w) out += "s" + std::to_string(a);
    return out;
}

namespace {

nlohmann::ordered_json tab_json(const Tableau& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int e : r) row.push_back(entry_to_string(e));
        rows.push_back(row);
    }
    return {{"key", tableau_key(t)}, {"shifted", t.shifted}, {"shape", t.shape()}, {"rows", rows}};
}

}  // namespace

std::string tableau_json(const Tableau& t) { return tab_json(t).dump(); }

std::string insertion_json(const InsertionResult& r, InsertKind kind, const Factorization& input) {
    nlohmann::ordered_json trace = nlohmann::ordered_json::array();
    for (const auto& s : r.trace) {
        nlohmann::ordered_json hits = nlohmann::ordered_json::array();
        for (auto [x, y] : s.diagonal_hits) hits.push_back({x, y});
        trace.push_back({{"column_inserted", s.column_inserted}, {"diagonal_hits", hits}});
    }
    nlohmann::ordered_json j = {{"flavor", insert_kind_name(kind)},
                                {"input", factorization_key(input)},
                                {"P", tab_json(r.P)},
                                {"Q", tab_json(r.Q)},
                                {"trace", trace}};
    return j.dump(2);
}

std::string insertion_text(const InsertionResult& r) {
    std::ostringstream os;
    os << "P = " << tableau_key(r.P) << "\n" << tableau_pretty(r.P) << "\n";
    os << "Q = " << tableau_key(r.Q) << "\n" << tableau_pretty(r.Q) << "\n";
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
        const auto& s = r.trace[k];
        os << "letter " << k + 1 << ": " << (s.column_inserted ? "column" : "row") << " inserted";
        for (auto [x, y] : s.diagonal_hits) os << ", diagonal (" << x << "," << y << ")";
        os << "\n";
    }
    return os.str();
}

std::string bump_json(const Word& w, const BumpTarget& t, const BumpTrace& tr,
                      const std::vector<Permutation>& atoms) {
    nlohmann::ordered_json chain = nlohmann::ordered_json::array();
    for (const auto& m : tr.chain) chain.push_back({{"word", word_to_string(m.word)}, {"mark", m.mark}});
    nlohmann::ordered_json as = nlohmann::ordered_json::array();
    for (const auto& a : atoms) as.push_back({{"word", s_word(a)}, {"cycles", a.to_string()}});
    nlohmann::ordered_json j = {{"flavor", flavor_name(t.flavor)},
                                {"pi", t.to_string()},
                                {"word", word_to_string(w)},
                                {"result", word_to_string(tr.result)},
                                {"chain", chain},
                                {"atoms", as}};
    return j.dump(2);
}

}  // namespace qcrys

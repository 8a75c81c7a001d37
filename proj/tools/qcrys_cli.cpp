#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcrys/bumping.hpp"
#include "qcrys/crystal.hpp"
#include "qcrys/error.hpp"
#include "qcrys/insertion.hpp"
#include "qcrys/io.hpp"
#include "qcrys/symchar.hpp"
#include "qcrys/verify.hpp"

using namespace qcrys;

namespace {

constexpr int exit_input = 2;
constexpr int exit_resource = 3;

// Short spellings accepted on the command line.
std::string canonical_flavor(const std::string& kind) {
    if (kind == "o") return "oeg";
    if (kind == "sp") return "speg";
    return kind;
}

Flavor flavor_of(const std::string& kind) {
    if (kind == "eg") return Flavor::reduced;
    if (kind == "oeg") return Flavor::involution;
    if (kind == "speg") return Flavor::fpf;
    throw input_error("flavor must be eg, oeg or speg here, not '" + kind + "'");
}

std::set<Word> words_of(const std::string& pi, Flavor flavor) {
    if (flavor == Flavor::fpf) return enumerate_words(parse_fpf(pi));
    return enumerate_words(parse_permutation(pi), flavor);
}

int ell_of(const std::string& pi, Flavor flavor) {
    if (flavor == Flavor::fpf) return length_invariants(parse_fpf(pi)).ell_flavor;
    Permutation p = parse_permutation(pi);
    return flavor == Flavor::reduced ? p.length() : length_invariants(p).ell_flavor;
}

void write_components(const CrystalGraph& g, const std::string& dir, const std::string& name, bool dot) {
    std::filesystem::create_directories(dir);
    auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        CrystalGraph sub = subgraph(g, comps[c]);
        std::string base = name + "_" + std::to_string(c + 1);
        std::filesystem::path path = std::filesystem::path(dir) / (base + (dot ? ".dot" : ".json"));
        std::ofstream out(path);
        if (!out) throw resource_error("cannot write " + path.string());
        out << (dot ? to_dot(sub, base) : to_json(sub)) << "\n";
        std::cout << "wrote " << path.string() << "\n";
    }
}

void describe(const CrystalGraph& g) {
    std::cout << "vertices: " << g.size() << "\n";
    std::cout << "edges: " << g.edges().size() << "\n";
    std::cout << "components: " << components(g).size() << "\n";
    Basis basis = g.queer ? Basis::schurP : Basis::schur;
    std::cout << "highest weights: " << expansion_to_string(highest_weight_counts(g), basis) << "\n";
    std::cout << "character: " << character(g).to_string() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Crystal operators on reduced, involution and fpf-involution words"};
    app.require_subcommand(1);

    std::string flavor = "eg";
    bool json = false;
    std::string input;

    auto* ins = app.add_subcommand("insert", "Insert a word or factorization");
    ins->add_option("input", input, "Word like 332332 or factorization like (4)(23)(12)");
    ins->add_option("--flavor", flavor, "eg, oeg, speg or hm")->check(CLI::IsMember({"eg", "oeg", "speg", "hm", "o", "sp"}));
    ins->add_flag("--json", json, "Print JSON");

    std::string pi, shape, dot_dir, json_dir;
    int n = 3;
    int cap = 0;
    auto* cry = app.add_subcommand("crystal", "Build a crystal graph");
    cry->add_option("--pi", pi, "Permutation in cycle notation");
    cry->add_option("--shape", shape, "Strict partition for ShTab_n");
    cry->add_option("--flavor", flavor, "eg, oeg or speg")->check(CLI::IsMember({"eg", "oeg", "speg", "o", "sp"}));
    cry->add_option("--n", n, "Rank")->check(CLI::Range(1, 9));
    cry->add_option("--dot", dot_dir, "Write one DOT file per component into this directory");
    cry->add_option("--json", json_dir, "Write one JSON file per component into this directory");
    cry->add_option("--cap", cap, "Vertex cap (default 200000 or QC_VERTEX_CAP)");

    std::string word;
    bool decompose = false;
    auto* bmp = app.add_subcommand("bump", "Apply a Little bump and print the push chain");
    bmp->add_option("word", word, "Word")->required();
    bmp->add_option("--pi", pi, "Target permutation in cycle notation")->required();
    bmp->add_option("--flavor", flavor, "eg, oeg or speg")->check(CLI::IsMember({"eg", "oeg", "speg", "o", "sp"}));
    bmp->add_flag("--decompose", decompose, "Also list the atoms of the bump");
    bmp->add_flag("--json", json, "Print JSON");

    std::string basis = "";
    auto* exp = app.add_subcommand("expand", "Expand a Stanley polynomial");
    exp->add_option("--pi", pi, "Permutation in cycle notation")->required();
    exp->add_option("--flavor", flavor, "eg, oeg or speg")->check(CLI::IsMember({"eg", "oeg", "speg", "o", "sp"}));
    exp->add_option("--n", n, "Number of variables (default l^K(pi))");
    exp->add_option("--basis", basis, "schur or schurP")->check(CLI::IsMember({"schur", "schurP"}));
    exp->add_flag("--json", json, "Print JSON");

    std::string target;
    VerifyBounds bounds;
    auto* ver = app.add_subcommand("verify", "Run an exhaustive verification target");
    ver->add_option("target", target, "Target name or 'all'")->required();
    ver->add_option("--maxlen", bounds.maxlen, "Length bound");
    ver->add_option("--n", bounds.n, "Largest rank");
    ver->add_option("--boxes", bounds.boxes, "Tableau size bound");

    std::string relation = "K";
    auto* cls = app.add_subcommand("class", "List an equivalence class of words");
    cls->add_option("word", word, "Word")->required();
    cls->add_option("--relation", relation, "K, O, Sp, braid, braid_O or braid_Sp")
        ->check(CLI::IsMember({"K", "O", "Sp", "braid", "braid_O", "braid_Sp"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }
    flavor = canonical_flavor(flavor);

    if (*ins) {
        InsertKind kind = parse_insert_kind(flavor);
        Factorization f = kind == InsertKind::hm ? Factorization{parse_word(input)} : parse_factorization(input);
        InsertionResult r = kind == InsertKind::hm ? hm_insert(concat(f)) : insert(kind, f);
        std::cout << (json ? insertion_json(r, kind, f) + "\n" : insertion_text(r));
        return 0;
    }

    if (*cry) {
        if (pi.empty() == shape.empty()) throw input_error("crystal needs exactly one of --pi and --shape");
        if (cap <= 0) cap = default_vertex_cap();
        CrystalGraph g;
        std::string name;
        if (!shape.empty()) {
            auto mu = parse_shape(shape);
            ShTabCrystal c{n};
            g = explore(c, shifted_tableaux(mu, n), cap).graph;
            name = "shtab";
        } else {
            Flavor fl = flavor_of(flavor);
            FactorizationKind kind = fl == Flavor::reduced      ? FactorizationKind::gl
                                     : fl == Flavor::involution ? FactorizationKind::O
                                                                : FactorizationKind::Sp;
            auto words = words_of(pi, fl);
            FactorizationCrystal c(n, kind);
            g = explore(c, factorizations_of(words, n), cap).graph;
            name = flavor;
        }
        if (!dot_dir.empty()) write_components(g, dot_dir, name, true);
        if (!json_dir.empty()) write_components(g, json_dir, name, false);
        describe(g);
        return 0;
    }

    if (*bmp) {
        Flavor fl = flavor_of(flavor);
        BumpTarget t = fl == Flavor::fpf        ? BumpTarget::fpf_involution(parse_fpf(pi))
                       : fl == Flavor::reduced ? BumpTarget::reduced(parse_permutation(pi))
                                               : BumpTarget::involution(parse_permutation(pi));
        Word w = parse_word(word);
        BumpTrace tr = bump_trace(w, t);
        std::vector<Permutation> atoms;
        if (decompose && fl != Flavor::reduced) atoms = decompose_bump(w, t);
        if (json) {
            std::cout << bump_json(w, t, tr, atoms) << "\n";
        } else {
            for (const auto& m : tr.chain) std::cout << word_to_string(m.word) << " mark " << m.mark << "\n";
            std::cout << "result: " << word_to_string(tr.result) << "\n";
            if (!atoms.empty()) {
                std::cout << "atoms:";
                for (const auto& a : atoms) std::cout << " " << s_word(a);
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (*exp) {
        Flavor fl = flavor_of(flavor);
        int ell = ell_of(pi, fl);
        int vars = exp->count("--n") ? n : std::max(ell, 1);
        if (vars < 1) throw input_error("--n must be positive");
        if (vars < ell)
            std::cerr << "warning: n = " << vars << " is below l^K(pi) = " << ell
                      << "; highest-weight counts need not match the coefficients\n";
        Basis b = basis.empty() ? (fl == Flavor::reduced ? Basis::schur : Basis::schurP)
                                : (basis == "schur" ? Basis::schur : Basis::schurP);
        Polynomial F = fl == Flavor::fpf ? stanley_poly(parse_fpf(pi), vars) : stanley_poly(parse_permutation(pi), fl, vars);
        Expansion e = expand(F, b);
        if (json) {
            nlohmann::ordered_json j = {{"basis", basis_name(b)},
                                        {"polynomial", nlohmann::ordered_json::parse(F.to_json())},
                                        {"coefficients", nlohmann::ordered_json::array()}};
            for (auto it = e.rbegin(); it != e.rend(); ++it)
                j["coefficients"].push_back({{"shape", it->first}, {"coefficient", it->second}});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "polynomial: " << F.to_string() << "\n";
            std::cout << "expansion: " << expansion_to_string(e, b) << "\n";
        }
        return 0;
    }

    if (*ver) {
        std::vector<std::string> targets;
        if (target == "all") targets = verify_target_names();
        else targets.push_back(target);
        int code = 0;
        for (const auto& t : targets) {
            VerifyReport r = run_verify(t, bounds);
            std::cout << r.summary() << "\n";
            for (const auto& f : r.failures) std::cout << "  counterexample: " << f << "\n";
            int c = r.exit_code();
            if (c == 1 || (c == 4 && code == 0)) code = c;
        }
        return code;
    }

    if (*cls) {
        static const std::map<std::string, Relation> rels = {{"K", Relation::K},         {"O", Relation::O},
                                                             {"Sp", Relation::Sp},       {"braid", Relation::braid},
                                                             {"braid_O", Relation::braid_O}, {"braid_Sp", Relation::braid_Sp}};
        for (const auto& w : equivalence_class(parse_word(word), rels.at(relation))) std::cout << word_to_string(w) << "\n";
        return 0;
    }
    return exit_input;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oqsym/classes.hpp"
#include "oqsym/partitions.hpp"
#include "oqsym/poset.hpp"
#include "oqsym/qsym.hpp"
#include "oqsym/verify.hpp"

namespace {

using namespace oqsym;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LabeledPoset labeled_from_file(const PosetFile& pf, const std::string& labeling) {
    if (labeling == "strict") return make_labeling(pf.poset, LabelingKind::strict);
    if (labeling == "weak") return make_labeling(pf.poset, LabelingKind::natural);
    if (!pf.labels)
        throw std::runtime_error("poset '" + pf.name + "' carries no labels; --labeling from-file needs them");
    return LabeledPoset(pf.poset, *pf.labels);
}

// Accepts both input formats: poset stanzas, or one parenthesized rooted
// tree per line (detected by the first meaningful character).
std::vector<PosetFile> load_poset_inputs(const std::string& path) {
    std::string text = slurp(path);
    std::istringstream probe(text);
    std::string line;
    char first = '\0';
    while (!first && std::getline(probe, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                first = c;
                break;
            }
    }
    std::istringstream in(text);
    if (first != '(') return parse_poset_stream(in);
    std::vector<PosetFile> out;
    for (const RootedTree& t : parse_tree_stream(in))
        out.push_back({t.encoding(), rooted_tree_to_poset(t), std::nullopt});
    return out;
}

int emit_report(const VerificationReport& report, bool json) {
    std::cout << (json ? report.json() : report.text());
    if (!json) std::cout.flush();
    std::cerr << "[" << report.suite << "] " << report.elapsed_seconds << " s\n";
    return report.pass() ? 0 : 1;
}

int emit_reports(const std::vector<VerificationReport>& reports, bool json) {
    bool ok = true;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const VerificationReport& r : reports) arr.push_back(nlohmann::json::parse(r.json()));
        std::cout << arr.dump() << "\n";
    }
    for (const VerificationReport& r : reports) {
        if (!json) std::cout << r.text() << "\n";
        std::cerr << "[" << r.suite << "] " << r.elapsed_seconds << " s\n";
        ok = ok && r.pass();
    }
    return ok ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic for quasisymmetric functions of labeled posets"};
    app.require_subcommand(1);

    // gamma
    auto* cmd_gamma = app.add_subcommand("gamma", "generating function of each poset in a file");
    std::string gamma_file;
    std::string gamma_labeling = "strict";
    bool gamma_json = false;
    cmd_gamma->add_option("file", gamma_file, "poset or tree text file")->required();
    cmd_gamma->add_option("--labeling", gamma_labeling, "strict | weak | from-file")
        ->check(CLI::IsMember({"strict", "weak", "from-file"}));
    cmd_gamma->add_flag("--json", gamma_json, "emit the JSON serialization");

    // convert
    auto* cmd_convert = app.add_subcommand("convert", "rooted tree file to poset text format");
    std::string convert_file;
    cmd_convert->add_option("file", convert_file, "tree file, one per line")->required();

    // mul
    auto* cmd_mul = app.add_subcommand("mul", "multiply two serialized elements");
    std::string mul_op = "oshuffle";
    std::string mul_a, mul_b;
    bool mul_verify = false, mul_json = false;
    cmd_mul->add_option("--op", mul_op, "oshuffle | concat")
        ->check(CLI::IsMember({"oshuffle", "concat"}));
    cmd_mul->add_option("a", mul_a, "first element (JSON file)")->required();
    cmd_mul->add_option("b", mul_b, "second element (JSON file)")->required();
    cmd_mul->add_flag("--verify", mul_verify, "cross-check the shuffle against the recurrence");
    cmd_mul->add_flag("--json", mul_json, "emit the JSON serialization");

    // compare
    auto* cmd_compare = app.add_subcommand("compare", "compare two posets and their invariants");
    std::string cmp_a, cmp_b;
    std::string cmp_labeling = "strict";
    bool cmp_json = false;
    cmd_compare->add_option("a", cmp_a, "first poset or tree file")->required();
    cmd_compare->add_option("b", cmp_b, "second poset or tree file")->required();
    cmd_compare->add_option("--labeling", cmp_labeling, "strict | weak")
        ->check(CLI::IsMember({"strict", "weak"}));
    cmd_compare->add_flag("--json", cmp_json, "emit JSON");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list isomorphism class representatives");
    std::string enum_class;
    int enum_nmax = 0;
    bool enum_json = false, enum_lift = false;
    cmd_enum->add_option("--class", enum_class, "trees | njoinfree | all")
        ->required()
        ->check(CLI::IsMember({"trees", "njoinfree", "all"}));
    cmd_enum->add_option("--nmax", enum_nmax, "element count")->required();
    cmd_enum->add_flag("--json", enum_json, "emit JSON");
    cmd_enum->add_flag("--no-limits", enum_lift, "lift the default size bounds");

    // count
    auto* cmd_count = app.add_subcommand("count", "count isomorphism classes");
    auto* cmd_count_njf = cmd_count->add_subcommand("njoinfree", "class counts for n=1..nmax");
    int count_nmax = 8;
    bool count_json = false;
    cmd_count_njf->add_option("--nmax", count_nmax, "largest size (<= 8)");
    cmd_count_njf->add_flag("--json", count_json, "emit JSON");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification driver");
    cmd_verify->require_subcommand(1);

    auto* v_inj = cmd_verify->add_subcommand("injectivity", "distinct gamma per isomorphism class");
    std::string inj_class = "rooted-trees";
    int inj_nmax = 0;
    int inj_jobs = 1;
    bool inj_json = false, inj_lift = false;
    v_inj->add_option("--class", inj_class, "rooted-trees | njoinfree")
        ->check(CLI::IsMember({"rooted-trees", "njoinfree"}));
    v_inj->add_option("--nmax", inj_nmax, "largest size (defaults to the class bound)");
    v_inj->add_option("--jobs", inj_jobs, "worker threads");
    v_inj->add_flag("--json", inj_json, "emit JSON");
    v_inj->add_flag("--no-limits", inj_lift, "lift the default size bounds");

    auto* v_ctr = cmd_verify->add_subcommand("counterexample",
                                             "the bundled pair with equal generating functions");
    bool ctr_json = false;
    v_ctr->add_flag("--json", ctr_json, "emit JSON");

    auto* v_prop = cmd_verify->add_subcommand("properties", "the seeded property suite");
    std::uint64_t prop_seed = 0;
    int prop_budget = 1000;
    int prop_jobs = 1;
    bool prop_json = false;
    v_prop->add_option("--seed", prop_seed, "random seed");
    v_prop->add_option("--budget", prop_budget, "iterations per randomized suite");
    v_prop->add_option("--jobs", prop_jobs, "worker threads");
    v_prop->add_flag("--json", prop_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    if (*cmd_convert) {
        bool first = true;
        for (const RootedTree& t : parse_tree_file(convert_file)) {
            if (!first) std::cout << "\n";
            first = false;
            std::cout << render_poset({t.encoding(), rooted_tree_to_poset(t), std::nullopt});
        }
        return 0;
    }

    if (*cmd_gamma) {
        std::vector<PosetFile> stanzas = load_poset_inputs(gamma_file);
        if (stanzas.empty()) throw std::runtime_error("no posets in " + gamma_file);
        nlohmann::json arr = nlohmann::json::array();
        for (const PosetFile& pf : stanzas) {
            QSymElement g = gamma(labeled_from_file(pf, gamma_labeling));
            if (gamma_json) {
                nlohmann::json doc = nlohmann::json::parse(g.to_json());
                doc["name"] = pf.name;
                arr.push_back(doc);
            } else {
                std::cout << pf.name << ": " << g.compact() << "\n";
            }
        }
        if (gamma_json) std::cout << arr.dump() << "\n";
        return 0;
    }

    if (*cmd_mul) {
        QSymElement a = QSymElement::from_json(slurp(mul_a));
        QSymElement b = QSymElement::from_json(slurp(mul_b));
        QSymElement product =
            mul_op == "oshuffle" ? mul_oshuffle(a, b, mul_verify) : mul_concat(a, b);
        std::cout << (mul_json ? product.to_json() : product.compact()) << "\n";
        return 0;
    }

    if (*cmd_compare) {
        PosetFile fa = load_poset_inputs(cmp_a).at(0);
        PosetFile fb = load_poset_inputs(cmp_b).at(0);
        QSymElement ga = gamma(labeled_from_file(fa, cmp_labeling));
        QSymElement gb = gamma(labeled_from_file(fb, cmp_labeling));
        bool iso = fa.poset.size() == fb.poset.size() && isomorphic(fa.poset, fb.poset);
        if (cmp_json) {
            nlohmann::json doc;
            doc["gamma_equal"] = ga == gb;
            doc["isomorphic"] = iso;
            doc["a"] = {{"name", fa.name}, {"gamma", nlohmann::json::parse(ga.to_json())}};
            doc["b"] = {{"name", fb.name}, {"gamma", nlohmann::json::parse(gb.to_json())}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << fa.name << ": " << ga.compact() << "\n";
            std::cout << fb.name << ": " << gb.compact() << "\n";
            std::cout << "gamma_equal: " << (ga == gb ? "yes" : "no") << "\n";
            std::cout << "isomorphic: " << (iso ? "yes" : "no") << "\n";
        }
        return 0;
    }

    if (*cmd_enum) {
        if (enum_class == "trees") {
            std::vector<RootedTree> trees = enumerate_rooted_trees(enum_nmax);
            if (enum_json) {
                nlohmann::json doc{{"class", "trees"}, {"n", enum_nmax}, {"count", trees.size()}};
                nlohmann::json items = nlohmann::json::array();
                for (const RootedTree& t : trees) items.push_back(t.encoding());
                doc["items"] = items;
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << "# class=trees n=" << enum_nmax << " count=" << trees.size() << "\n";
                for (const RootedTree& t : trees) std::cout << t.encoding() << "\n";
            }
            return 0;
        }
        std::vector<Poset> posets = enum_class == "njoinfree"
                                        ? enumerate_njoinfree(enum_nmax, enum_lift ? 10 : 8)
                                        : enumerate_all_posets(enum_nmax);
        if (enum_json) {
            nlohmann::json doc{{"class", enum_class}, {"n", enum_nmax}, {"count", posets.size()}};
            nlohmann::json items = nlohmann::json::array();
            for (std::size_t i = 0; i < posets.size(); ++i) {
                nlohmann::json covers = nlohmann::json::array();
                for (auto [u, v] : posets[i].covers()) covers.push_back({u, v});
                items.push_back({{"elements", posets[i].size()}, {"covers", covers}});
            }
            doc["items"] = items;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "# class=" << enum_class << " n=" << enum_nmax
                      << " count=" << posets.size() << "\n";
            for (std::size_t i = 0; i < posets.size(); ++i) {
                PosetFile pf{enum_class + "_" + std::to_string(enum_nmax) + "_" + std::to_string(i),
                             posets[i],
                             std::nullopt};
                std::cout << "\n" << render_poset(pf);
            }
        }
        return 0;
    }

    if (*cmd_count_njf) {
        std::vector<std::uint64_t> counts = count_njoinfree_sequence(count_nmax);
        if (count_json) {
            nlohmann::json doc{{"class", "njoinfree"}, {"counts", counts}};
            std::cout << doc.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < counts.size(); ++i)
                std::cout << "n=" << i + 1 << " count=" << counts[i] << "\n";
        }
        return 0;
    }

    if (*v_inj) {
        InjectivityClass cls = inj_class == "rooted-trees" ? InjectivityClass::rooted_trees
                                                           : InjectivityClass::njoinfree;
        if (inj_nmax == 0) inj_nmax = cls == InjectivityClass::rooted_trees ? 9 : 7;
        return emit_report(verify_injectivity(cls, inj_nmax, inj_jobs, inj_lift), inj_json);
    }
    if (*v_ctr) return emit_report(verify_counterexample(), ctr_json);
    if (*v_prop) return emit_reports(run_property_suite(prop_seed, prop_budget, prop_jobs), prop_json);

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

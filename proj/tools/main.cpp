// schemefusion: exact association-scheme toolkit.
//
// Subcommands: verify, table, fusions, hamming, tensor, wreath, classify,
// catalog-list.  Output is a key-sorted JSON report (byte-reproducible apart
// from elapsedMs); --pretty switches to aligned human-readable text.  Exit
// codes: 0 success, 1 domain error (JSON error object), 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schemefusion/constructions.hpp"
#include "schemefusion/errors.hpp"
#include "schemefusion/fusion.hpp"
#include "schemefusion/json_io.hpp"
#include "schemefusion/scheme.hpp"
#include "schemefusion/spectra.hpp"
#include "schemefusion/srg.hpp"

namespace sf = schemefusion;
using nlohmann::json;

namespace {

struct InputSpec {
    std::vector<std::string> catalog;  // name followed by integer parameters
    std::string graph6;
    std::string file;
    int hamming_n = 0;  // when > 0, replace the input by H(n, input)
};

void add_input_flags(CLI::App* cmd, InputSpec& in, bool with_hamming = true) {
    auto* cat = cmd->add_option("--catalog", in.catalog,
                                "Catalog scheme: name followed by its parameters")
                    ->expected(-1);
    auto* g6 = cmd->add_option("--graph6", in.graph6, "graph6 string for an SRG-style scheme");
    auto* file = cmd->add_option("--file", in.file, "Path to a scheme in the plain-text format");
    cat->excludes(g6)->excludes(file);
    g6->excludes(file);
    if (with_hamming)
        cmd->add_option("--hamming", in.hamming_n, "Replace the input scheme A by H(n, A)")
            ->check(CLI::PositiveNumber);
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw sf::Error(sf::errc::BadParameter, "expected an integer " + what + ", got '" + s + "'");
    }
}

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
    return out;
}

struct LoadedInput {
    std::vector<sf::BitMatrix> matrices;  // as ingested, before verification
    json echo = json::object();
    bool h2_of_rank3_symmetric = false;   // fusion labels apply
    std::optional<std::vector<std::vector<int>>> compositions;
};

// Resolves the input flags to class matrices; when --hamming is given the
// base must verify and the result is H(n, base).
LoadedInput load_input(const InputSpec& in) {
    LoadedInput loaded;
    std::vector<sf::BitMatrix> base;
    if (!in.catalog.empty()) {
        std::string name = in.catalog.front();
        std::vector<long long> params;
        for (size_t i = 1; i < in.catalog.size(); ++i)
            params.push_back(parse_int(in.catalog[i], "catalog parameter"));
        base = sf::construct_catalog(name, params).classes();
        loaded.echo["catalog"] = json{{"name", name}, {"params", params}};
    } else if (!in.graph6.empty()) {
        auto split = sf::graph_scheme_classes(sf::parse_graph6(in.graph6));
        base = std::move(split.classes);
        loaded.echo["graph6"] = in.graph6;
        if (split.dropped > 0) loaded.echo["droppedEmptyClasses"] = split.dropped;
    } else if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw sf::Error(sf::errc::MalformedInput, "cannot open file '" + in.file + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        base = sf::matrices_from_text(buf.str());
        loaded.echo["file"] = in.file;
    } else {
        throw CLI::RequiredError("one of --catalog / --graph6 / --file");
    }

    if (in.hamming_n > 0) {
        sf::SchemeReport rep = sf::verify_scheme(base, /*early_exit=*/true);
        if (!rep.pass)
            throw sf::Error(sf::errc::AxiomViolation,
                            "the base of H(" + std::to_string(in.hamming_n) +
                                ", A) is not an association scheme");
        sf::GeneralizedHamming h = sf::generalized_hamming(*rep.scheme, in.hamming_n);
        loaded.echo["hamming"] = in.hamming_n;
        loaded.h2_of_rank3_symmetric =
            in.hamming_n == 2 && rep.scheme->rank() == 3 && rep.scheme->symmetric();
        loaded.compositions = std::move(h.compositions);
        loaded.matrices = h.scheme.classes();
    } else {
        loaded.matrices = std::move(base);
    }
    return loaded;
}

// The verified scheme, or a thrown Error carrying the failing axiom's code.
sf::Scheme require_scheme(const LoadedInput& loaded) {
    sf::SchemeReport rep = sf::verify_scheme(loaded.matrices, /*early_exit=*/true);
    if (rep.pass) return *rep.scheme;
    for (const auto& ax : rep.axioms)
        if (ax.checked && !ax.pass)
            throw sf::Error(ax.code.empty() ? sf::errc::AxiomViolation : ax.code, ax.detail);
    throw sf::Error(sf::errc::AxiomViolation, "input is not an association scheme");
}

long long bell_number(int m) {
    std::vector<unsigned long long> row{1};
    for (int i = 0; i < m; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (unsigned long long v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return static_cast<long long>(row.front());
}

// ---------------------------------------------------------------- verify --

json run_verify(const LoadedInput& loaded) {
    return sf::scheme_report_json(sf::verify_scheme(loaded.matrices, /*early_exit=*/false));
}

void pretty_verify(const json& r, std::ostream& os) {
    os << (r.at("pass").get<bool>() ? "PASS" : "FAIL") << ": order " << r.at("order")
       << ", rank " << r.at("rank") << ", valencies " << r.at("valencies").dump() << "\n";
    for (const auto& ax : r.at("axioms")) {
        os << "  axiom " << ax.at("axiom") << ": ";
        if (!ax.at("checked").get<bool>())
            os << "skipped";
        else
            os << (ax.at("pass").get<bool>() ? "pass" : "FAIL");
        if (ax.contains("detail")) os << "  (" << ax.at("detail").get<std::string>() << ")";
        os << "\n";
    }
}

// ----------------------------------------------------------------- table --

json run_table(const LoadedInput& loaded) {
    sf::Scheme scheme = require_scheme(loaded);
    return sf::character_table_json(sf::character_table(scheme));
}

void pretty_table(const json& r, std::ostream& os) {
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width;
    for (const auto& row : r.at("entries")) {
        std::vector<std::string> line;
        for (const auto& v : row) line.push_back(v.get<std::string>());
        cells.push_back(std::move(line));
    }
    for (const auto& line : cells)
        for (size_t c = 0; c < line.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], line[c].size());
        }
    const auto& mult = r.at("multiplicities");
    for (size_t u = 0; u < cells.size(); ++u) {
        for (size_t c = 0; c < cells[u].size(); ++c) {
            os << std::string(width[c] - cells[u][c].size(), ' ') << cells[u][c];
            os << (c + 1 < cells[u].size() ? "  " : "");
        }
        os << "   | m = " << mult.at(u) << "\n";
    }
}

// --------------------------------------------------------------- fusions --

struct FusionOptions {
    std::string method = "both";
    std::string isolate;  // comma list of class indices
    int threads = 0;
};

json run_fusions(const LoadedInput& loaded, const FusionOptions& opt, json& inputs) {
    sf::Scheme scheme = require_scheme(loaded);
    sf::FusionMethod method = sf::parse_fusion_method(opt.method);
    inputs["method"] = opt.method;

    std::vector<sf::FusionResult> results;
    if (!opt.isolate.empty()) {
        std::vector<int> iso;
        for (long long v : parse_int_list(opt.isolate, "class index"))
            iso.push_back(static_cast<int>(v));
        inputs["isolate"] = iso;
        results = sf::isolating_fusions(scheme, iso, method, opt.threads);
    } else {
        results = sf::enumerate_fusions(scheme, method, opt.threads);
    }

    json list = json::array();
    for (const auto& res : results) {
        json entry{{"rank", res.rank}, {"blocks", sf::partition_json(res.partition)}};
        if (loaded.h2_of_rank3_symmetric) {
            auto label = sf::label_for_partition(res.partition);
            if (label) entry["label"] = *label;
        }
        list.push_back(std::move(entry));
    }
    return json{{"order", scheme.order()},
                {"rank", scheme.rank()},
                {"candidates", bell_number(scheme.rank() - 1)},
                {"fusions", std::move(list)}};
}

void pretty_fusions(const json& r, std::ostream& os) {
    os << r.at("fusions").size() << " fusions among " << r.at("candidates")
       << " candidate partitions (scheme order " << r.at("order") << ", rank " << r.at("rank")
       << ")\n";
    for (const auto& entry : r.at("fusions")) {
        os << "  rank " << entry.at("rank") << ": " << entry.at("blocks").dump();
        if (entry.contains("label")) os << "  " << entry.at("label").get<std::string>();
        os << "\n";
    }
}

// ------------------------------------------------- hamming/tensor/wreath --

json scheme_result_json(const sf::Scheme& scheme, bool include_text) {
    json j = sf::scheme_summary_json(scheme);
    if (include_text) j["text"] = sf::scheme_to_text(scheme);
    return j;
}

// -------------------------------------------------------------- classify --

json run_classify(const std::string& params_csv, bool verify, json& inputs) {
    std::vector<long long> v = parse_int_list(params_csv, "SRG parameter");
    if (v.size() != 4)
        throw sf::Error(sf::errc::BadParameter, "--params needs n,k,lambda,mu");
    sf::SrgParams params{v[0], v[1], v[2], v[3]};
    inputs["params"] = v;
    if (verify) inputs["verify"] = true;

    sf::Spectrum sp = sf::spectrum_from_params(params);
    sf::FeasibilityReport feas = sf::feasibility_check(params);
    std::vector<sf::FamilyTag> tags = sf::classify_families(sp);

    json families = json::array();
    std::vector<std::string> predicted;
    for (const auto& tag : tags) {
        if (tag.tag != "homogeneous") families.push_back(sf::family_tag_json(tag));
        for (const auto& label : tag.fusions)
            if (std::find(predicted.begin(), predicted.end(), label) == predicted.end())
                predicted.push_back(label);
    }

    json out{{"spectrum", sf::spectrum_json(sp)},
             {"feasibility", sf::feasibility_json(feas)},
             {"feasible", feas.feasible},
             {"families", std::move(families)},
             {"predictedFusions", predicted}};

    if (verify) {
        // Independent check: test every partition of the 6 symbolic H(2,A)
        // classes with the eigenvalue-collapse criterion; the passing set
        // must be exactly identity + trivial + the predicted labels.
        sf::CharacterTable table = sf::symbolic_h2_table(sp);
        std::vector<sf::ClassPartition> expected;
        expected.push_back(sf::ClassPartition::identity(6));
        expected.push_back(sf::ClassPartition::trivial(6));
        for (const auto& label : predicted) {
            sf::ClassPartition p =
                sf::relabel_partition(sf::partition_for_label(label), sf::h2_scheme_to_symbolic());
            if (std::find(expected.begin(), expected.end(), p) == expected.end())
                expected.push_back(std::move(p));
        }
        std::sort(expected.begin(), expected.end());

        std::vector<sf::ClassPartition> found;
        std::vector<std::vector<int>> blocks_buf;
        // Enumerate partitions of {1..5} by restricted-growth strings.
        std::vector<int> rgs(5, 0);
        for (;;) {
            int nb = 0;
            for (int x : rgs) nb = std::max(nb, x + 1);
            blocks_buf.assign(static_cast<size_t>(nb) + 1, {});
            blocks_buf[0] = {0};
            for (int i = 0; i < 5; ++i) blocks_buf[static_cast<size_t>(rgs[i]) + 1].push_back(i + 1);
            sf::ClassPartition part = sf::ClassPartition::from_blocks(blocks_buf, 6);
            if (sf::bm_test(table, part)) found.push_back(std::move(part));
            int i = 4;
            for (; i >= 1; --i) {
                int mx = 0;
                for (int t = 0; t < i; ++t) mx = std::max(mx, rgs[t]);
                if (rgs[i] <= mx) {
                    ++rgs[i];
                    for (int t = i + 1; t < 5; ++t) rgs[t] = 0;
                    break;
                }
            }
            if (i == 0) break;
        }
        std::sort(found.begin(), found.end());
        out["verified"] = found == expected;
    }
    return out;
}

void pretty_classify(const json& r, std::ostream& os) {
    const json& sp = r.at("spectrum");
    os << "spectrum: n=" << sp.at("n") << " k=" << sp.at("k").get<std::string>()
       << " ell=" << sp.at("ell").get<std::string>() << " r=" << sp.at("r").get<std::string>()
       << " s=" << sp.at("s").get<std::string>() << " f=" << sp.at("f").get<std::string>()
       << " g=" << sp.at("g").get<std::string>() << "\n";
    os << "feasible: " << (r.at("feasible").get<bool>() ? "yes" : "no") << "\n";
    os << "families:\n";
    for (const auto& fam : r.at("families")) {
        os << "  " << fam.at("tag").get<std::string>() << ": "
           << fam.at("description").get<std::string>() << " ->";
        for (const auto& label : fam.at("fusions")) os << " " << label.get<std::string>();
        os << "\n";
    }
    os << "predicted fusions:";
    for (const auto& label : r.at("predictedFusions")) os << " " << label.get<std::string>();
    os << "\n";
    if (r.contains("verified"))
        os << "verified: " << (r.at("verified").get<bool>() ? "yes" : "no") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact toolkit for commutative association schemes"};
    app.require_subcommand(1);

    InputSpec in;
    bool pretty = false;

    auto* verify_cmd = app.add_subcommand("verify", "Check the five scheme axioms");
    add_input_flags(verify_cmd, in);
    verify_cmd->add_flag("--pretty", pretty, "Aligned text output");

    auto* table_cmd = app.add_subcommand("table", "Exact character table");
    add_input_flags(table_cmd, in);
    table_cmd->add_flag("--pretty", pretty, "Aligned text output");

    FusionOptions fopt;
    auto* fusions_cmd = app.add_subcommand("fusions", "Enumerate fusion partitions");
    add_input_flags(fusions_cmd, in);
    fusions_cmd->add_option("--method", fopt.method, "bm | oracle | both (default both)");
    fusions_cmd->add_option("--isolate", fopt.isolate,
                            "Comma-separated class indices that must fuse into one block");
    fusions_cmd->add_option("--threads", fopt.threads, "Worker threads (0 = all cores)");
    fusions_cmd->add_flag("--pretty", pretty, "Aligned text output");

    int ham_n = 0;
    long long ham_q = 0;
    bool as_json = false;
    auto* hamming_cmd = app.add_subcommand("hamming", "Hamming scheme H(n, q) or H(n, A)");
    hamming_cmd->add_option("n", ham_n, "Number of coordinates")->required();
    hamming_cmd->add_option("q", ham_q, "Alphabet size (omit when a base scheme is given)");
    add_input_flags(hamming_cmd, in, /*with_hamming=*/false);
    hamming_cmd->add_flag("--json", as_json, "JSON report instead of scheme text");

    auto* tensor_cmd = app.add_subcommand("tensor", "Tensor square A x A of the input");
    add_input_flags(tensor_cmd, in);
    tensor_cmd->add_flag("--json", as_json, "JSON report instead of scheme text");

    auto* wreath_cmd = app.add_subcommand("wreath", "Wreath square A wr A of the input");
    add_input_flags(wreath_cmd, in);
    wreath_cmd->add_flag("--json", as_json, "JSON report instead of scheme text");

    std::string params_csv;
    bool verify_classification = false;
    auto* classify_cmd = app.add_subcommand("classify", "SRG spectrum, feasibility and families");
    classify_cmd->add_option("--params", params_csv, "n,k,lambda,mu")->required();
    classify_cmd->add_flag("--verify", verify_classification,
                           "Cross-check predictions against the symbolic H(2,A) table");
    classify_cmd->add_flag("--pretty", pretty, "Aligned text output");

    auto* list_cmd = app.add_subcommand("catalog-list", "List the built-in schemes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    json inputs = json::object();
    json results;
    std::string command;
    std::string plain_text;  // non-JSON output for the product commands

    try {
        if (app.got_subcommand(verify_cmd)) {
            command = "verify";
            LoadedInput loaded = load_input(in);
            inputs.update(loaded.echo);
            results = run_verify(loaded);
        } else if (app.got_subcommand(table_cmd)) {
            command = "table";
            LoadedInput loaded = load_input(in);
            inputs.update(loaded.echo);
            results = run_table(loaded);
        } else if (app.got_subcommand(fusions_cmd)) {
            command = "fusions";
            LoadedInput loaded = load_input(in);
            inputs.update(loaded.echo);
            results = run_fusions(loaded, fopt, inputs);
        } else if (app.got_subcommand(hamming_cmd)) {
            command = "hamming";
            inputs["n"] = ham_n;
            sf::Scheme result = [&] {
                if (hamming_cmd->count("q")) {
                    inputs["q"] = ham_q;
                    if (in.catalog.empty() && in.graph6.empty() && in.file.empty())
                        return sf::hamming(ham_n, static_cast<int>(ham_q));
                    throw CLI::ValidationError("hamming", "give q or a base scheme, not both");
                }
                LoadedInput loaded = load_input(in);
                inputs.update(loaded.echo);
                return sf::generalized_hamming(require_scheme(loaded), ham_n).scheme;
            }();
            if (as_json)
                results = scheme_result_json(result, /*include_text=*/true);
            else
                plain_text = sf::scheme_to_text(result);
        } else if (app.got_subcommand(tensor_cmd) || app.got_subcommand(wreath_cmd)) {
            bool is_tensor = app.got_subcommand(tensor_cmd);
            command = is_tensor ? "tensor" : "wreath";
            LoadedInput loaded = load_input(in);
            inputs.update(loaded.echo);
            sf::Scheme base = require_scheme(loaded);
            sf::Scheme result =
                is_tensor ? sf::tensor_product(base, base) : sf::wreath_product(base, base);
            if (as_json)
                results = scheme_result_json(result, /*include_text=*/true);
            else
                plain_text = sf::scheme_to_text(result);
        } else if (app.got_subcommand(classify_cmd)) {
            command = "classify";
            results = run_classify(params_csv, verify_classification, inputs);
        } else if (app.got_subcommand(list_cmd)) {
            command = "catalog-list";
            json list = json::array();
            for (const auto& entry : sf::catalog_list())
                list.push_back(json{{"name", entry.name},
                                    {"params", entry.params},
                                    {"summary", entry.summary}});
            results = std::move(list);
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const sf::Error& e) {
        std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "Unexpected"}, {"message", e.what()}}.dump(2) << "\n";
        return 1;
    }

    if (!plain_text.empty()) {
        std::cout << plain_text;
        return 0;
    }

    if (pretty) {
        if (command == "verify") pretty_verify(results, std::cout);
        else if (command == "table") pretty_table(results, std::cout);
        else if (command == "fusions") pretty_fusions(results, std::cout);
        else if (command == "classify") pretty_classify(results, std::cout);
        else std::cout << results.dump(2) << "\n";
        return 0;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    json envelope{{"command", command},
                  {"inputs", std::move(inputs)},
                  {"results", std::move(results)},
                  {"elapsedMs", elapsed}};
    std::cout << envelope.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

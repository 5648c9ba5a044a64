// Command-line front end; talks to the library only through fointerp.h.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "fointerp/fointerp.h"

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kFormat = 3, kCap = 4, kOther = 5 };

struct Failure {
    int code;
    std::string message;
};

int exit_code(fi_status s) {
    switch (s) {
    case FI_OK:
        return kOk;
    case FI_ERR_PARSE:
    case FI_ERR_ARGUMENT:
        return kUsage;
    case FI_ERR_FORMAT:
        return kFormat;
    case FI_ERR_CAP:
        return kCap;
    default:
        return kOther;
    }
}

void check(fi_status s) {
    if (s != FI_OK)
        throw Failure{exit_code(s), std::string(fi_status_name(s)) + ": " + fi_last_error()};
}

struct StringDeleter {
    void operator()(char* s) const { fi_string_free(s); }
};
struct FormulaDeleter {
    void operator()(fi_formula* f) const { fi_formula_free(f); }
};
struct StructureDeleter {
    void operator()(fi_structure* s) const { fi_structure_free(s); }
};
struct WitnessDeleter {
    void operator()(fi_witness* w) const { fi_witness_free(w); }
};
using Formula = std::unique_ptr<fi_formula, FormulaDeleter>;
using Structure = std::unique_ptr<fi_structure, StructureDeleter>;
using Witness = std::unique_ptr<fi_witness, WitnessDeleter>;

std::string take(char* s) {
    std::unique_ptr<char, StringDeleter> owned(s);
    return s ? std::string(s) : std::string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kFormat, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Failure{kOther, "cannot write " + path};
}

Formula parse_formula(const std::string& text) {
    fi_formula* f = nullptr;
    check(fi_formula_parse(text.c_str(), &f));
    return Formula(f);
}

Structure load_structure(const std::string& path) {
    fi_structure* s = nullptr;
    check(fi_structure_from_json(read_file(path).c_str(), &s));
    return Structure(s);
}

std::string render(const fi_formula* f) {
    char* s = nullptr;
    check(fi_formula_render(f, &s));
    return take(s);
}

std::string class_name(const fi_formula* f) {
    char* s = nullptr;
    check(fi_formula_class_name(f, &s));
    return take(s);
}

std::string structure_json(const fi_structure* s) {
    char* out = nullptr;
    check(fi_structure_to_json(s, &out));
    return take(out);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

// --formula TEXT or --file PATH.
struct FormulaSource {
    std::string text;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* t = cmd->add_option("--formula,-f", text, "formula text");
        auto* p = cmd->add_option("--file", file, "file holding the formula")->check(CLI::ExistingFile);
        t->excludes(p);
    }
    std::string get() const {
        if (!file.empty())
            return read_file(file);
        if (text.empty())
            throw Failure{kUsage, "one of --formula or --file is required"};
        return text;
    }
};

const std::vector<std::string> kKinds{"big2eq", "big2eq-param", "2eq2leq", "2eq2leq-param"};
const std::vector<std::string> kClasses{"graph", "bigraph", "bigraph3", "2eq", "leq", "all"};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite structures, interpretation constructions and a Pi2 decider"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // parse
    FormulaSource parse_src;
    std::string parse_form = "input";
    auto* parse_cmd = app.add_subcommand("parse", "parse and print a formula");
    parse_src.attach(parse_cmd);
    parse_cmd->add_option("--form", parse_form, "input, nnf or prenex")
        ->check(CLI::IsMember({"input", "nnf", "prenex"}));

    // classify
    FormulaSource classify_src;
    auto* classify_cmd = app.add_subcommand("classify", "prefix class of the prenex form");
    classify_src.attach(classify_cmd);

    // translate
    FormulaSource translate_src;
    std::string translate_kind;
    bool translate_literal = false, translate_open = false;
    auto* translate_cmd = app.add_subcommand("translate", "relativized translation of a source sentence");
    translate_src.attach(translate_cmd);
    translate_cmd->add_option("--kind", translate_kind)->required()->check(CLI::IsMember(kKinds));
    translate_cmd->add_flag("--literal", translate_literal, "always use the relation formulas as written");
    translate_cmd->add_flag("--open", translate_open, "leave the schema parameters free");

    // construct
    std::string construct_kind, construct_input, construct_output;
    auto* construct_cmd = app.add_subcommand("construct", "build the target structure");
    construct_cmd->add_option("--kind", construct_kind)->required()->check(CLI::IsMember(kKinds));
    construct_cmd->add_option("--input", construct_input)->required();
    construct_cmd->add_option("--output", construct_output);

    // verify
    std::string verify_kind, verify_input, verify_witness;
    auto* verify_cmd = app.add_subcommand("verify", "build (or load) a witness and check the interpretation");
    verify_cmd->add_option("--kind", verify_kind)->required()->check(CLI::IsMember(kKinds));
    verify_cmd->add_option("--input", verify_input)->required();
    verify_cmd->add_option("--witness", verify_witness, "witness JSON instead of building one");

    // schema
    std::string schema_kind, schema_output;
    auto* schema_cmd = app.add_subcommand("schema", "print the interpretation schema");
    schema_cmd->add_option("--kind", schema_kind)->required()->check(CLI::IsMember(kKinds));
    schema_cmd->add_option("--output", schema_output);

    bool exhaustive = false;
    const char* exhaustive_help = "scan every structure instead of backtracking (subject to the slot cap)";

    // decide-pi2
    FormulaSource decide_src;
    std::string decide_sig;
    auto* decide_cmd = app.add_subcommand("decide-pi2", "decide validity of a Pi2 sentence");
    decide_src.attach(decide_cmd);
    decide_cmd->add_option("--sig", decide_sig, "signature JSON file")->required();
    decide_cmd->add_flag("--exhaustive", exhaustive, exhaustive_help);

    // decide-pi2-class
    FormulaSource class_src;
    std::string class_axiom;
    auto* class_cmd = app.add_subcommand("decide-pi2-class", "decide a Pi2 sentence over an axiomatized class");
    class_src.attach(class_cmd);
    class_cmd->add_option("--axiom", class_axiom)->required()->check(CLI::IsMember({"2eq", "leq", "graph", "bigraph"}));
    class_cmd->add_flag("--exhaustive", exhaustive, exhaustive_help);

    // search
    FormulaSource search_src;
    std::string search_class;
    int search_max = 4;
    auto* search_cmd = app.add_subcommand("search", "smallest class member falsifying a sentence");
    search_src.attach(search_cmd);
    search_cmd->add_option("--class", search_class)->required()->check(CLI::IsMember(kClasses));
    search_cmd->add_option("--max-size", search_max)->check(CLI::PositiveNumber);
    search_cmd->add_flag("--exhaustive", exhaustive, exhaustive_help);

    // gen
    std::string gen_class, gen_output;
    std::uint64_t gen_seed = 0;
    int gen_size = 5, gen_left = 3, gen_right = 3;
    double gen_p = 0.5;
    auto* gen_cmd = app.add_subcommand("gen", "random class member");
    gen_cmd->add_option("--class", gen_class)->required()->check(CLI::IsMember(kClasses));
    gen_cmd->add_option("--seed", gen_seed)->required();
    gen_cmd->add_option("--size", gen_size);
    gen_cmd->add_option("--left", gen_left);
    gen_cmd->add_option("--right", gen_right);
    gen_cmd->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--output", gen_output);

    // demo
    std::string demo_kind;
    auto* demo_cmd = app.add_subcommand("demo", "construction on the example input");
    demo_cmd->add_option("--kind", demo_kind)->required()->check(CLI::IsMember(kKinds));

    // eval
    FormulaSource eval_src;
    std::string eval_input;
    auto* eval_cmd = app.add_subcommand("eval", "truth value of a sentence in a structure");
    eval_src.attach(eval_cmd);
    eval_cmd->add_option("--input", eval_input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (parse_cmd->parsed()) {
            Formula f = parse_formula(parse_src.get());
            if (parse_form != "input") {
                fi_formula* g = nullptr;
                check(parse_form == "nnf" ? fi_formula_nnf(f.get(), &g) : fi_formula_prenex(f.get(), &g));
                f.reset(g);
            }
            const std::string text = render(f.get());
            std::cout << (json ? "{\"formula\": " + quoted(text) + "}" : text) << "\n";
        } else if (classify_cmd->parsed()) {
            Formula f = parse_formula(classify_src.get());
            fi_prefix_kind kind;
            int k = 0;
            check(fi_formula_classify(f.get(), &kind, &k));
            const std::string name = class_name(f.get());
            if (json) {
                const char* kinds[] = {"Sigma", "Pi", "Both"};
                std::cout << "{\"class\": " << quoted(name) << ", \"kind\": \"" << kinds[kind] << "\", \"k\": " << k
                          << "}\n";
            } else {
                std::cout << name << "\n";
            }
        } else if (translate_cmd->parsed()) {
            Formula f = parse_formula(translate_src.get());
            fi_formula* t = nullptr;
            check(fi_translate(translate_kind.c_str(), f.get(), translate_literal, translate_open, &t));
            Formula out(t);
            const std::string text = render(out.get());
            if (json)
                std::cout << "{\"translation\": " << quoted(text) << ", \"class\": " << quoted(class_name(out.get()))
                          << "}\n";
            else
                std::cout << text << "\n";
        } else if (construct_cmd->parsed()) {
            Structure a = load_structure(construct_input);
            fi_witness* w = nullptr;
            check(fi_build(construct_kind.c_str(), a.get(), &w));
            Witness owned(w);
            char* text = nullptr;
            check(fi_witness_to_json(w, &text));
            write_output(construct_output, take(text));
        } else if (verify_cmd->parsed()) {
            Structure a = load_structure(verify_input);
            fi_witness* w = nullptr;
            if (verify_witness.empty())
                check(fi_build(verify_kind.c_str(), a.get(), &w));
            else
                check(fi_witness_from_json(read_file(verify_witness).c_str(), &w));
            Witness owned(w);
            int verified = 0;
            char* report = nullptr;
            check(fi_verify(verify_kind.c_str(), a.get(), w, json, &verified, &report));
            std::cout << take(report);
            return verified ? kOk : kNegative;
        } else if (schema_cmd->parsed()) {
            char* text = nullptr;
            check(fi_schema_to_json(schema_kind.c_str(), &text));
            write_output(schema_output, take(text));
        } else if (decide_cmd->parsed() || class_cmd->parsed()) {
            const bool in_class = class_cmd->parsed();
            Formula f = parse_formula(in_class ? class_src.get() : decide_src.get());
            int valid = 0;
            char* verdict = nullptr;
            if (in_class)
                check(fi_decide_pi2_class(class_axiom.c_str(), f.get(), exhaustive, &valid, &verdict));
            else
                check(fi_decide_pi2(read_file(decide_sig).c_str(), f.get(), exhaustive, &valid, &verdict));
            const std::string text = take(verdict);
            if (json) {
                std::cout << text;
            } else {
                const auto j = nlohmann::json::parse(text);
                std::cout << j["outcome"].get<std::string>() << " (size bound " << j["bound"].get<int>() << ")\n";
                if (j.contains("countermodel")) {
                    fi_structure* m = nullptr;
                    check(fi_structure_from_json(j["countermodel"].dump().c_str(), &m));
                    Structure owned(m);
                    std::cout << "countermodel of size " << fi_structure_size(m) << ":\n" << structure_json(m);
                }
            }
            return valid ? kOk : kNegative;
        } else if (search_cmd->parsed()) {
            Formula f = parse_formula(search_src.get());
            fi_structure* m = nullptr;
            check(fi_search_counterexample(search_class.c_str(), f.get(), search_max, exhaustive, &m));
            Structure found(m);
            if (json) {
                std::cout << "{\"maxSize\": " << search_max << ", \"counterexample\": "
                          << (found ? structure_json(m) : std::string("null\n")) << "}\n";
            } else if (found) {
                std::cout << "counterexample of size " << fi_structure_size(m) << ":\n" << structure_json(m);
            } else {
                std::cout << "holds up to size " << search_max << "\n";
            }
            return found ? kNegative : kOk;
        } else if (gen_cmd->parsed()) {
            fi_structure* s = nullptr;
            check(fi_generate(gen_class.c_str(), gen_seed, gen_size, gen_left, gen_right, gen_p, &s));
            Structure owned(s);
            write_output(gen_output, structure_json(s));
        } else if (demo_cmd->parsed()) {
            char* text = nullptr;
            check(fi_demo(demo_kind.c_str(), &text));
            std::cout << take(text);
        } else if (eval_cmd->parsed()) {
            Structure s = load_structure(eval_input);
            Formula f = parse_formula(eval_src.get());
            int result = 0;
            check(fi_eval(s.get(), f.get(), &result));
            std::cout << (json ? (result ? "{\"value\": true}" : "{\"value\": false}") : (result ? "true" : "false"))
                      << "\n";
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
    return kOk;
}

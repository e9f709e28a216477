#include "mixedcode/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mixedcode/errors.hpp"

namespace mixedcode::cli {

namespace {

struct Options {
    bool json = false;
    std::string out_path;
    std::optional<std::uint64_t> max_codewords, max_ambient;
    std::uint64_t seed = 0;
    bool codewords = false;
    std::vector<std::string> inputs;
};

std::uint64_t parse_count(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || v == 0)
        throw InputError(std::string("MIXEDCODE_BUDGET: invalid ") + what + " '" + text + "'");
    return v;
}

EnumerationBudget budget_from(const Options& opt) {
    EnumerationBudget b;
    if (const char* env = std::getenv("MIXEDCODE_BUDGET"); env && *env) {
        const std::string s(env);
        const auto comma = s.find(',');
        b.max_codewords = parse_count(s.substr(0, comma), "codeword budget");
        if (comma != std::string::npos) b.max_ambient = parse_count(s.substr(comma + 1), "ambient budget");
    }
    if (opt.max_codewords) b.max_codewords = *opt.max_codewords;
    if (opt.max_ambient) b.max_ambient = *opt.max_ambient;
    return b;
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_flag("--json", opt.json, "Print a JSON report");
    sub->add_option("--out", opt.out_path, "Write the report to a file instead of stdout");
    sub->add_option("--max-codewords", opt.max_codewords, "Largest code enumerated exhaustively")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-ambient", opt.max_ambient, "Largest ambient space swept by dual oracles")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "Seed for sampled checks");
}

struct Failure {
    int status;
    std::string kind;
    std::string message;
    Json extra = Json::object();
};

Failure classify(const std::exception& e) {
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
        Failure f{input_error, "parse", e.what()};
        if (p->line()) f.extra["line"] = p->line();
        return f;
    }
    if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e))
        return {budget_refusal, "budget", e.what(), Json{{"required_log2", b->required_log2()}}};
    if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
        dynamic_cast<const IndeterminateDivision*>(&e))
        return {input_error, "input", e.what()};
    if (const auto* m = dynamic_cast<const ConstructionMismatch*>(&e))
        return {failure, "construction", e.what(),
                Json{{"g_row", m->g_row()}, {"h_row", m->h_row()}, {"inner_product", m->inner_product()}}};
    if (dynamic_cast<const ValidationError*>(&e)) return {failure, "validation", e.what()};
    return {failure, "internal", e.what()};
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) throw InputError("cannot write file '" + opt.out_path + "'");
    file << text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Z2Z4Z8-additive and cyclic codes", "mixedcode"};
    app.require_subcommand(1);
    Options opt;
    std::string command;
    std::function<Outcome(const Settings&)> action;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& about, auto fn) {
        CLI::App* sub = parent->add_subcommand(name, about);
        sub->add_option("input", opt.inputs, "Input file")->required()->expected(1);
        add_common(sub, opt);
        sub->callback([&, fn, full = parent->get_name() + " " + name] {
            command = full;
            action = [&, fn](const Settings& s) { return fn(opt.inputs.front(), s); };
        });
        return sub;
    };

    CLI::App* additive = app.add_subcommand("additive", "Additive codes given by generator matrices");
    additive->require_subcommand(1);
    leaf(additive, "standard-form", "Reduce to standard form and report the type", additive_standard_form);
    leaf(additive, "dual", "Parity-check matrix and dual type", additive_dual);
    leaf(additive, "enumerate", "List every codeword", additive_enumerate);
    leaf(additive, "gray", "List the Gray image", additive_gray);
    leaf(additive, "mindist", "Minimum distance of the Gray image", additive_mindist);
    {
        CLI::App* sub = additive->add_subcommand("verify-dual", "Check G against a parity-check matrix");
        sub->add_option("inputs", opt.inputs, "Generator matrix, then an optional parity-check matrix")
            ->required()
            ->expected(1, 2);
        add_common(sub, opt);
        sub->callback([&] {
            command = "additive verify-dual";
            action = [&](const Settings& s) { return additive_verify_dual(opt.inputs, s); };
        });
    }

    CLI::App* cyclic = app.add_subcommand("cyclic", "Cyclic codes given by generator polynomials");
    cyclic->require_subcommand(1);
    leaf(cyclic, "validate", "Check the divisibility conditions", cyclic_validate);
    leaf(cyclic, "matrix", "Print the spanning-set generator matrix", cyclic_matrix);
    leaf(cyclic, "size", "Size of the code", cyclic_size);
    leaf(cyclic, "closure", "Check closure under the cyclic shift", cyclic_closure);

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
    oracle->require_subcommand(1);
    leaf(oracle, "check", "Run every oracle on a small code", oracle_check)
        ->add_flag("--codewords", opt.codewords, "The file lists all codewords rather than generators");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? success : input_error;
    }

    try {
        Settings s;
        s.budget = budget_from(opt);
        s.seed = opt.seed;
        s.codewords = opt.codewords;
        const Outcome o = action(s);
        emit(opt.json ? o.json.dump(2) + "\n" : o.text, opt, out);
        return o.status;
    } catch (const std::exception& e) {
        const Failure f = classify(e);
        err << "error: " << f.message << "\n";
        if (opt.json) {
            Json j;
            j["command"] = command;
            j["error"] = Json{{"kind", f.kind}, {"message", f.message}};
            for (auto it = f.extra.begin(); it != f.extra.end(); ++it) j["error"][it.key()] = it.value();
            out << j.dump(2) << "\n";
        }
        return f.status;
    }
}

} // namespace mixedcode::cli

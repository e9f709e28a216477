#include "commands.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mixedcode/mixedcode.hpp"

namespace mixedcode::cli {

namespace {

MixedMatrix load_matrix(const std::string& path) { return parse_matrix(read_text_file(path)); }
CyclicGenerators load_generators(const std::string& path) { return parse_generators(read_text_file(path)); }

Json split_json(const AlphabetSplit& s) { return Json::array({s.alpha(), s.beta(), s.theta()}); }

Json rows_json(const MixedMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m.row_list()) rows.push_back(r.to_string());
    return rows;
}

Json matrix_json(const MixedMatrix& m) { return Json{{"split", split_json(m.split())}, {"rows", rows_json(m)}}; }

Json size_json(const Cardinality& c) { return Json{{"log2", c.log2}, {"value", c.to_string()}}; }

Json type_json(const CodeType& t) {
    return Json{{"text", t.to_string()}, {"k", Json(std::vector<std::size_t>(t.k.begin(), t.k.end()))}};
}

Json permutation_json(const ColumnPermutation& p) { return Json{{"z2", p.z2}, {"z4", p.z4}, {"z8", p.z8}}; }

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

Outcome make(const char* command) {
    Outcome o;
    o.json["command"] = command;
    return o;
}

} // namespace

Outcome additive_standard_form(const std::string& path, const Settings&) {
    const StandardForm sf = standard_form(load_matrix(path));
    Outcome o = make("additive standard-form");
    o.json["type"] = type_json(sf.type());
    o.json["size"] = size_json(cardinality(sf.type()));
    o.json["permutation"] = permutation_json(sf.permutation);
    o.json["standard_form"] = matrix_json(sf.matrix);

    std::ostringstream t;
    t << "type " << sf.type().to_string() << "\n";
    t << "codewords " << cardinality(sf.type()).to_string() << "\n";
    if (sf.permutation.is_identity())
        t << "permutation identity\n";
    else
        t << "permutation z2: " << join(sf.permutation.z2) << "; z4: " << join(sf.permutation.z4)
          << "; z8: " << join(sf.permutation.z8) << "\n";
    t << "standard form (permuted columns)\n" << format_matrix(sf.matrix);
    o.text = t.str();
    return o;
}

Outcome additive_dual(const std::string& path, const Settings&) {
    const MixedMatrix g = load_matrix(path);
    const StandardForm sf = standard_form(g);
    const MixedMatrix h = parity_check_matrix(g);
    const CodeType actual = standard_form(h).type();
    Outcome o = make("additive dual");
    o.json["type"] = type_json(sf.type());
    o.json["dual_type"] = type_json(actual);
    o.json["predicted_dual_type"] = type_json(dual_type(sf.type()));
    o.json["dual_size"] = size_json(cardinality(actual));
    o.json["parity_check"] = matrix_json(h);

    std::ostringstream t;
    t << "type " << sf.type().to_string() << "\n";
    t << "dual type " << actual.to_string() << "\n";
    t << "dual codewords " << cardinality(actual).to_string() << "\n";
    t << "parity-check matrix\n" << format_matrix(h);
    o.text = t.str();
    return o;
}

Outcome additive_enumerate(const std::string& path, const Settings& s) {
    const CodewordSet c = enumerate_codewords(load_matrix(path), s.budget);
    Outcome o = make("additive enumerate");
    o.json["split"] = split_json(c.split());
    o.json["count"] = c.size();
    Json words = Json::array();
    std::string text;
    for (const auto& v : c.vectors()) {
        words.push_back(v.to_string());
        text += v.to_string() + "\n";
    }
    o.json["codewords"] = std::move(words);
    o.text = std::move(text);
    return o;
}

Outcome additive_gray(const std::string& path, const Settings& s) {
    const CodewordSet c = enumerate_codewords(load_matrix(path), s.budget);
    const LinearityReport lin = check_gray_linearity(c, s.budget, s.seed);
    Outcome o = make("additive gray");
    o.json["length"] = c.split().binary_length();
    o.json["count"] = c.size();
    o.json["linear"] = lin.linear;
    o.json["linearity_exhaustive"] = lin.exhaustive;
    if (!lin.linear) o.json["linearity_witness"] = lin.witness;
    Json words = Json::array();
    std::string text;
    for (const auto& v : c.vectors()) {
        const std::string b = gray_map(v).to_string();
        words.push_back(b);
        text += b + "\n";
    }
    o.json["words"] = std::move(words);
    o.text = std::move(text);
    return o;
}

Outcome additive_mindist(const std::string& path, const Settings& s) {
    const MixedMatrix g = load_matrix(path);
    const DistanceResult d = min_gray_distance(g, s.budget, s.seed);
    Outcome o = make("additive mindist");
    o.json["length"] = g.split().binary_length();
    o.json["distance"] = d.distance;
    o.json["exact"] = d.exact;
    o.json["witness"] = d.witness ? Json(d.witness->to_string()) : Json(nullptr);
    o.json["seed"] = s.seed;

    std::ostringstream t;
    t << (d.exact ? "minimum distance " : "minimum distance at most ") << d.distance << "\n";
    if (d.witness) t << "witness " << d.witness->to_string() << "\n";
    o.text = t.str();
    return o;
}

Outcome additive_verify_dual(const std::vector<std::string>& paths, const Settings&) {
    const MixedMatrix g = load_matrix(paths.at(0));
    const MixedMatrix h = paths.size() > 1 ? load_matrix(paths[1]) : parity_check_matrix(g);
    if (!(g.split() == h.split()))
        throw InputError("splits differ: " + g.split().to_string() + " and " + h.split().to_string());
    const auto bad = find_non_orthogonal(g, h);
    const std::size_t log_c = cardinality(standard_form(g).type()).log2;
    const std::size_t log_d = cardinality(standard_form(h).type()).log2;
    const bool complete = log_c + log_d == g.split().ambient_log2();

    Outcome o = make("additive verify-dual");
    o.json["orthogonal"] = !bad;
    if (bad)
        o.json["witness"] = Json{{"g_row", bad->g_row}, {"h_row", bad->h_row}, {"inner_product", int(bad->value)}};
    o.json["size_log2"] = log_c;
    o.json["dual_size_log2"] = log_d;
    o.json["complete"] = complete;
    o.status = (!bad && complete) ? 0 : 1;

    std::ostringstream t;
    if (bad)
        t << "not orthogonal: <G row " << bad->g_row << ", H row " << bad->h_row << "> = " << int(bad->value) << "\n";
    else
        t << "orthogonal\n";
    t << "|C| |D| = 2^" << (log_c + log_d) << ", ambient 2^" << g.split().ambient_log2()
      << (complete ? "" : " (D is not the full dual)") << "\n";
    o.text = t.str();
    return o;
}

namespace {

Json condition_json(const ConditionResult& c) {
    return Json{{"name", c.name},
                {"statement", c.statement},
                {"pass", c.pass},
                {"remainder", c.remainder.to_string()},
                {"note", c.note}};
}

} // namespace

Outcome cyclic_validate(const std::string& path, const Settings&) {
    const CyclicGenerators g = load_generators(path);
    const ValidationReport rep = validate_generators(g);
    Outcome o = make("cyclic validate");
    o.json["split"] = split_json(g.split);
    o.json["valid"] = rep.ok();
    Json conds = Json::array();
    std::ostringstream t;
    for (const auto& c : rep.conditions) {
        conds.push_back(condition_json(c));
        t << "(" << c.name << ") " << (c.pass ? "pass" : "FAIL") << "  " << c.statement;
        if (!c.note.empty())
            t << "  [" << c.note << "]";
        else if (!c.pass)
            t << "  remainder " << c.remainder.to_string();
        t << "\n";
    }
    o.json["conditions"] = std::move(conds);
    if (rep.ok()) {
        const DerivedCofactors d = derive_cofactors(g);
        o.json["cofactors"] = Json{{"k", d.k.to_string()},       {"h_f", d.h_f.to_string()},
                                   {"h1", d.h1.to_string()},     {"b1", d.b1.to_string()},
                                   {"h_p", d.h_p.to_string()},   {"h_q", d.h_q.to_string()},
                                   {"qhat", d.qhat.to_string()}, {"rhat", d.rhat.to_string()}};
        t << "k = " << d.k.to_string() << "\n";
        t << "size 2^" << cyclic_size(g).log2 << "\n";
    } else {
        o.status = 1;
    }
    o.text = t.str();
    return o;
}

Outcome cyclic_matrix(const std::string& path, const Settings&) {
    const SpanningSet ss = spanning_set(load_generators(path));
    Outcome o = make("cyclic matrix");
    Json groups = Json::array();
    for (const auto& grp : ss.groups) groups.push_back(grp.size());
    o.json["group_sizes"] = std::move(groups);
    o.json["matrix"] = matrix_json(ss.matrix);
    o.text = format_matrix(ss.matrix);
    return o;
}

Outcome cyclic_size(const std::string& path, const Settings&) {
    const Cardinality c = cyclic_size(load_generators(path));
    Outcome o = make("cyclic size");
    o.json["size"] = size_json(c);
    o.text = "2^" + std::to_string(c.log2) + " = " + c.to_string() + "\n";
    return o;
}

Outcome cyclic_closure(const std::string& path, const Settings&) {
    const std::string text = read_text_file(path);
    // generator files have a key=value header
    const bool generators = text.find('=') != std::string::npos;
    const MixedMatrix m = generators ? spanning_set(parse_generators(text)).matrix : parse_matrix(text);
    const auto bad = first_non_cyclic_row(m);
    Outcome o = make("cyclic closure");
    o.json["cyclic"] = !bad;
    o.json["first_failing_row"] = bad ? Json(*bad) : Json(nullptr);
    o.status = bad ? 1 : 0;
    o.text = bad ? "not cyclic: the shift of row " + std::to_string(*bad) + " is not in the code\n" : "cyclic\n";
    return o;
}

namespace {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

} // namespace

Outcome oracle_check(const std::string& path, const Settings& s) {
    const MixedMatrix input = load_matrix(path);
    std::vector<Check> checks;
    auto finish = [&] {
        Outcome o = make("oracle check");
        Json arr = Json::array();
        std::ostringstream t;
        bool all = true;
        for (const auto& c : checks) {
            arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            t << (c.pass ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            all = all && c.pass;
        }
        o.json["pass"] = all;
        o.json["checks"] = std::move(arr);
        o.status = all ? 0 : 1;
        o.text = t.str();
        return o;
    };

    MixedMatrix g = input;
    if (s.codewords) {
        const CodewordSet listed = CodewordSet::from_vectors(input.split(), input.row_list());
        const SubgroupReport sub = check_subgroup(listed);
        checks.push_back({"listed words form a subgroup", sub.ok, sub.witness});
        if (!sub.ok) return finish();
        g = generating_set(listed);
    }

    const StandardForm sf = standard_form(g);
    const CodewordSet c = enumerate_codewords(sf, s.budget);
    const CodewordSet closure = span_closure(g, s.budget);
    checks.push_back({"standard form spans the additive closure", c == closure,
                      std::to_string(c.size()) + " vs " + std::to_string(closure.size()) + " words"});
    checks.push_back({"size matches the type", c.size() == (std::size_t{1} << cardinality(sf.type()).log2),
                      sf.type().to_string()});
    const SubgroupReport sub = check_subgroup(c);
    checks.push_back({"enumerated code is a subgroup", sub.ok, sub.witness});

    const std::vector<BinaryVector> image = gray_image(c);
    std::vector<BinaryVector> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    checks.push_back({"Gray map is injective on the code", injective, ""});

    const MixedMatrix h = parity_check_matrix(g);
    const auto bad = find_non_orthogonal(g, h);
    checks.push_back({"parity-check rows are orthogonal", !bad,
                      bad ? "<G row " + std::to_string(bad->g_row) + ", H row " + std::to_string(bad->h_row) +
                                "> = " + std::to_string(int(bad->value))
                          : ""});

    const CodewordSet dual = brute_force_dual(c, s.budget);
    const CodewordSet from_h = enumerate_codewords(h, s.budget);
    checks.push_back({"brute-force dual equals the span of the parity-check matrix", dual == from_h,
                      std::to_string(dual.size()) + " vs " + std::to_string(from_h.size()) + " words"});
    const std::size_t log_c = cardinality(sf.type()).log2;
    const std::size_t log_d = std::bit_width(dual.size()) - 1;
    checks.push_back({"|C| |C^perp| equals the ambient size", log_c + log_d == g.split().ambient_log2(),
                      "2^" + std::to_string(log_c) + " * 2^" + std::to_string(log_d)});

    Outcome o = finish();
    // cyclicity is a property of the code, not a consistency check
    o.json["cyclic"] = check_cyclic_closure(g);
    o.text += std::string("cyclic ") + (o.json["cyclic"].get<bool>() ? "yes" : "no") + "\n";
    return o;
}

} // namespace mixedcode::cli

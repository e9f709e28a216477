#include "mixedcode/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "mixedcode/errors.hpp"

namespace mixedcode {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::istringstream is{std::string(text)};
    std::string raw;
    for (std::size_t n = 1; std::getline(is, raw); ++n) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back({n, raw});
    }
    return out;
}

std::vector<int> parse_ints(const std::string& text, std::size_t line) {
    std::istringstream is(text);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw ParseError("invalid integer '" + tok + "'", line);
        out.push_back(v);
    }
    return out;
}

std::string coefficient_list(const Poly& p) {
    std::string out;
    for (Residue c : p.coeffs()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(int(c));
    }
    return out.empty() ? "0" : out;
}

} // namespace

MixedMatrix parse_matrix(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing header line 'alpha beta theta'");
    const auto header = parse_ints(lines[0].text, lines[0].number);
    if (header.size() != 3 || header[0] < 0 || header[1] < 0 || header[2] < 0)
        throw ParseError("header must be three nonnegative integers 'alpha beta theta'", lines[0].number);
    std::optional<AlphabetSplit> split;
    try {
        split.emplace(header[0], header[1], header[2]);
    } catch (const DimensionError& e) {
        throw ParseError(e.what(), lines[0].number);
    }
    MixedMatrix m(*split);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        try {
            m.append(parse_vector(*split, lines[i].text));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lines[i].number);
        }
    }
    return m;
}

std::string format_matrix(const MixedMatrix& m) {
    const auto& s = m.split();
    std::string out = std::to_string(s.alpha()) + " " + std::to_string(s.beta()) + " " + std::to_string(s.theta()) + "\n";
    for (const auto& r : m.row_list()) out += r.to_string() + "\n";
    return out;
}

CyclicGenerators parse_generators(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing header 'alpha=.. beta=.. theta=..'");

    std::map<std::string, long> dims;
    {
        std::istringstream is(lines[0].text);
        std::string tok;
        while (is >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError("expected key=value in header, got '" + tok + "'", lines[0].number);
            const std::string key = tok.substr(0, eq);
            if (key != "alpha" && key != "beta" && key != "theta")
                throw ParseError("unknown header key '" + key + "'", lines[0].number);
            const auto v = parse_ints(tok.substr(eq + 1), lines[0].number);
            if (v.size() != 1 || v[0] < 0) throw ParseError("invalid value for " + key, lines[0].number);
            dims[key] = v[0];
        }
        for (const char* k : {"alpha", "beta", "theta"})
            if (!dims.count(k)) throw ParseError(std::string("header is missing ") + k, lines[0].number);
    }

    std::optional<CyclicGenerators> g;
    try {
        g.emplace(AlphabetSplit(dims["alpha"], dims["beta"], dims["theta"]));
    } catch (const DimensionError& e) {
        throw ParseError(e.what(), lines[0].number);
    }

    const std::map<std::string, Poly CyclicGenerators::*> slots{
        {"f", &CyclicGenerators::f},   {"l1", &CyclicGenerators::l1}, {"l2", &CyclicGenerators::l2},
        {"g1", &CyclicGenerators::g1}, {"a1", &CyclicGenerators::a1}, {"g2", &CyclicGenerators::g2},
        {"p", &CyclicGenerators::p},   {"q", &CyclicGenerators::q},   {"r", &CyclicGenerators::r},
    };
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, body] = lines[i];
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = coefficients'", number);
        std::istringstream ks(body.substr(0, eq));
        std::string key;
        ks >> key;
        const auto slot = slots.find(key);
        if (slot == slots.end()) throw ParseError("unknown polynomial '" + key + "'", number);
        if (seen.count(key))
            throw ParseError("polynomial '" + key + "' already given on line " + std::to_string(seen[key]), number);
        seen[key] = number;
        Poly& target = (*g).*(slot->second);
        const auto coeffs = parse_ints(body.substr(eq + 1), number);
        for (int c : coeffs)
            if (c < 0 || c >= static_cast<int>(target.modulus()))
                throw ParseError("coefficient " + std::to_string(c) + " of " + key + " is outside Z" +
                                     std::to_string(target.modulus()),
                                 number);
        target = Poly(target.exponent(), coeffs);
    }
    return *g;
}

std::string format_generators(const CyclicGenerators& g) {
    std::string out = "alpha=" + std::to_string(g.split.alpha()) + " beta=" + std::to_string(g.split.beta()) +
                      " theta=" + std::to_string(g.split.theta()) + "\n";
    const std::pair<const char*, const Poly*> rows[] = {
        {"f", &g.f}, {"l1", &g.l1}, {"l2", &g.l2}, {"g1", &g.g1}, {"a1", &g.a1},
        {"g2", &g.g2}, {"p", &g.p}, {"q", &g.q}, {"r", &g.r},
    };
    for (const auto& [name, poly] : rows) out += std::string(name) + " = " + coefficient_list(*poly) + "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace mixedcode

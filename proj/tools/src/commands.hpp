#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixedcode/enumerate.hpp"

namespace mixedcode::cli {

using Json = nlohmann::ordered_json;

struct Settings {
    EnumerationBudget budget;
    std::uint64_t seed = 0;
    // oracle check: the file lists every codeword instead of generators
    bool codewords = false;
};

struct Outcome {
    Json json;
    std::string text;
    int status = 0;
};

Outcome additive_standard_form(const std::string& path, const Settings& s);
Outcome additive_dual(const std::string& path, const Settings& s);
Outcome additive_enumerate(const std::string& path, const Settings& s);
Outcome additive_gray(const std::string& path, const Settings& s);
Outcome additive_mindist(const std::string& path, const Settings& s);
/// One file: checks the computed parity-check matrix. Two files: checks the given pair.
Outcome additive_verify_dual(const std::vector<std::string>& paths, const Settings& s);

Outcome cyclic_validate(const std::string& path, const Settings& s);
Outcome cyclic_matrix(const std::string& path, const Settings& s);
Outcome cyclic_size(const std::string& path, const Settings& s);
/// Accepts a generator file or a matrix file.
Outcome cyclic_closure(const std::string& path, const Settings& s);

Outcome oracle_check(const std::string& path, const Settings& s);

} // namespace mixedcode::cli

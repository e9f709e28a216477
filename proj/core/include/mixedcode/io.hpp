#pragma once

#include <string>
#include <string_view>

#include "mixedcode/cyclic.hpp"
#include "mixedcode/matrix.hpp"

namespace mixedcode {

/// Matrix file: a header line "alpha beta theta", then one row per line in the
/// "u | v | w" format. Blank lines and text after '#' are ignored. Errors carry line numbers.
MixedMatrix parse_matrix(std::string_view text);
std::string format_matrix(const MixedMatrix& m);

/// Generator file: a header "alpha=15 beta=7 theta=7", then lines "key = c0 c1 c2 ..." with
/// ascending coefficients. Keys: f l1 l2 g1 a1 g2 p q r; omitted keys are zero.
CyclicGenerators parse_generators(std::string_view text);
std::string format_generators(const CyclicGenerators& g);

/// Whole file contents; throws InputError when the file cannot be read.
std::string read_text_file(const std::string& path);

} // namespace mixedcode

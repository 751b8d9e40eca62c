#pragma once

#include <string>

#include "oapt/rigidity.hpp"

namespace oapt {

/// Scaffold files:
///   {"n": 4, "k": 2,
///    "subspaces": [[[1,1,0,1], [0,1,0,1], ...], ...],   // rows of quadruples
///    "map": [[0, 3], ...],                                 // 0-based indices
///    "apartments": [[0, 1, ...], ...]}                     // optional
/// A quadruple [re_num, re_den, im_num, im_den] is one Gaussian rational;
/// entries are integers or decimal strings (for values beyond 64 bits).
/// Throws Error(Parse) on malformed input, InvalidArgument on invalid content.
Scaffold parse_scaffold_json(const std::string& text);
std::string scaffold_to_json(const Scaffold& s);

}  // namespace oapt

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "catstat/fock.hpp"

namespace catstat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// "c1;c2;x1;b2": cI create, aI free annihilation, bI twisted annihilation,
/// xK exchange at position K, s<number> scale. Indices are 1-based.
ProcessProgram parse_program(std::string_view text);

/// "[]" for the vacuum, or a sum of terms "coef*[i,j,...]" with 1-based
/// letters; coef is a real number or "(re,im)" and may be omitted.
FockVector parse_vector(std::string_view text);

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 when every executed check passes, 1 when
/// any fails and 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catstat::cli

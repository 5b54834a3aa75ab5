#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gravloc/profiles.hpp"

namespace gravloc {

/// Two-column CSV (r_cm, rho_g_per_cm3), header line optional, comma or
/// whitespace separated. Total mass comes from the samples.
DensityProfile load_tabulated_csv(const std::string& path);

/// Full command-line surface. args excludes the program name. Returns the
/// process exit code: 0 success, 2 argument/domain errors (one-line
/// diagnostic on err), 3 numeric non-convergence (achieved residual
/// reported on err).
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace gravloc

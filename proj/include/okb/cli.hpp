#pragma once

#include "okb/graphs.hpp"

#include <iosfwd>

namespace okb {

struct RunConfig {
    std::string field = "3";
    std::string alpha = "1";
    std::string beta = "1";
    std::uint64_t seed = 0;
    int threads = 1;
    long long exact_limit = 10000;
    std::string out;  // empty = stdout
};

/// Resolves the gf2..gf13/gf3t shortcuts; anything else is passed through as
/// a raw field spec.
std::string resolve_field_shortcut(const std::string& name);

/// Parses a signed linear combination of basis symbols, e.g. "z01 - z11" or
/// "2*z20 + (t+1)*z12". Coefficients containing + or - must be parenthesized.
Vec8 parse_element(const Algebra& a, std::string_view text);

/// "(c0, c1, ..., c7)" with field-element printing per coordinate.
std::string format_tuple(const Algebra& a, const Vec8& v);

/// Full command-line entry point; returns the process exit code
/// (0 pass, 1 verification failure, 2 configuration error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace okb

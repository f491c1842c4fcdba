#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "rootpair/field.hpp"
#include "rootpair/poly.hpp"

namespace rootpair {

struct RunConfig {
    enum class Command { count, verify, sweep, weil, exists };
    enum class Format { json, csv, table };

    Command command = Command::count;
    std::optional<uint64_t> p;
    std::optional<std::pair<uint64_t, uint64_t>> p_range; // inclusive
    int64_t alpha = 0;
    std::string poly_spec;
    Format output_format = Format::table;
    std::optional<std::string> output_path;
    unsigned parallelism = 1;
};

/// "lo..hi" with 3 <= lo <= hi <= 10^7; anything else is a usage_error.
std::pair<uint64_t, uint64_t> parse_p_range(const std::string& text);

/// Sparse integer terms of a polynomial spec, syntax-checked but not reduced:
/// a sum of `c`, `x`, `c*x`, `x^e`, `c*x^e` (the `*` may be omitted) joined
/// by `+`/`-`. Throws usage_error with the offending position; exponents are
/// capped at 64.
std::vector<std::pair<int64_t, uint32_t>> parse_poly_terms(const std::string& spec);

/// Terms combined and reduced mod p. A polynomial that reduces to a constant
/// is a usage_error (per-prime callers catch it to skip that prime).
Polynomial parse_poly(const std::string& spec, const PrimeField& field);

/// Executes the command, writes the serialized report to `out` (or the
/// configured output file) and diagnostics to `log`. Returns the process
/// exit code: 0 when everything verified holds, 1 on usage errors, 2 on
/// hypothesis violations, 3 when a check failed (an internal invariant or a
/// verified bound — either way a finding, never silent).
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

} // namespace rootpair

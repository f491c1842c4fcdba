#pragma once

#include <stdexcept>
#include <string>

namespace rootpair {

/// Malformed input: bad prime, unparseable polynomial spec, out-of-range argument.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input violates a theorem/lemma hypothesis (f shares a factor with x, f is a
/// d-th power, a principal character where a non-principal one is required, ...).
/// Distinct from usage_error so callers can report "hypothesis violated" rather
/// than "bad input": the input is well-formed, the theorem just does not apply.
class hypothesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cross-check the library performs on its own results failed. Always a bug.
class internal_check_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rootpair

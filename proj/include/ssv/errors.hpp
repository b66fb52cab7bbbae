/*
  errors.hpp

  Error taxonomy for the ssv library. Verification-style failures
  (violated algebraic identities) are kept distinct from usage errors
  so the CLI can map them to different exit codes.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace ssv {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed value (zero denominator, bad rank, bad index).
struct malformed_error : error {
    explicit malformed_error(const std::string& msg) : error(msg) {}
};

// A q-limit that does not exist (pole at q=0 or q=infinity).
struct divergent_limit_error : error {
    explicit divergent_limit_error(const std::string& msg) : error(msg) {}
};

// A substitution sent a denominator to zero.
struct specialization_pole_error : error {
    explicit specialization_pole_error(const std::string& msg) : error(msg) {}
};

// An exact division left a remainder; signals a violated identity.
struct not_divisible_error : error {
    explicit not_divisible_error(const std::string& msg) : error(msg) {}
};

// Argument outside an operation's stated domain.
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// An internal consistency check failed; must never happen.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace ssv

#pragma once

#include <stdexcept>
#include <string>

namespace psalg {

// Construction/input problems. The CLI maps these to exit code 2; mathematical
// failures are report content, never exceptions.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct algebra_mismatch_error : input_error {
    algebra_mismatch_error() : input_error("operands live in distinct algebras") {}
};

struct parity_error : input_error {
    using input_error::input_error;
};

struct incomplete_derivation_error : input_error {
    explicit incomplete_derivation_error(const std::string& gen)
        : input_error("derivation has no image for generator " + gen) {}
};

struct incomplete_table_error : input_error {
    explicit incomplete_table_error(const std::string& pair)
        : input_error("bracket table has no entry for " + pair) {}
};

struct invalid_constants_error : input_error {
    using input_error::input_error;
};

struct not_poisson_error : input_error {
    using input_error::input_error;
};

struct unvalidated_ore_error : input_error {
    unvalidated_ore_error() : input_error("Ore data has not passed validate_ore") {}
};

struct spec_error : input_error {
    int line;
    spec_error(const std::string& msg, int line_)
        : input_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace psalg

#pragma once

#include <stdexcept>
#include <string>

namespace eafs {

// Malformed or inconsistent input data (topology files, scenario configs).
// Bad call arguments use std::invalid_argument instead; the CLI maps the two
// to distinct exit codes.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eafs

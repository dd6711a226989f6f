#pragma once

#include <stdexcept>
#include <string>

namespace hamspec {

// Raised when an iterative numeric routine cannot reach its tolerance
// (iteration cap, missing sign change, ...). Input validation problems use
// std::invalid_argument / std::domain_error instead.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hamspec

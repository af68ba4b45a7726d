#pragma once

#include <stdexcept>
#include <string>

namespace mrlab {

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid too coarse for the requested operation.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Littlewood-Paley band outside the resolvable range.
struct BandError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace mrlab

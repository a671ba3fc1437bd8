#pragma once
#include <stdexcept>

namespace logspike {

// Base class for all library failures; every throw site uses a subclass.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Parameter or tolerance outside its documented range.
struct ConfigError : Error {
    using Error::Error;
};

// An energy scan found no sign change in (or around) its search window.
struct BracketError : Error {
    using Error::Error;
};

// The adaptive step size collapsed below the representable floor.
struct StiffnessError : Error {
    using Error::Error;
};

// Operation invoked on an object that is not in the required state.
struct StateError : Error {
    using Error::Error;
};

}

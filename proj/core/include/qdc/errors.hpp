#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

struct NotHermitianError : std::runtime_error {
    explicit NotHermitianError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidStateError : std::runtime_error {
    explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTemperatureError : std::domain_error {
    explicit InvalidTemperatureError(const std::string& what) : std::domain_error(what) {}
};

struct WrongModelKindError : std::invalid_argument {
    explicit WrongModelKindError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidCouplingError : std::domain_error {
    explicit InvalidCouplingError(const std::string& what) : std::domain_error(what) {}
};

struct InvalidBracketError : std::invalid_argument {
    explicit InvalidBracketError(const std::string& what) : std::invalid_argument(what) {}
};

struct SweepSpecError : std::invalid_argument {
    explicit SweepSpecError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qdc

#pragma once

#include <stdexcept>
#include <string>

namespace frd {

// Error taxonomy shared by all modules.  InvalidParams maps to CLI exit
// code 2, every other numeric failure maps to exit code 3.

struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

struct NumericFailure : std::runtime_error {
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergence : NumericFailure {
    explicit NonConvergence(const std::string& what) : NumericFailure(what) {}
};

struct QuadratureFailure : NumericFailure {
    explicit QuadratureFailure(const std::string& what) : NumericFailure(what) {}
};

struct TailTooFat : NumericFailure {
    explicit TailTooFat(const std::string& what) : NumericFailure(what) {}
};

struct SeriesDiverged : NumericFailure {
    explicit SeriesDiverged(const std::string& what) : NumericFailure(what) {}
};

struct ContourFailure : NumericFailure {
    explicit ContourFailure(const std::string& what) : NumericFailure(what) {}
};

struct OracleFailure : NumericFailure {
    explicit OracleFailure(const std::string& what) : NumericFailure(what) {}
};

struct StabilityFailure : NumericFailure {
    explicit StabilityFailure(const std::string& what) : NumericFailure(what) {}
};

} // namespace frd

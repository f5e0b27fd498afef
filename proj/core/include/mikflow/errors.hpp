#ifndef MIKFLOW_ERRORS_HPP
#define MIKFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mikflow {

// Validation failures carry a stable name so the CLI can map them to exit
// code 2 and the reports can reference them by name.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidExponent : ValidationError {
    explicit InvalidExponent(const std::string& m) : ValidationError("InvalidExponent: " + m) {}
};
struct NonZeroMean : ValidationError {
    explicit NonZeroMean(const std::string& m) : ValidationError("NonZeroMean: " + m) {}
};
struct ResolutionTooCoarse : ValidationError {
    explicit ResolutionTooCoarse(const std::string& m) : ValidationError("ResolutionTooCoarse: " + m) {}
};
struct InadmissibleExponents : ValidationError {
    explicit InadmissibleExponents(const std::string& m) : ValidationError("InadmissibleExponents: " + m) {}
};
struct ConcentrationTooSmall : ValidationError {
    explicit ConcentrationTooSmall(const std::string& m) : ValidationError("ConcentrationTooSmall: " + m) {}
};
struct DimensionTooSmall : ValidationError {
    explicit DimensionTooSmall(const std::string& m) : ValidationError("DimensionTooSmall: " + m) {}
};
struct InvalidSigma : ValidationError {
    explicit InvalidSigma(const std::string& m) : ValidationError("InvalidSigma: " + m) {}
};
struct MeanDrift : ValidationError {
    explicit MeanDrift(const std::string& m) : ValidationError("MeanDrift: " + m) {}
};
struct BudgetExhausted : ValidationError {
    explicit BudgetExhausted(const std::string& m) : ValidationError("BudgetExhausted: " + m) {}
};

} // namespace mikflow

#endif

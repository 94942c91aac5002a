#pragma once

#include <stdexcept>
#include <string>

namespace screening {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied value: a probability outside [0,1], malformed
/// counts, a bad field in a catalog or scenario file. Maps to CLI exit 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Structurally malformed input that failed before field validation.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A mathematically undefined or unreachable result. Maps to CLI exit 2.
class MathError : public Error {
public:
    using Error::Error;
};

/// A confusion-matrix ratio whose denominator column is empty.
class UndefinedRatioError : public MathError {
public:
    explicit UndefinedRatioError(const std::string& metric)
        : MathError(metric + " is undefined: its denominator is zero"), metric_(metric) {}

    const std::string& metric() const noexcept { return metric_; }

private:
    std::string metric_;
};

/// The test cannot discriminate at the requested operating point:
/// the Bayes denominator vanished (zero sensitivity and perfect
/// specificity give 0/0 at every prevalence).
class DegenerateTestError : public MathError {
public:
    using MathError::MathError;
};

/// The antiderivative's logarithm argument hit zero.
class LogSingularityError : public MathError {
public:
    using MathError::MathError;
};

/// The requested value cannot be produced by this test (e.g. a target
/// predictive value outside the curve's range).
class UnattainableError : public MathError {
public:
    using MathError::MathError;
};

} // namespace screening

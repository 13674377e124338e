#pragma once

#include <stdexcept>
#include <string>

namespace sgk {

// Error categories map onto CLI exit codes: ArgumentError -> 2,
// IngestionError/FormatError -> 3, EstimationError/SamplingError -> 4.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class IngestionError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class EstimationError : public Error {
public:
    using Error::Error;
};

class SamplingError : public Error {
public:
    SamplingError(const std::string& what, long long accepted)
        : Error(what), accepted_(accepted) {}

    [[nodiscard]] long long accepted() const { return accepted_; }

private:
    long long accepted_;
};

class StateError : public Error {
public:
    using Error::Error;
};

class TrainingError : public Error {
public:
    using Error::Error;
};

} // namespace sgk

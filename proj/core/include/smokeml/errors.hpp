#pragma once

#include <stdexcept>
#include <string>

namespace smokeml {

// Error taxonomy. The CLI maps these onto exit codes:
// config/usage -> 1, data -> 2, training/evaluation -> 3.

// Bad configuration file, unknown key, invalid value.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller passed an out-of-range or inconsistent argument.
class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Feature-count mismatch between a fitted object and the data it is applied to.
class DimensionError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// Problems with dataset contents (empty data, bad labels, failed resampling).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required column is missing or the schema itself is inconsistent.
class SchemaError : public DataError {
public:
    using DataError::DataError;
};

// A cell could not be parsed; message carries row/column location.
class ParseError : public DataError {
public:
    using DataError::DataError;
};

// Model fitting failed (divergence, single-class input, ...).
class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace smokeml

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace acckv {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (flags, layouts, thresholds out of range).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Attention matrix has mass above the diagonal.
class CausalityViolation : public Error {
public:
    using Error::Error;
};

// Attention row does not sum to 1 (or has negative entries).
class NotStochastic : public Error {
public:
    using Error::Error;
};

// Token index outside the cache, or a non-increasing gather list.
class IndexError : public Error {
public:
    using Error::Error;
};

// Incompatible matrix/vector dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Cache budget exceeds the number of available multimodal tokens.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Malformed or truncated trace file.
class FormatError : public Error {
public:
    using Error::Error;
};

// Trace file written by an unsupported format version.
class VersionError : public Error {
public:
    using Error::Error;
};

}  // namespace acckv

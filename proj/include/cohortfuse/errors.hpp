#pragma once

#include <stdexcept>
#include <string>

namespace cohortfuse {

// Base class for everything this library throws on contract violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or line.
class ParseError : public Error {
public:
    using Error::Error;
};

// Invalid configuration (bad dimensions, empty vocab, k >= N, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Input value outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Data violates a precondition (non-finite point, missing bundle, ...).
class DataError : public Error {
public:
    using Error::Error;
};

// Operation called on an object in the wrong state (unfitted model, ...).
class StateError : public Error {
public:
    using Error::Error;
};

// Dataset too small for the requested operation.
class SizeError : public Error {
public:
    using Error::Error;
};

// Backend lacks a required capability (e.g. no logprobs).
class CapabilityError : public Error {
public:
    using Error::Error;
};

// Remote backend failed after retries.
class GatewayError : public Error {
public:
    using Error::Error;
};

// Prompt cannot be made to fit the context budget.
class PromptOverflowError : public Error {
public:
    using Error::Error;
};

// Training labels contain a single class.
class DegenerateTaskError : public Error {
public:
    using Error::Error;
};

// A pipeline stage is missing an upstream artifact.
class DependencyError : public Error {
public:
    using Error::Error;
};

// An on-disk artifact was produced under a different configuration.
class StalenessError : public Error {
public:
    using Error::Error;
};

}  // namespace cohortfuse

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace casa {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument is outside its documented domain (bad k, bad grid, ...).
class ParamError : public Error {
public:
    using Error::Error;
};

// A configured size or enumeration cap was exceeded.
class SizeError : public Error {
public:
    using Error::Error;
};

// No feasible solution exists (e.g. more bundles than bidders).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// A strategy emitted an action that fails validation. Aborts the run;
// carries the partial transcript as a diagnostic.
class ProtocolFault : public Error {
public:
    ProtocolFault(const std::string& what, std::string transcript)
        : Error(what), transcript_(std::move(transcript)) {}
    const std::string& transcript() const { return transcript_; }

private:
    std::string transcript_;
};

// The stage safety cap was hit before termination.
class RunawayError : public Error {
public:
    RunawayError(const std::string& what, std::string transcript)
        : Error(what), transcript_(std::move(transcript)) {}
    const std::string& transcript() const { return transcript_; }

private:
    std::string transcript_;
};

// Structured-text parse failure; line() is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Scenario/schema problem; names the offending field.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::string field)
        : Error(what + " [field: " + field + "]"), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

}  // namespace casa

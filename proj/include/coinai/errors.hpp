#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coinai {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::string message, size_t line, size_t column)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}

    size_t line() const { return line_; }
    size_t column() const { return column_; }

private:
    size_t line_;
    size_t column_;
};

class UndefinedNonterminal : public Error {
public:
    explicit UndefinedNonterminal(const std::string& name)
        : Error("undefined nonterminal <" + name + ">"), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class DuplicateRuleHead : public Error {
public:
    explicit DuplicateRuleHead(const std::string& name)
        : Error("duplicate rule head <" + name + "> (use | for alternatives)"), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class DerivationLimitExceeded : public Error {
public:
    DerivationLimitExceeded(uint64_t steps, uint64_t resets)
        : Error("derivation limit exceeded (steps=" + std::to_string(steps) +
                ", resets=" + std::to_string(resets) + ")"),
          steps_(steps),
          resets_(resets) {}

    uint64_t steps() const { return steps_; }
    uint64_t resets() const { return resets_; }

private:
    uint64_t steps_;
    uint64_t resets_;
};

class MalformedSentence : public Error {
public:
    using Error::Error;
};

class MalformedBlob : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NumericalDivergence : public Error {
public:
    using Error::Error;
};

class MalformedChainFile : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(std::string field, std::string reason)
        : Error(field + ": " + reason), field_(std::move(field)), reason_(std::move(reason)) {}

    const std::string& field() const { return field_; }
    const std::string& reason() const { return reason_; }

private:
    std::string field_;
    std::string reason_;
};

}  // namespace coinai

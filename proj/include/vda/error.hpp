#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vda {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Data does not match the declared language (duty lists, names, sections).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A named entity (action, situation, disjunct) does not exist.
class LookupError : public Error {
public:
    using Error::Error;
};

/// An operation was called with arguments it does not accept.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A contrary is missing for some assumption.
class TotalityError : public Error {
public:
    using Error::Error;
};

/// An assumption appears as the head of a rule.
class FlatnessError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    ResourceError(std::string cap, std::size_t limit)
        : Error("resource limit exceeded: " + cap + " (" + std::to_string(limit) + ")"),
          cap_(std::move(cap)), limit_(limit) {}

    const std::string& cap() const noexcept { return cap_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::string cap_;
    std::size_t limit_;
};

/// Input text could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return "parse error: " + what;
        return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
               ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Some perception assumption is neither skeptically justified nor skeptically rejected.
class IndeterminateSituationError : public Error {
public:
    explicit IndeterminateSituationError(std::vector<std::string> undecided)
        : Error(format(undecided)), undecided_(std::move(undecided)) {}

    const std::vector<std::string>& undecided() const noexcept { return undecided_; }

private:
    static std::string format(const std::vector<std::string>& undecided) {
        std::string msg = "indeterminate situation: undecided assumptions:";
        for (const auto& a : undecided) msg += " " + a;
        return msg;
    }

    std::vector<std::string> undecided_;
};

} // namespace vda

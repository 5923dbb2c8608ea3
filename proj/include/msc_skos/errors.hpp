#pragma once

#include <stdexcept>
#include <string>

namespace msc {

// Base of every error raised by the library. Input and contract problems
// are reported through these; validation findings are not exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedCode : public Error {
public:
    explicit MalformedCode(const std::string& text)
        : Error("malformed MSC code '" + text + "'"), text_(text) {}
    const std::string& text() const noexcept { return text_; }

private:
    std::string text_;
};

class DuplicateCode : public Error {
public:
    explicit DuplicateCode(const std::string& code)
        : Error("duplicate MSC code " + code), code_(code) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Empty tables, missing mandatory configuration and similar input contract violations.
class InputError : public Error {
public:
    using Error::Error;
};

class UnknownCategory : public Error {
public:
    explicit UnknownCategory(const std::string& name)
        : Error("unknown change category '" + name + "'") {}
};

class ArityViolation : public Error {
public:
    using Error::Error;
};

class DanglingTarget : public Error {
public:
    explicit DanglingTarget(const std::string& code)
        : Error("change target " + code + " does not exist in the new scheme"), code_(code) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class InvalidIri : public Error {
public:
    using Error::Error;
};

class UnprefixableIri : public Error {
public:
    explicit UnprefixableIri(const std::string& iri)
        : Error("relative IRI cannot be serialized: <" + iri + ">") {}
};

class TurtleSyntaxError : public Error {
public:
    TurtleSyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error("turtle:" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class CsvError : public InputError {
public:
    using InputError::InputError;
};

} // namespace msc

// Error types shared across the library.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace splitmat {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A limit protecting an exhaustive walk (2^dim enumeration, partition scan, ...)
// was exceeded. The guard name and limit are part of the message contract.
class GuardViolation : public Error {
public:
    GuardViolation(std::string guard, std::size_t limit, std::size_t got)
        : Error("guard '" + guard + "' exceeded: limit " + std::to_string(limit) +
                ", got " + std::to_string(got)),
          guard_(std::move(guard)),
          limit_(limit),
          got_(got) {}

    const std::string& guard() const noexcept { return guard_; }
    std::size_t limit() const noexcept { return limit_; }
    std::size_t got() const noexcept { return got_; }

private:
    std::string guard_;
    std::size_t limit_;
    std::size_t got_;
};

class DimensionExceeded : public GuardViolation {
public:
    DimensionExceeded(std::size_t limit, std::size_t got)
        : GuardViolation("enumeration-dimension", limit, got) {}
};

class GroundTooLarge : public GuardViolation {
public:
    GroundTooLarge(std::string guard, std::size_t limit, std::size_t got)
        : GuardViolation(std::move(guard), limit, got) {}
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& label)
        : Error("unknown element label '" + label + "'") {}
};

class IdenticalElements : public Error {
public:
    explicit IdenticalElements(const std::string& label)
        : Error("elements must be distinct, got '" + label + "' twice") {}
};

class NotACircuit : public Error {
public:
    explicit NotACircuit(const std::string& what) : Error(what) {}
};

class NonAdjacentEdges : public Error {
public:
    explicit NonAdjacentEdges(const std::string& what) : Error(what) {}
};

class EmptySide : public Error {
public:
    explicit EmptySide(const std::string& what) : Error(what) {}
};

class UnknownStatement : public Error {
public:
    explicit UnknownStatement(const std::string& id)
        : Error("unknown statement id '" + id + "'") {}
};

class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, std::size_t column, const std::string& message)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          file_(std::move(file)),
          line_(line),
          column_(column) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string file_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace splitmat

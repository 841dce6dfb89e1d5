// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace deon {

// Parse failure. Carries the 1-based source position and, when known, the
// set of tokens that would have been accepted at that point.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string msg, int line, int column,
                std::vector<std::string> expected = {})
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                             ": " + msg + render_expected(expected)),
          line_(line), column_(column), expected_(std::move(expected)) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string render_expected(const std::vector<std::string>& expected) {
        if (expected.empty()) return {};
        std::string out = " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) out += ", ";
            out += expected[i];
        }
        out += ")";
        return out;
    }

    int line_;
    int column_;
    std::vector<std::string> expected_;
};

// Two `system` headers in one file.
class DuplicateNameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A system with no formulas where at least one is required.
class EmptySystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The tableau exceeded its node budget. Resource exhaustion, never a verdict.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::string msg, std::size_t node_cap)
        : std::runtime_error(std::move(msg)), node_cap_(node_cap) {}

    std::size_t node_cap() const noexcept { return node_cap_; }

private:
    std::size_t node_cap_;
};

// A formula mentions an atom outside the vocabulary in play.
class UnknownAtomError : public std::runtime_error {
public:
    UnknownAtomError(std::string msg, std::string atom)
        : std::runtime_error(std::move(msg)), atom_(std::move(atom)) {}

    const std::string& atom() const noexcept { return atom_; }

private:
    std::string atom_;
};

// Bounded-search limits of the brute-force oracle were violated.
class BoundExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace deon

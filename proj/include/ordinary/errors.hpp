#pragma once

#include <stdexcept>
#include <string>

namespace ordinary {

// Degenerate-but-legal inputs: the sought structure provably does not exist.
enum class DegenerateReason { collinear, co_conic, concyclic, coplanar };

inline const char* to_string(DegenerateReason r) {
    switch (r) {
        case DegenerateReason::collinear: return "collinear";
        case DegenerateReason::co_conic: return "co-conic";
        case DegenerateReason::concyclic: return "concyclic";
        case DegenerateReason::coplanar: return "coplanar";
    }
    return "unknown";
}

class DegenerateInput : public std::runtime_error {
public:
    DegenerateInput(DegenerateReason reason, const std::string& what)
        : std::runtime_error(what), reason_(reason) {}
    DegenerateReason reason() const { return reason_; }

private:
    DegenerateReason reason_;
};

// A theoretically-impossible state was reached. Never caught internally:
// the finders abort loudly instead of returning an unverified answer.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace ordinary

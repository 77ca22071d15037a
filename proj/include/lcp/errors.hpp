#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input errors (CLI exit code 1).
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct CycleError : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    std::string label;
    explicit UnknownLabel(const std::string& l) : Error("unknown label: " + l), label(l) {}
};

struct LabelCollision : Error {
    std::string label;
    explicit LabelCollision(const std::string& l)
        : Error("label already present: " + l), label(l) {}
};

// Enumeration would exceed the configured cap (CLI exit code 2).
struct SizeLimit : Error {
    using Error::Error;
};

// A theorem-guaranteed property failed; carries the witness (CLI exit code 3).
struct InvariantViolation : Error {
    using Error::Error;
};

struct PosetMismatch : Error {
    PosetMismatch() : Error("closures live on different posets") {}
};

struct NoGreatestElement : Error {
    NoGreatestElement() : Error("poset has no greatest element") {}
};

struct NotExtensive : Error {
    int element;
    NotExtensive(int x, const std::string& label)
        : Error("not extensive at " + label), element(x) {}
};

struct NotMonotone : Error {
    int lo, hi;
    NotMonotone(int x, int y, const std::string& lx, const std::string& ly)
        : Error("not monotone on " + lx + " <= " + ly), lo(x), hi(y) {}
};

struct NotIdempotent : Error {
    int element;
    NotIdempotent(int x, const std::string& label)
        : Error("not idempotent at " + label), element(x) {}
};

struct NotMlbClosed : Error {
    std::uint32_t subset;   // B with mlb(B) escaping the candidate set
    std::uint32_t escaped;  // mlb(B) \ A
    NotMlbClosed(std::uint32_t b, std::uint32_t esc, const std::string& msg)
        : Error(msg), subset(b), escaped(esc) {}
};

}  // namespace lcp

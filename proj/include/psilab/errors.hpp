#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psilab {

/// Malformed textual input. Carries the byte offset of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An argument outside the domain of an operation (k = 0, vertex out of range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Graph too large for a representation or an exponential enumeration.
class UnsupportedSize : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition (non-surjective coloring, bad witness, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A search exhausted its node budget before reaching an exact answer.
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed. Always a bug in this library.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace psilab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braket {

// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_input : public error {
public:
    using error::error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

// All weights vanish (or the Euclidean norm is below the zero threshold).
class zero_state : public error {
public:
    using error::error;
};

// Squared norm of a supplied amplitude vector is not 1 within tolerance.
class norm_violation : public error {
public:
    norm_violation(const std::string& what, double norm) : error(what), norm_(norm) {}
    double norm() const noexcept { return norm_; }

private:
    double norm_;
};

// An operator mapped the input state to the zero vector.
class annihilated_state : public error {
public:
    using error::error;
};

// A dense view or state would exceed the configured size guard.
class resource_limit : public error {
public:
    using error::error;
};

enum class parse_error_kind { syntax, dimension, context_required, label_range };

class parse_error : public error {
public:
    parse_error(parse_error_kind kind, std::size_t position, const std::string& message)
        : error(message + " (at position " + std::to_string(position) + ")"),
          kind_(kind),
          position_(position),
          message_(message) {}

    parse_error_kind kind() const noexcept { return kind_; }
    // Zero-based offset into the parsed text.
    std::size_t position() const noexcept { return position_; }
    // The description without the position suffix.
    const std::string& message() const noexcept { return message_; }

private:
    parse_error_kind kind_;
    std::size_t position_;
    std::string message_;
};

}  // namespace braket

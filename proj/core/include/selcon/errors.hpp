#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selcon {

/// Malformed or inconsistent user input (bad ids, unknown labels, bad files).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact search refused to run: the instance exceeds the configured cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& what, std::size_t size, std::size_t cap)
        : std::runtime_error(what + " (size " + std::to_string(size) + " exceeds cap " +
                             std::to_string(cap) + ")"),
          size_(size), cap_(cap) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

} // namespace selcon

namespace selcon {

/// A metric was requested on a graph where it is not defined (e.g. density with n < 2).
class UndefinedMetricError : public InputError {
public:
    using InputError::InputError;
};

} // namespace selcon

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morsify {

// Malformed job input or polynomial text.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t position)
        : InputError(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A Groebner computation ran past its pair or degree budget.
class ResourceCapExceeded : public std::runtime_error {
public:
    explicit ResourceCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The chosen linear form is not general enough for this input.
class GenericityFailure : public std::runtime_error {
public:
    explicit GenericityFailure(const std::string& what) : std::runtime_error(what) {}
};

class NotSupported : public std::runtime_error {
public:
    explicit NotSupported(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial system expected to be zero-dimensional has a positive-dimensional solution set.
class NotFinite : public std::runtime_error {
public:
    explicit NotFinite(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace morsify

#pragma once

#include <stdexcept>
#include <string>

namespace hooks {

// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

// A vertex set that is not a union of blocks of the ambient partition.
class IncompatibleSet : public Error {
public:
    using Error::Error;
};

// unsplice called with a vertex set that cuts through a decomposition part.
class InvalidSplit : public Error {
public:
    using Error::Error;
};

// A tree that is not in E(pi): some block is not an ancestor chain.
class NotInE : public Error {
public:
    using Error::Error;
};

// A code entry c_i outside 1..mu_i.
class CodeOutOfRange : public Error {
public:
    CodeOutOfRange(std::size_t index, long value, long bound)
        : Error(value < 1 ? "c_" + std::to_string(index) + "=" + std::to_string(value) + " < 1"
                          : "c_" + std::to_string(index) + "=" + std::to_string(value) + " > mu_" +
                                std::to_string(index) + "=" + std::to_string(bound)),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Raised when an internal consistency check fails; never a property of valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace hooks

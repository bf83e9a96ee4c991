#pragma once

#include <stdexcept>
#include <string>

namespace mathieu_lattice {

// Invalid parameters or violated preconditions.  CLI exit code 1.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical failure (e.g. an eigenvalue that did not converge).  Carries the
// offending index when one exists.  CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg, int index = -1)
        : std::runtime_error(msg), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

// Filesystem or stream failure.  CLI exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mathieu_lattice

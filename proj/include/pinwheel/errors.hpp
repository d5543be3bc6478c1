#pragma once

#include <stdexcept>
#include <string>

namespace pinwheel {

// Error categories map one-to-one onto the CLI exit codes
// (2 = config, 3 = estimation, 4 = I/O).

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pinwheel

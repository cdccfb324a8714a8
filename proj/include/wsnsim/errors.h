#pragma once

#include <stdexcept>

namespace wsnsim {

// config_error: bad user input (config file, flags, parameter ranges)
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// io_error: filesystem trouble while reading configs or writing results
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invariant_error: the simulation caught itself in an impossible state
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wsnsim

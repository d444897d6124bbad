#pragma once

#include <stdexcept>

namespace etop {

// Error taxonomy shared by the whole library. The CLI maps these onto
// process exit codes (domain failure = 1, usage = 2, I/O = 3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct InvalidSolution : Error {
    using Error::Error;
};

struct InvalidEncoding : Error {
    using Error::Error;
};

struct NotEncodable : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace etop

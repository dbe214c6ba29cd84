#pragma once

#include <stdexcept>
#include <string>

namespace hedet {

/// Raised on precondition violations and malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hedet

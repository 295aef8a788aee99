#pragma once

#include <stdexcept>
#include <string>

namespace argvoi {

// Raised for every invalid input the library rejects: malformed ids,
// out-of-range probabilities, unknown arguments, grammar errors, limits.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace argvoi

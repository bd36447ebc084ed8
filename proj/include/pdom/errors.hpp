#pragma once

#include <stdexcept>

namespace pdom {

// Malformed caller input: bad parameters, unparsable documents, invalid ids.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Work refused because it would exceed a configured cap (solver size,
// sampling retry budget).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pdom

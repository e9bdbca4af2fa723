#pragma once

#include <stdexcept>
#include <string>

namespace qca {

// Raised when an exhaustive check or a dense construction would exceed its
// configured size cap. Callers either fall back to a cheaper path or give up.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by operations that require a bijective global map.
class NotBijective : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace qca

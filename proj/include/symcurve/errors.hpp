#pragma once

#include <stdexcept>
#include <string>

namespace symcurve {

/// An exact identity that must hold did not. Always a bug, never rounding;
/// the message carries a dump of the curve and intermediate values.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace symcurve

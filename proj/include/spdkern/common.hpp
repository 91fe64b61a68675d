#pragma once

#include <stdexcept>
#include <string>

namespace spdkern {

// Library-wide exception type. Precondition violations, inadmissible
// parameters and internal consistency failures all throw this.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spdkern

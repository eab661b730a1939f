#include "cesaro/error.hpp"

#include <sstream>

namespace cesaro {

RadiusError::RadiusError(double requested, double admissible)
    : Error([&] {
        std::ostringstream os;
        os.precision(15);
        os << "radius " << requested << " exceeds admissible radius " << admissible;
        return os.str();
      }()),
      requested_(requested),
      admissible_(admissible) {}

QuadratureError::QuadratureError(const std::string& what, double partial_value)
    : Error(what), partial_(partial_value) {}

}  // namespace cesaro

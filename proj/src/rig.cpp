#include "calcat/rig.hpp"

#include <sstream>

namespace calcat {

std::string scalar_str(const Rational& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace calcat

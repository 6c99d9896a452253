#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitcode {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace orbitcode

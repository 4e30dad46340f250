#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace weave {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace weave

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dbac {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace dbac

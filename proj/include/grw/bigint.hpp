#ifndef GRW_BIGINT_HPP
#define GRW_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace grw {

// All counts are exact arbitrary-precision integers; no floating point is
// used anywhere in the library.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& v) { return v.str(); }

inline Count count_from_decimal(const std::string& s) { return Count(s); }

}  // namespace grw

#endif

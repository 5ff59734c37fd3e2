#ifndef PFAFF_RATIONAL_HPP
#define PFAFF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pfaff {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

inline Int numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

} // namespace pfaff

#endif

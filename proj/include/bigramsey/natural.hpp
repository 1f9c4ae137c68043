#ifndef BIGRAMSEY_NATURAL_HPP
#define BIGRAMSEY_NATURAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bigramsey {

/// Arbitrary-precision natural number used for coefficients, counts and degrees.
using Natural = boost::multiprecision::cpp_int;

/// A degree table: entry j holds T(j, alpha) (or an upper bound for it).
/// Entry 0 is always 1.
using DegreeTable = std::vector<Natural>;

/// Raised when an enumeration would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Natural& x) { return x.str(); }

inline Natural nat_pow(const Natural& base, std::size_t exponent) {
  Natural result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

}  // namespace bigramsey

#endif  // BIGRAMSEY_NATURAL_HPP

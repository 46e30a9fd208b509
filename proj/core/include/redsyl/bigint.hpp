#ifndef REDSYL_BIGINT_HPP
#define REDSYL_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace redsyl {

// Exact unbounded integers. Sylow counts and the products in the bound checks
// overflow 64 bits already at desk scale (e.g. 256^18).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline std::string big_str(const BigInt& value) { return value.str(); }

} // namespace redsyl

#endif

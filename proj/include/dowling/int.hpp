#ifndef DOWLING_INT_HPP
#define DOWLING_INT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dowling {

// Exact integer used for every coefficient and counter that can outgrow
// machine words (Stirling numbers already do so around n = 21).
using Int = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a brute-force enumeration would exceed its subset cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dowling

#endif

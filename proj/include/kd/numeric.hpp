#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kd {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals.  No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (word grammar, matrix files, CLI values).
struct parse_error : error {
    using error::error;
};

// A documented precondition was violated by the caller.
struct domain_error : error {
    using error::error;
};

// A consistency check inside a derivation failed; signals a bug, not bad input.
struct internal_error : error {
    using error::error;
};

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string to_string(const Int& v) { return v.str(); }

// Reduced form, "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rat& r)
{
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int parse_integer(const std::string& text)
{
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw parse_error("not an integer: '" + text + "'");
    }
}

inline Rat parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("not a rational: '" + text + "'");
    }
}

} // namespace kd

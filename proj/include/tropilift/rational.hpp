#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace tropilift {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

/// Smallest positive rational that is an integer multiple of both a and b.
inline Rat rat_lcm(const Rat& a, const Rat& b) {
    return Rat(int_lcm(rat_num(a), rat_num(b)), int_gcd(rat_den(a), rat_den(b)));
}

/// Edge length: a positive rational or the distinguished infinite value.
struct Length {
    bool infinite = false;
    Rat value = 0;  // meaningful only when finite

    static Length inf() { return Length{true, 0}; }
    static Length finite(const Rat& v) { return Length{false, v}; }

    bool operator==(const Length& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

std::string format_rat(const Rat& r);
std::string format_length(const Length& l);

/// Parses "p/q", "p" or "inf". Throws std::invalid_argument on malformed
/// input (including zero denominators).
Length parse_length(const std::string& s);
Rat parse_rat(const std::string& s);

// ---------------------------------------------------------------------------

inline std::string format_rat(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::string format_length(const Length& l) {
    return l.infinite ? "inf" : format_rat(l.value);
}

inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);
}

inline Length parse_length(const std::string& s) {
    if (s == "inf") return Length::inf();
    return Length::finite(parse_rat(s));
}

}  // namespace tropilift

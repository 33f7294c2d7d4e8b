#ifndef LVA_RATIONAL_HPP
#define LVA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lva {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// C(n, k) for n possibly negative is not needed; callers pass n >= 0.
inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

// Least nonnegative residue of an integral rational.
inline Integer mod_p(const Rational& q, int p) {
    if (!is_integer(q)) throw std::invalid_argument("mod_p on non-integer");
    Integer r = numerator(q) % p;
    if (r < 0) r += p;
    return r;
}

} // namespace lva

#endif

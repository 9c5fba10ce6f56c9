#include "lingame/numeric.hpp"

#include <cctype>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lingame/errors.hpp"

namespace lingame {

Residue mod_reduce(Int v, const Int& d) {
    v %= d;
    if (v < 0) v += d;
    return v;
}

Residue mod_add(const Residue& a, const Residue& b, const Int& d) {
    Int s = a + b;
    if (s >= d) s -= d;
    return s;
}

Residue mod_sub(const Residue& a, const Residue& b, const Int& d) {
    Int s = a - b;
    if (s < 0) s += d;
    return s;
}

Residue mod_neg(const Residue& a, const Int& d) {
    if (a == 0) return 0;
    return d - a;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

Int parse_decimal(const std::string& s) {
    if (s.empty()) throw InputError("empty decimal string");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("not a decimal string: \"" + s + "\"");
    }
    return Int(s);
}

std::string rat_to_fraction_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string rat_to_decimal_string(const Rat& r) {
    using Big = boost::multiprecision::cpp_bin_float_50;
    Big v = Big(numerator(r)) / Big(denominator(r));
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

double rat_to_double(const Rat& r) {
    using Big = boost::multiprecision::cpp_bin_float_50;
    Big v = Big(numerator(r)) / Big(denominator(r));
    return v.convert_to<double>();
}

} // namespace lingame

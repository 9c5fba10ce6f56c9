#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lingame {

/// Arbitrary-precision signed integer. Moduli grow like 2^n n^{3n}, so all
/// exponent arithmetic is done exactly at arbitrary precision.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used for classical values and bound arithmetic.
using Rat = boost::multiprecision::cpp_rational;

/// A residue is an Int kept in [0, d). The reduction helpers below are the
/// only places producing residues from raw arithmetic.
using Residue = Int;

/// Reduce v into [0, d); v may be negative.
Residue mod_reduce(Int v, const Int& d);

/// (a + b) mod d for already-reduced a, b.
Residue mod_add(const Residue& a, const Residue& b, const Int& d);

/// (a - b) mod d for already-reduced a, b.
Residue mod_sub(const Residue& a, const Residue& b, const Int& d);

/// Additive inverse: (d - a) mod d.
Residue mod_neg(const Residue& a, const Int& d);

/// Deterministic primality test, exact for the sizes used here.
bool is_prime(const Int& n);

/// Parse a non-empty string of decimal digits; rejects signs, blanks, hex.
Int parse_decimal(const std::string& s);

/// "p/q" in lowest terms ("p" when q == 1).
std::string rat_to_fraction_string(const Rat& r);

/// Decimal rendering with 15 significant digits.
std::string rat_to_decimal_string(const Rat& r);

/// Nearest double (used only where machine precision is the contract).
double rat_to_double(const Rat& r);

} // namespace lingame

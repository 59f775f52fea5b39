#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e2lab {

/// Exact integer type used everywhere in the core. Coordinates and norms
/// grow without bound under words and orbit searches, so fixed-width
/// integers are not allowed here.
using Int = boost::multiprecision::cpp_int;

struct RingMismatchError : std::invalid_argument {
    RingMismatchError() : std::invalid_argument("operands live in different rings") {}
};

struct NotUnimodularError : std::domain_error {
    explicit NotUnimodularError(const std::string& what) : std::domain_error(what) {}
};

struct OutOfScopeRingError : std::invalid_argument {
    explicit OutOfScopeRingError(const std::string& what) : std::invalid_argument(what) {}
};

/// Shape of an imaginary quadratic order Z[w].
enum class Form { Sqrt, Half };

/// An imaginary quadratic order Z[w] with parameter D >= 1.
///
///   Sqrt: w = sqrt(-D),            minimal polynomial w^2 + D = 0
///   Half: w = (1 + sqrt(1-4D))/2,  minimal polynomial w^2 - w + D = 0
///
/// The Gaussian-style order Z[di] is encoded as Sqrt with D = d^2 and
/// w = di; see gaussian_order().
struct Ring {
    Form form = Form::Sqrt;
    Int D = 1;

    friend bool operator==(const Ring&, const Ring&) = default;
};

Ring make_ring(Form form, Int D);
Ring gaussian_order(const Int& d);

/// Sqrt parameter D' = 4D - 1 whose order carries the same constructions
/// as the Half-form order with parameter D.
Int half_to_sqrt_partner(const Int& D);

/// Text form "sqrt:D" or "half:D".
Ring parse_ring(std::string_view text);
std::string to_string(const Ring& ring);

/// Human-readable description of w for report headers, e.g. "sqrt(-4) = 2i".
std::string omega_description(const Ring& ring);

/// An element a + b*w of its ambient ring. Coordinates are exact.
struct QuadInt {
    Ring ring;
    Int a;
    Int b;

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

QuadInt qi(const Ring& ring, Int a, Int b);
QuadInt qi_int(const Ring& ring, Int a);

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(const QuadInt& x, const QuadInt& y);

QuadInt conj(const QuadInt& x);
Int norm_sq(const QuadInt& x);

bool is_zero(const QuadInt& x);
bool is_one(const QuadInt& x);
bool is_unit(const QuadInt& x);

/// Inverse of a unit (norm_sq == 1); throws std::invalid_argument otherwise.
QuadInt unit_inverse(const QuadInt& x);

/// num / den when den divides num exactly in the ring, absent otherwise.
/// den == 0 yields absent.
std::optional<QuadInt> divide_exact(const QuadInt& num, const QuadInt& den);

/// Coordinate order (a, b), for deterministic containers and tie-breaks.
bool coord_less(const QuadInt& x, const QuadInt& y);

/// Text form "a+b*w" ("3+2*w", "-1", "0-1*w"). Printing and parsing
/// round-trip bit-exactly.
std::string to_string(const QuadInt& x);
QuadInt parse_quadint(const Ring& ring, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Ring& ring);
std::ostream& operator<<(std::ostream& os, const QuadInt& x);

/// Minimal positive solution of x^2 - D y^2 = 1.
struct PellSolution {
    Int x;
    Int y;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Fundamental Pell solution via the periodic continued fraction of
/// sqrt(D); absent exactly when D is a perfect square.
std::optional<PellSolution> pell_fundamental(const Int& D);

/// Floor of sqrt(n); n must be >= 0.
Int isqrt(const Int& n);

/// Floor division, denominator must be nonzero.
Int floor_div(const Int& num, const Int& den);

}  // namespace e2lab

#include "e2lab/ring.hpp"

#include <cctype>
#include <ostream>

namespace e2lab {

namespace {

void require_same_ring(const QuadInt& x, const QuadInt& y) {
    if (x.ring != y.ring) throw RingMismatchError{};
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Ring make_ring(Form form, Int D) {
    if (D < 1) throw std::invalid_argument("ring parameter D must be >= 1");
    return Ring{form, std::move(D)};
}

Ring gaussian_order(const Int& d) {
    if (d < 1) throw std::invalid_argument("gaussian_order: d must be >= 1");
    return Ring{Form::Sqrt, d * d};
}

Int half_to_sqrt_partner(const Int& D) {
    if (D < 1) throw std::invalid_argument("half_to_sqrt_partner: D must be >= 1");
    return 4 * D - 1;
}

Ring parse_ring(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("ring must look like sqrt:D or half:D");
    std::string_view head = text.substr(0, colon);
    std::string_view tail = text.substr(colon + 1);
    if (tail.empty()) throw std::invalid_argument("ring is missing the parameter D");
    for (char c : tail)
        if (!is_digit(c)) throw std::invalid_argument("ring parameter D must be a positive decimal integer");
    Form form;
    if (head == "sqrt") form = Form::Sqrt;
    else if (head == "half") form = Form::Half;
    else throw std::invalid_argument("unknown ring form: " + std::string(head));
    return make_ring(form, Int(std::string(tail)));
}

std::string to_string(const Ring& ring) {
    return (ring.form == Form::Sqrt ? "sqrt:" : "half:") + ring.D.str();
}

std::string omega_description(const Ring& ring) {
    if (ring.form == Form::Sqrt) {
        Int root = isqrt(ring.D);
        if (root * root == ring.D) return "sqrt(-" + ring.D.str() + ") = " + root.str() + "i";
        return "sqrt(-" + ring.D.str() + ")";
    }
    return "(1+sqrt(" + Int(1 - 4 * ring.D).str() + "))/2";
}

QuadInt qi(const Ring& ring, Int a, Int b) {
    return QuadInt{ring, std::move(a), std::move(b)};
}

QuadInt qi_int(const Ring& ring, Int a) {
    return QuadInt{ring, std::move(a), 0};
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x, y);
    return QuadInt{x.ring, x.a + y.a, x.b + y.b};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x, y);
    return QuadInt{x.ring, x.a - y.a, x.b - y.b};
}

QuadInt operator-(const QuadInt& x) {
    return QuadInt{x.ring, -x.a, -x.b};
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x, y);
    const Int& D = x.ring.D;
    Int cross = x.a * y.b + x.b * y.a;
    if (x.ring.form == Form::Sqrt) {
        // (a+bw)(c+ew) = ac - D be + (ae+bc) w,   w^2 = -D
        return QuadInt{x.ring, x.a * y.a - D * x.b * y.b, std::move(cross)};
    }
    // (a+bw)(c+ew) = ac - D be + (ae+bc+be) w,  w^2 = w - D
    return QuadInt{x.ring, x.a * y.a - D * x.b * y.b, cross + x.b * y.b};
}

QuadInt conj(const QuadInt& x) {
    if (x.ring.form == Form::Sqrt) return QuadInt{x.ring, x.a, -x.b};
    return QuadInt{x.ring, x.a + x.b, -x.b};  // conj(w) = 1 - w
}

Int norm_sq(const QuadInt& x) {
    if (x.ring.form == Form::Sqrt) return x.a * x.a + x.ring.D * x.b * x.b;
    return x.a * x.a + x.a * x.b + x.ring.D * x.b * x.b;
}

bool is_zero(const QuadInt& x) { return x.a == 0 && x.b == 0; }

bool is_one(const QuadInt& x) { return x.a == 1 && x.b == 0; }

bool is_unit(const QuadInt& x) { return norm_sq(x) == 1; }

QuadInt unit_inverse(const QuadInt& x) {
    if (!is_unit(x)) throw std::invalid_argument("unit_inverse: element is not a unit");
    return conj(x);  // x * conj(x) = norm_sq(x) = 1
}

std::optional<QuadInt> divide_exact(const QuadInt& num, const QuadInt& den) {
    if (num.ring != den.ring) throw RingMismatchError{};
    Int n = norm_sq(den);
    if (n == 0) return std::nullopt;
    QuadInt scaled = num * conj(den);  // num/den = num*conj(den)/norm_sq(den)
    if (scaled.a % n != 0 || scaled.b % n != 0) return std::nullopt;
    return QuadInt{num.ring, scaled.a / n, scaled.b / n};
}

bool coord_less(const QuadInt& x, const QuadInt& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

std::string to_string(const QuadInt& x) {
    std::string out = x.a.str();
    if (x.b != 0) {
        out += (x.b < 0) ? '-' : '+';
        out += Int(abs(x.b)).str();
        out += "*w";
    }
    return out;
}

QuadInt parse_quadint(const Ring& ring, std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty element");

    Int a = 0, b = 0;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        Int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms in: " + s);
        }
        if (i >= s.size()) throw std::invalid_argument("dangling sign in: " + s);
        first = false;

        if (s[i] == 'w') {  // bare w term
            b += sign;
            ++i;
            continue;
        }
        if (!is_digit(s[i])) throw std::invalid_argument("unexpected character in element: " + s);
        std::size_t j = i;
        while (j < s.size() && is_digit(s[j])) ++j;
        Int mag(s.substr(i, j - i));
        i = j;
        if (i < s.size() && (s[i] == '*' || s[i] == 'w')) {
            if (s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] != 'w')
                    throw std::invalid_argument("expected w after '*' in: " + s);
            }
            ++i;  // consume 'w'
            b += sign * mag;
        } else {
            a += sign * mag;
        }
    }
    return QuadInt{ring, std::move(a), std::move(b)};
}

std::optional<PellSolution> pell_fundamental(const Int& D) {
    if (D < 1) throw std::invalid_argument("pell_fundamental: D must be >= 1");
    Int a0 = isqrt(D);
    if (a0 * a0 == D) return std::nullopt;

    // Continued fraction of sqrt(D); the fundamental solution is the first
    // convergent h/k with h^2 - D k^2 = 1.
    Int m = 0, den = 1, a = a0;
    Int h_prev = 1, h = a0;
    Int k_prev = 0, k = 1;
    while (h * h - D * k * k != 1) {
        m = den * a - m;
        den = (D - m * m) / den;
        a = (a0 + m) / den;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return PellSolution{h, k};
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

Int floor_div(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("floor_div: zero denominator");
    Int q = num / den;  // truncated
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

}  // namespace e2lab

namespace e2lab {

std::ostream& operator<<(std::ostream& os, const Ring& ring) { return os << to_string(ring); }
std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << to_string(x); }

}  // namespace e2lab

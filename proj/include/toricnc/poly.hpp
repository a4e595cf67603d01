#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "toricnc/arith.hpp"

namespace toricnc {

/// Dense univariate polynomial over the rationals; index l holds the
/// coefficient of x^l. Canonical form: no trailing zero coefficients, the
/// zero polynomial is the empty sequence. All operations are exact.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, int power);
    static Poly from_ints(std::initializer_list<long long> cs);

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    /// 0 beyond the degree.
    [[nodiscard]] Rat coeff(int l) const;

    /// p(x+1).
    [[nodiscard]] Poly shift_up() const;
    /// x^n * p(1/x); requires degree(p) <= n.
    [[nodiscard]] Poly mirror(int n) const;

    [[nodiscard]] bool integral() const;
    [[nodiscard]] bool nonnegative() const;
    /// Ascending powers, "^" for exponents, unit coefficients elided:
    /// "2x^3 + 11x^4 + x^5"; non-integer coefficients as "(num/den)x^l".
    [[nodiscard]] std::string text() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    bool operator==(const Poly&) const = default;

private:
    std::vector<Rat> c_;
    void normalize();
};

Poly scale(const Poly& p, const Rat& c);
Poly poly_pow(const Poly& p, int e);
/// (x-1)^e, the ubiquitous factor of the toric recursion.
Poly x_minus_one_pow(int e);

}  // namespace toricnc

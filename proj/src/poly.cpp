#include "toricnc/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace toricnc {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) {
    return Poly(std::vector<Rat>{c});
}

Poly Poly::monomial(const Rat& c, int power) {
    std::vector<Rat> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

Poly Poly::from_ints(std::initializer_list<long long> cs) {
    std::vector<Rat> v;
    v.reserve(cs.size());
    for (long long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

Rat Poly::coeff(int l) const {
    if (l < 0 || l >= static_cast<int>(c_.size())) return 0;
    return c_[l];
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + scale(b, -1);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly scale(const Poly& p, const Rat& c) {
    std::vector<Rat> v(p.coeffs());
    for (auto& e : v) e *= c;
    return Poly(std::move(v));
}

Poly Poly::shift_up() const {
    // p(x+1) = sum_l c_l (x+1)^l; (x+1)^l contributes C(l,m) to x^m.
    std::vector<Rat> v(c_.size());
    for (size_t l = 0; l < c_.size(); ++l)
        for (size_t m = 0; m <= l; ++m)
            v[m] += c_[l] * binomial(static_cast<long>(l), static_cast<long>(m));
    return Poly(std::move(v));
}

Poly Poly::mirror(int n) const {
    if (degree() > n) throw std::domain_error("degree exceeds mirror order");
    std::vector<Rat> v(n + 1);
    for (size_t l = 0; l < c_.size(); ++l) v[n - l] = c_[l];
    return Poly(std::move(v));
}

bool Poly::integral() const {
    for (const auto& c : c_)
        if (denominator(c) != 1) return false;
    return true;
}

bool Poly::nonnegative() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

namespace {

std::string term_text(const Rat& mag, int power) {
    std::ostringstream os;
    const bool unit = (mag == 1);
    if (power == 0) {
        os << mag;
        return os.str();
    }
    if (!unit) {
        if (denominator(mag) == 1)
            os << numerator(mag);
        else
            os << '(' << mag << ')';
    }
    os << 'x';
    if (power > 1) os << '^' << power;
    return os.str();
}

}  // namespace

std::string Poly::text() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t l = 0; l < c_.size(); ++l) {
        if (c_[l] == 0) continue;
        const bool neg = c_[l] < 0;
        Rat mag = neg ? Rat(-c_[l]) : c_[l];
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_text(mag, static_cast<int>(l));
    }
    return out;
}

Poly poly_pow(const Poly& p, int e) {
    Poly r = Poly::constant(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

Poly x_minus_one_pow(int e) {
    return poly_pow(Poly::from_ints({-1, 1}), e);
}

}  // namespace toricnc

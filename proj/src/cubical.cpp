#include "toricnc/cubical.hpp"

#include <stdexcept>
#include <utility>

namespace toricnc {

FVector make_fvector(std::vector<Int> f) {
    if (f.empty()) throw std::invalid_argument("f-vector must be nonempty");
    for (const auto& e : f)
        if (e < 0) throw std::invalid_argument("negative face count");
    FVector fv;
    fv.d = static_cast<int>(f.size()) - 1;
    fv.f = std::move(f);
    return fv;
}

bool validate_type(int d, int i, int j) {
    if (d < 0 || i < 0 || j < 0) return false;
    if (i == 0) return j == 0 || j == d;
    return i + j <= d;
}

CVector::CVector(int d) : d_(d) {
    if (d < 0) throw std::invalid_argument("dimension must be nonnegative");
}

void CVector::add(ShellingType t, const Int& count) {
    if (!validate_type(d_, t.i, t.j)) throw std::invalid_argument("invalid shelling component type");
    if (count < 0) throw std::invalid_argument("negative component count");
    Int& slot = counts_[t];
    slot += count;
    if (t.i == 0 && t.j == 0 && slot > 1)
        throw std::invalid_argument("at most one initial component of type (0,0)");
}

Int CVector::count(ShellingType t) const {
    auto it = counts_.find(t);
    return it == counts_.end() ? Int(0) : it->second;
}

std::vector<Int> short_h_from_f(const FVector& fv) {
    const int d = fv.d;
    std::vector<Int> h(d + 1);
    for (int i = 0; i <= d; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) {
            Int term = binomial(d - j, d - i) * pow2(j) * fv.f[j];
            acc += (i - j) % 2 == 0 ? term : -term;
        }
        h[i] = acc;
    }
    return h;
}

AdinH adin_h_from_f(const FVector& fv) {
    const int d = fv.d;
    AdinH out;
    out.d = d;
    out.short_h = short_h_from_f(fv);
    out.long_h.resize(d + 2);
    out.long_h[0] = pow2(d);
    for (int i = 0; i <= d; ++i) out.long_h[i + 1] = out.short_h[i] - out.long_h[i];

    // reduced Euler characteristic: -1 + f_0 - f_1 + ... +- f_d
    Int chi = -1;
    for (int j = 0; j <= d; ++j) chi += j % 2 == 0 ? fv.f[j] : -fv.f[j];
    Int expected = (d % 2 == 0 ? Int(1) : Int(-1)) * pow2(d) * chi;
    if (out.long_h[d + 1] != expected)
        throw std::invalid_argument("inconsistent f-vector: Euler check failed");

    out.normalized.reserve(d + 2);
    for (const auto& h : out.long_h) out.normalized.emplace_back(Rat(h) / Rat(pow2(d)));
    return out;
}

FVector f_from_h(const std::vector<Rat>& normalized_h) {
    if (normalized_h.size() < 2) throw std::invalid_argument("h-vector too short");
    if (normalized_h[0] != 1) throw std::invalid_argument("h_0 must be 1");
    const int d = static_cast<int>(normalized_h.size()) - 2;
    std::vector<Int> f(d + 1);
    for (int j = 0; j <= d; ++j) {
        Rat acc = 0;
        for (int i = 0; i <= j; ++i)
            acc += Rat(binomial(d - i, d - j)) * (normalized_h[i + 1] + normalized_h[i]);
        acc *= Rat(pow2(d - j));
        if (denominator(acc) != 1)
            throw std::invalid_argument("h-vector not realizable as integer f-vector");
        f[j] = numerator(acc);
    }
    return make_fvector(std::move(f));
}

Poly delta_h(ShellingType t, int d) {
    if (!validate_type(d, t.i, t.j)) throw std::invalid_argument("invalid shelling component type");
    if (t.i == 0) return t.j == 0 ? Poly::constant(1) : Poly::monomial(1, d + 1);
    Poly p = Poly::monomial(Rat(1) / Rat(pow2(t.i)), t.j + 1);
    return p * poly_pow(Poly::from_ints({1, 1}), t.i - 1);
}

std::vector<Rat> h_from_cvector(const CVector& c) {
    const int d = c.d();
    if (c.count({0, 0}) != 1)
        throw std::invalid_argument("shelling must have exactly one initial component");

    // h_k = sum_{j=0}^{k-1} sum_{i=k-j}^{d-j} (1/2)^i C(i-1,k-1-j) c_{i,j}
    std::vector<Rat> h(d + 2);
    h[0] = 1;
    h[d + 1] = Rat(c.count({0, d}));
    for (int k = 1; k <= d; ++k) {
        Rat acc = 0;
        for (int j = 0; j <= k - 1; ++j)
            for (int i = k - j; i <= d - j; ++i)
                acc += Rat(binomial(i - 1, k - 1 - j)) / Rat(pow2(i)) * Rat(c.count({i, j}));
        h[k] = acc;
    }

    Poly direct;
    for (const auto& [t, n] : c.counts()) direct += scale(delta_h(t, d), Rat(n));
    if (direct != Poly(std::vector<Rat>(h)))
        throw std::logic_error("shelling contribution routes disagree");
    return h;
}

CVector cube_boundary_shelling_cvector(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    CVector c(d);
    c.add({0, 0}, 1);
    for (int k = 1; k <= d - 1; ++k) c.add({k, 0}, 1);
    c.add({d, 0}, 2);
    for (int m = 1; m <= d; ++m) c.add({d - m, m}, 1);
    return c;
}

}  // namespace toricnc

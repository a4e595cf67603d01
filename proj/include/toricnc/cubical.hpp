#pragma once

#include <map>
#include <vector>

#include "toricnc/poly.hpp"

namespace toricnc {

/// Face counts f_0..f_d of a pure d-dimensional complex; the empty face
/// (count 1 at dimension -1) is implicit, never stored.
struct FVector {
    int d = 0;
    std::vector<Int> f;

    bool operator==(const FVector&) const = default;
};

FVector make_fvector(std::vector<Int> f);

/// Short, long and normalized (long / 2^d) cubical h-vectors.
struct AdinH {
    int d = 0;
    std::vector<Int> short_h;    // h_0^(sc) .. h_d^(sc)
    std::vector<Int> long_h;     // h_0^(c) .. h_{d+1}^(c)
    std::vector<Rat> normalized; // h_0 .. h_{d+1}
};

struct ShellingType {
    int i = 0;
    int j = 0;

    auto operator<=>(const ShellingType&) const = default;
};

/// Admissible types: (0,0) once for the initial component, (0,d) for a
/// closing component, and 1 <= i with i+j <= d otherwise.
bool validate_type(int d, int i, int j);

/// Counts of shelling components by type. Insertion validates the type; the
/// (0,0) slot holds at most one component.
class CVector {
public:
    explicit CVector(int d);

    void add(ShellingType t, const Int& count);
    [[nodiscard]] Int count(ShellingType t) const;
    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const std::map<ShellingType, Int>& counts() const { return counts_; }

private:
    int d_ = 0;
    std::map<ShellingType, Int> counts_;
};

/// h_i^(sc) = sum_{j<=i} C(d-j,d-i) (-1)^(i-j) 2^j f_j.
std::vector<Int> short_h_from_f(const FVector& fv);

/// Long h by h_0^(c) = 2^d, h_{i+1}^(c) = h_i^(sc) - h_i^(c); the terminal
/// entry must equal (-2)^d times the reduced Euler characteristic.
AdinH adin_h_from_f(const FVector& fv);

/// Inverse of the normalization: f_j = 2^(d-j) sum_{i<=j} C(d-i,d-j)(h_{i+1}+h_i).
FVector f_from_h(const std::vector<Rat>& normalized_h);

/// Contribution of one shelling component to the normalized h-polynomial:
/// (1/2)^i x^(j+1) (1+x)^(i-1) for i >= 1, 1 for (0,0), x^(d+1) for (0,d).
Poly delta_h(ShellingType t, int d);

/// Normalized h_0..h_{d+1} from component counts, computed both by the closed
/// double sum and by summing delta_h; the routes must agree.
std::vector<Rat> h_from_cvector(const CVector& c);

/// Component types of the coordinate-order shelling of the boundary of the
/// (d+1)-cube (a d-dimensional complex): low facets by axis, then high facets.
CVector cube_boundary_shelling_cvector(int d);

}  // namespace toricnc

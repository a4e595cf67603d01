#pragma once

#include <string>
#include <vector>

#include "toricnc/cubical.hpp"
#include "toricnc/ncpart.hpp"
#include "toricnc/poly.hpp"

namespace toricnc {

constexpr int kCubePosetMaxDim = 8;
constexpr int kNcRouteGuard = 12;

/// One face of a polyhedral complex. `subfaces` lists every proper subface
/// (the full down-set, not just covers), as indices into FaceComplex::faces.
struct Face {
    int dim = -1;
    std::vector<int> subfaces;
};

/// Dimension-graded face poset with a unique empty face at index 0. Every
/// nonempty face must be combinatorially a cube; the toric recursion verifies
/// this structurally and aborts otherwise.
struct FaceComplex {
    int d = -1;  // maximum face dimension
    std::vector<Face> faces;
};

/// Full face poset of the solid d-cube, faces encoded as words over {0,1,*}
/// (subface = specializing *'s). 0 <= d <= 8.
FaceComplex cube_complex(int d);
/// Same with the top face removed; d = 0 leaves only the empty face.
FaceComplex cube_boundary_complex(int d);

/// f(P,x) = sum over faces F of g(boundary of F, x) (x-1)^(d - dim F), the
/// empty face contributing (x-1)^(d+1). Boundaries of faces are evaluated by
/// recursion on the subposet after cube verification.
Poly toric_f(const FaceComplex& p);
/// Truncation of toric_f: g_l = k_l - k_{l-1} for l <= floor((d+1)/2), where
/// k_l is the coefficient of x^l in f.
Poly toric_g(const FaceComplex& p);

enum class GMethod { recursion, gessel, nc };
GMethod parse_gmethod(const std::string& name);

/// g of the boundary of the d-cube by three routes: the poset recursion
/// (d <= 8), the binomial closed form, or the nonsingleton-block census of
/// NC(d) (1 <= d <= guard).
Poly g_cube(int d, GMethod method, int guard_nc = kNcRouteGuard);

/// Q_{d,k}: the toric contribution of one unit of normalized h_k, by the
/// closed formula (the two published variants are computed and compared for
/// 1 <= k <= d). 0 <= k <= d+1.
Poly q_poly(int d, int k);

/// Q_{d,k} as a weighted census of NC(d): twice the weight-k sum for
/// 1 <= k <= d, the plain sum for k = 0 and k = d+1.
Poly q_poly_nc(int d, int k, int guard_nc = kNcRouteGuard);

struct QTable {
    int d = 0;
    std::vector<Poly> q;  // k = 0 .. d+1
};

/// Row Q_{d,0..d+1} with positivity and parity invariants enforced:
/// nonnegative integer coefficients everywhere, even for 1 <= k <= d.
QTable q_table(int d);

/// C_{d,i,j} = (1/2)^i sum_{k=j+1}^{i+j} C(i-1,k-1-j) Q_{d,k}; i >= 1, i+j <= d.
Poly c_poly(int d, int i, int j);

/// Total weight of NC(d) against a nonempty, non-starred family; equals
/// c_poly(d, i, j) for the family's interval count i and uncovered count j.
Poly c_poly_nc(const IntervalFamily& s, int guard_nc = kNcRouteGuard);

/// f(P,x) = (x-1)^(d+1) + sum_j f_j (x-1)^(d-j) g_cube(j) for a cubical
/// complex given by face counts alone.
Poly toric_f_cubical(const FVector& fv);

/// f(P,x) = sum_k h_k Q_{d,k} from the normalized h-vector (length d+2, h_0 = 1).
Poly toric_f_from_adin(const std::vector<Rat>& normalized_h);

/// Q_{d,0} + c_{0,d} Q_{d,d+1} + sum_{i>=1} c_{i,j} C_{d,i,j}; cross-checked
/// against toric_f_from_adin(h_from_cvector(c)).
Poly toric_f_from_shelling(const CVector& c);

}  // namespace toricnc

#include "toricnc/toric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace toricnc {

namespace {

void check(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

long ipow3(int e) {
    long r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

struct Bitset {
    std::vector<std::uint64_t> w;

    explicit Bitset(size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(size_t b) { w[b >> 6] |= std::uint64_t(1) << (b & 63); }
    [[nodiscard]] bool test(size_t b) const { return (w[b >> 6] >> (b & 63)) & 1; }
    [[nodiscard]] bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    [[nodiscard]] int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool operator==(const Bitset&) const = default;
};

struct PosetInfo {
    std::vector<Bitset> vmask;  // vertices below each face
    int nvertices = 0;
};

// Structural validation: grading, transitive subface lists, and a cube
// certificate for every nonempty face (vertex count, antipodal facet pairing,
// and a bijection of the face interval onto {0,1,*}-words).
PosetInfo validate_complex(const FaceComplex& p) {
    const int n = static_cast<int>(p.faces.size());
    check(n >= 1, "complex has no faces");
    check(p.faces[0].dim == -1, "face 0 must be the empty face");
    check(p.faces[0].subfaces.empty(), "empty face has no subfaces");

    int maxdim = -1;
    for (int fi = 1; fi < n; ++fi) {
        const Face& f = p.faces[fi];
        check(f.dim >= 0, "only face 0 may have dimension -1");
        maxdim = std::max(maxdim, f.dim);
        bool has_empty = false;
        for (int s : f.subfaces) {
            check(s >= 0 && s < n && s != fi, "subface index out of range");
            check(p.faces[s].dim < f.dim, "face poset is not graded by dimension");
            if (s == 0) has_empty = true;
        }
        check(has_empty, "nonempty face must contain the empty face");
    }
    check(maxdim == p.d, "declared dimension does not match the faces");

    std::vector<Bitset> down(n, Bitset(n));
    for (int fi = 0; fi < n; ++fi) {
        down[fi].set(fi);
        for (int s : p.faces[fi].subfaces) down[fi].set(s);
    }
    for (int fi = 1; fi < n; ++fi)
        for (int s : p.faces[fi].subfaces)
            check(down[s].subset_of(down[fi]), "subface lists are not transitively closed");

    PosetInfo info;
    std::vector<int> vertex_ordinal(n, -1);
    for (int fi = 1; fi < n; ++fi)
        if (p.faces[fi].dim == 0) vertex_ordinal[fi] = info.nvertices++;
    info.vmask.assign(n, Bitset(info.nvertices));
    for (int fi = 1; fi < n; ++fi) {
        if (vertex_ordinal[fi] >= 0) info.vmask[fi].set(vertex_ordinal[fi]);
        for (int s : p.faces[fi].subfaces)
            if (vertex_ordinal[s] >= 0) info.vmask[fi].set(vertex_ordinal[s]);
    }

    for (int fi = 1; fi < n; ++fi) {
        const Face& f = p.faces[fi];
        const int j = f.dim;
        check(static_cast<long>(f.subfaces.size()) == ipow3(j),
              "face is not a combinatorial cube");
        check(info.vmask[fi].count() == (1 << j), "face is not a combinatorial cube");
        if (j == 0) continue;

        std::vector<int> facets;
        for (int s : f.subfaces)
            if (p.faces[s].dim == j - 1) facets.push_back(s);
        check(static_cast<int>(facets.size()) == 2 * j, "face is not a combinatorial cube");

        // antipodal pairing: the complementary vertex set of a facet must be
        // the vertex set of exactly one other facet
        std::vector<std::pair<int, int>> axes;
        std::vector<char> paired(facets.size(), 0);
        for (size_t a = 0; a < facets.size(); ++a) {
            if (paired[a]) continue;
            Bitset comp(info.nvertices);
            for (size_t t = 0; t < comp.w.size(); ++t)
                comp.w[t] = info.vmask[fi].w[t] & ~info.vmask[facets[a]].w[t];
            int partner = -1;
            for (size_t b = a + 1; b < facets.size(); ++b)
                if (!paired[b] && info.vmask[facets[b]] == comp) {
                    check(partner == -1, "face is not a combinatorial cube");
                    partner = static_cast<int>(b);
                }
            check(partner != -1, "face is not a combinatorial cube");
            paired[a] = paired[partner] = 1;
            axes.emplace_back(facets[a], facets[partner]);
        }

        // every vertex lies on exactly one side per axis
        for (int v = 0; v < info.nvertices; ++v) {
            if (!info.vmask[fi].test(v)) continue;
            for (const auto& [g0, g1] : axes)
                check(info.vmask[g0].test(v) != info.vmask[g1].test(v),
                      "face is not a combinatorial cube");
        }

        // the interval below the face must realize each {0,1,*}-word once,
        // with star count equal to dimension
        std::vector<std::uint32_t> patterns;
        patterns.reserve(f.subfaces.size());
        auto pattern_of = [&](int hi) {
            const Bitset& vh = info.vmask[hi];
            std::uint32_t code = 0;
            int stars = 0;
            for (size_t c = 0; c < axes.size(); ++c) {
                std::uint32_t digit;
                if (vh.subset_of(info.vmask[axes[c].first]))
                    digit = 0;
                else if (vh.subset_of(info.vmask[axes[c].second]))
                    digit = 1;
                else {
                    digit = 2;
                    ++stars;
                }
                code |= digit << (2 * c);
            }
            check(stars == p.faces[hi].dim, "face is not a combinatorial cube");
            check(vh.count() == (1 << stars), "face is not a combinatorial cube");
            return code;
        };
        for (int s : f.subfaces)
            if (s != 0) patterns.push_back(pattern_of(s));
        patterns.push_back(pattern_of(fi));
        std::sort(patterns.begin(), patterns.end());
        for (size_t t = 0; t + 1 < patterns.size(); ++t)
            check(patterns[t] != patterns[t + 1], "face is not a combinatorial cube");
        check(static_cast<long>(patterns.size()) == ipow3(j), "face is not a combinatorial cube");
    }
    return info;
}

FaceComplex boundary_subcomplex(const FaceComplex& p, int fidx) {
    std::vector<int> keep = p.faces[fidx].subfaces;
    std::sort(keep.begin(), keep.end());
    std::vector<int> newidx(p.faces.size(), -1);
    for (size_t t = 0; t < keep.size(); ++t) newidx[keep[t]] = static_cast<int>(t);
    FaceComplex out;
    out.d = -1;
    out.faces.reserve(keep.size());
    for (int old : keep) {
        Face f;
        f.dim = p.faces[old].dim;
        out.d = std::max(out.d, f.dim);
        f.subfaces.reserve(p.faces[old].subfaces.size());
        for (int s : p.faces[old].subfaces) f.subfaces.push_back(newidx[s]);
        std::sort(f.subfaces.begin(), f.subfaces.end());
        out.faces.push_back(std::move(f));
    }
    return out;
}

Poly toric_f_validated(const FaceComplex& p);

Poly toric_g_of(const FaceComplex& p) {
    const Poly f = toric_f_validated(p);
    const int m = (p.d + 1) / 2;
    std::vector<Rat> g(m + 1);
    for (int l = 0; l <= m; ++l) g[l] = f.coeff(l) - (l > 0 ? f.coeff(l - 1) : Rat(0));
    return Poly(std::move(g));
}

Poly toric_f_validated(const FaceComplex& p) {
    validate_complex(p);
    const int d = p.d;
    std::map<int, Poly> boundary_g;  // by face dimension; cubes of equal dim share it
    std::map<int, long long> count_by_dim;
    for (const auto& f : p.faces) ++count_by_dim[f.dim];

    Poly total = x_minus_one_pow(d + 1);  // the empty face
    for (const auto& [dim, cnt] : count_by_dim) {
        if (dim < 0) continue;
        Poly g = Poly::constant(1);
        if (dim >= 1) {
            auto it = boundary_g.find(dim);
            if (it == boundary_g.end()) {
                int first = -1;
                for (size_t fi = 0; fi < p.faces.size(); ++fi)
                    if (p.faces[fi].dim == dim) {
                        first = static_cast<int>(fi);
                        break;
                    }
                it = boundary_g.emplace(dim, toric_g_of(boundary_subcomplex(p, first))).first;
            }
            g = it->second;
        }
        total += scale(g * x_minus_one_pow(d - dim), Rat(cnt));
    }
    return total;
}

const Poly& g_cube_memo(int j) {
    static std::mutex mu;
    static std::map<int, Poly> memo;
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(j);
    if (it == memo.end()) it = memo.emplace(j, g_cube(j, GMethod::gessel)).first;
    return it->second;
}

FaceComplex cube_words_complex(int d, bool with_top) {
    check(d >= 0 && d <= kCubePosetMaxDim, "cube poset dimension out of range");
    std::vector<std::string> words;
    const long total = ipow3(d);
    for (long code = 0; code < total; ++code) {
        std::string w(d, '0');
        long c = code;
        for (int t = 0; t < d; ++t) {
            const int digit = static_cast<int>(c % 3);
            w[t] = digit == 0 ? '0' : digit == 1 ? '1' : '*';
            c /= 3;
        }
        if (!with_top && std::count(w.begin(), w.end(), '*') == d) continue;
        words.push_back(std::move(w));
    }
    auto dim_of = [](const std::string& w) {
        return static_cast<int>(std::count(w.begin(), w.end(), '*'));
    };
    std::sort(words.begin(), words.end(), [&](const std::string& a, const std::string& b) {
        const int da = dim_of(a), db = dim_of(b);
        return da != db ? da < db : a < b;
    });

    std::unordered_map<std::string, int> index;
    for (size_t t = 0; t < words.size(); ++t) index[words[t]] = static_cast<int>(t) + 1;

    FaceComplex out;
    out.d = -1;
    out.faces.resize(words.size() + 1);
    out.faces[0].dim = -1;
    for (size_t t = 0; t < words.size(); ++t) {
        const std::string& w = words[t];
        Face& f = out.faces[t + 1];
        f.dim = dim_of(w);
        out.d = std::max(out.d, f.dim);
        f.subfaces.push_back(0);
        std::vector<int> stars;
        for (int c = 0; c < d; ++c)
            if (w[c] == '*') stars.push_back(c);
        // specialize any nonempty subset of the stars
        const long subs = ipow3(static_cast<int>(stars.size()));
        std::string v = w;
        for (long code = 1; code < subs; ++code) {
            long c = code;
            for (int s : stars) {
                const int digit = static_cast<int>(c % 3);
                v[s] = digit == 0 ? '*' : digit == 1 ? '0' : '1';
                c /= 3;
            }
            f.subfaces.push_back(index.at(v));
        }
        for (int s : stars) v[s] = '*';
        std::sort(f.subfaces.begin(), f.subfaces.end());
    }
    return out;
}

}  // namespace

FaceComplex cube_complex(int d) {
    return cube_words_complex(d, true);
}

FaceComplex cube_boundary_complex(int d) {
    return cube_words_complex(d, false);
}

Poly toric_f(const FaceComplex& p) {
    return toric_f_validated(p);
}

Poly toric_g(const FaceComplex& p) {
    return toric_g_of(p);
}

GMethod parse_gmethod(const std::string& name) {
    if (name == "recursion") return GMethod::recursion;
    if (name == "gessel") return GMethod::gessel;
    if (name == "nc") return GMethod::nc;
    throw std::invalid_argument("unknown g method");
}

Poly g_cube(int d, GMethod method, int guard_nc) {
    switch (method) {
        case GMethod::recursion:
            check(d >= 0, "dimension must be nonnegative");
            return toric_g_of(cube_boundary_complex(d));
        case GMethod::gessel: {
            check(d >= 0, "dimension must be nonnegative");
            Poly a, b;
            for (int k = 0; k <= d / 2; ++k) {
                const Poly base = x_minus_one_pow(k);
                a += scale(base, Rat(binomial(d, k) * binomial(2 * d - 2 * k, d), d - k + 1));
                b += scale(base, Rat(catalan(d - k) * binomial(d - k, k)));
            }
            if (a != b) throw std::logic_error("binomial g routes disagree");
            return a;
        }
        case GMethod::nc: {
            check(d >= 1, "d must be positive");
            if (d > guard_nc) throw std::invalid_argument("enumeration size guard");
            std::vector<long long> tally(d / 2 + 1, 0);
            for (const auto& p : enumerate_nc(d, guard_nc)) {
                const auto st = stats(p);
                ++tally[st.block_count];
            }
            std::vector<Rat> coeffs(tally.begin(), tally.end());
            return Poly(std::move(coeffs));
        }
    }
    throw std::logic_error("unreachable");
}

Poly q_poly(int d, int k) {
    check(d >= 0, "dimension must be nonnegative");
    check(k >= 0 && k <= d + 1, "k out of range");
    if (k == d + 1) return g_cube_memo(d);
    if (k == 0) {
        Poly f = x_minus_one_pow(d + 1);
        for (int j = 0; j <= d; ++j)
            f += scale(x_minus_one_pow(d - j) * g_cube_memo(j), Rat(pow2(d - j) * binomial(d, j)));
        return f;
    }
    Poly a, b;
    for (int j = k - 1; j <= d; ++j) {
        const Poly base = x_minus_one_pow(d - j) * g_cube_memo(j);
        a += scale(base, Rat(pow2(d - j) * (binomial(d - k, d - j) + binomial(d + 1 - k, d - j))));
        b += scale(base,
                   Rat(pow2(d - j) * (binomial(d - k, d - j - 1) + 2 * binomial(d - k, d - j))));
    }
    if (a != b) throw std::logic_error("closed-form variants disagree");
    return a;
}

QTable q_table(int d) {
    QTable t;
    t.d = d;
    t.q.reserve(d + 2);
    for (int k = 0; k <= d + 1; ++k) {
        Poly q = q_poly(d, k);
        if (!q.integral() || !q.nonnegative())
            throw std::logic_error("toric contribution must have nonnegative integer coefficients");
        if (k >= 1 && k <= d)
            for (const auto& c : q.coeffs())
                if (numerator(c) % 2 != 0)
                    throw std::logic_error("toric contribution must have even coefficients");
        t.q.push_back(std::move(q));
    }
    return t;
}

Poly q_poly_nc(int d, int k, int guard_nc) {
    check(d >= 1, "d must be positive");
    if (d > guard_nc) throw std::invalid_argument("enumeration size guard");
    check(k >= 0 && k <= d + 1, "k out of range");
    std::vector<long long> tally(d + 2, 0);
    for (const auto& p : enumerate_nc(d, guard_nc)) ++tally[weight_k_exponent(p, k)];
    std::vector<Rat> coeffs(tally.begin(), tally.end());
    Poly sum{std::move(coeffs)};
    return (k >= 1 && k <= d) ? scale(sum, 2) : sum;
}

Poly c_poly(int d, int i, int j) {
    if (i < 1 || j < 0 || i + j > d) throw std::invalid_argument("invalid shelling component type");
    Poly acc;
    for (int k = j + 1; k <= i + j; ++k) acc += scale(q_poly(d, k), Rat(binomial(i - 1, k - 1 - j)));
    acc = scale(acc, Rat(1, pow2(i)));
    if (!acc.integral() || !acc.nonnegative())
        throw std::logic_error("toric contribution must have nonnegative integer coefficients");
    return acc;
}

Poly c_poly_nc(const IntervalFamily& s, int guard_nc) {
    const int d = s.d();
    if (s.interval_count() == 0) throw std::invalid_argument("family must be nonempty");
    if (s.star()) throw std::invalid_argument("starred family is not a shelling component");
    if (d > guard_nc) throw std::invalid_argument("enumeration size guard");
    std::vector<long long> tally(d + 2, 0);
    for (const auto& p : enumerate_nc(d, guard_nc)) ++tally[weight_exponent(p, s)];
    std::vector<Rat> coeffs(tally.begin(), tally.end());
    return Poly(std::move(coeffs));
}

Poly toric_f_cubical(const FVector& fv) {
    const int d = fv.d;
    Poly f = x_minus_one_pow(d + 1);
    for (int j = 0; j <= d; ++j)
        f += scale(x_minus_one_pow(d - j) * g_cube_memo(j), Rat(fv.f[j]));
    return f;
}

Poly toric_f_from_adin(const std::vector<Rat>& normalized_h) {
    if (normalized_h.size() < 2) throw std::invalid_argument("h-vector too short");
    if (normalized_h[0] != 1) throw std::invalid_argument("h_0 must be 1");
    const int d = static_cast<int>(normalized_h.size()) - 2;
    Poly f;
    for (int k = 0; k <= d + 1; ++k) f += scale(q_poly(d, k), normalized_h[k]);
    return f;
}

Poly toric_f_from_shelling(const CVector& c) {
    const int d = c.d();
    const auto h = h_from_cvector(c);  // validates the initial component
    Poly direct = q_poly(d, 0) + scale(q_poly(d, d + 1), Rat(c.count({0, d})));
    for (const auto& [t, n] : c.counts()) {
        if (t.i == 0) continue;
        direct += scale(c_poly(d, t.i, t.j), Rat(n));
    }
    if (direct != toric_f_from_adin(h))
        throw std::logic_error("shelling route disagrees with the h route");
    return direct;
}

}  // namespace toricnc

#include "toricnc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toricnc/cubical.hpp"
#include "toricnc/formats.hpp"
#include "toricnc/ncpart.hpp"

namespace toricnc {

namespace {

struct Checker {
    VerificationReport& report;

    void pass() { ++report.checks; }
    void fail(std::string check, std::string inputs, std::string lhs, std::string rhs) {
        ++report.checks;
        report.failures.push_back(
            {std::move(check), std::move(inputs), std::move(lhs), std::move(rhs)});
    }
    void expect_poly(const char* check, const std::string& inputs, const Poly& lhs,
                     const Poly& rhs) {
        if (lhs == rhs)
            pass();
        else
            fail(check, inputs, lhs.text(), rhs.text());
    }
    void expect_ll(const char* check, const std::string& inputs, long long lhs, long long rhs) {
        if (lhs == rhs)
            pass();
        else
            fail(check, inputs, std::to_string(lhs), std::to_string(rhs));
    }
};

std::string int_list(const std::vector<int>& v) {
    std::string out;
    for (size_t t = 0; t < v.size(); ++t) {
        if (t > 0) out += ',';
        out += std::to_string(v[t]);
    }
    return out;
}

std::string d_input(int d) {
    return "d=" + std::to_string(d);
}

std::string dk_input(int d, int k) {
    return "d=" + std::to_string(d) + " k=" + std::to_string(k);
}

/// Partitions of NC(d) together with their images and statistics, so sweeps
/// do not recompute alpha per family.
struct PiData {
    NcPartition pi;
    NcPartition a;
    PartitionStats spi;
    PartitionStats sa;
};

std::vector<PiData> nc_with_alpha(int d, int guard) {
    std::vector<PiData> out;
    for (auto& pi : enumerate_nc(d, guard)) {
        PiData e;
        e.a = alpha(pi);
        e.spi = stats(pi);
        e.sa = stats(e.a);
        e.pi = std::move(pi);
        out.push_back(std::move(e));
    }
    return out;
}

IntervalFamily wt_family(int d, int k) {
    if (k == 0) return IntervalFamily::full_star(d);
    if (k == d + 1) return IntervalFamily::empty(d);
    return IntervalFamily(d, {{k, d}});
}

Poly total_weight(const std::vector<PiData>& all, const IntervalFamily& s) {
    std::vector<Rat> tally(static_cast<size_t>(s.d()) + 2);
    for (const auto& e : all) tally[weight_exponent(e.pi, s)] += 1;
    return Poly(std::move(tally));
}

void suite_tables(Checker& c, const VerifyOptions& o) {
    const std::vector<std::pair<int, Poly>> table1 = {
        {-1, Poly::from_ints({1})}, {0, Poly::from_ints({1})},
        {1, Poly::from_ints({1})},  {2, Poly::from_ints({1, 1})},
        {3, Poly::from_ints({1, 4})}, {4, Poly::from_ints({1, 11, 2})},
    };
    for (const auto& [d, expected] : table1) {
        if (d > o.max_d) continue;
        const Poly got =
            d < 0 ? toric_g(cube_boundary_complex(0)) : g_cube(d, GMethod::gessel);
        c.expect_poly("table1", d_input(d), got, expected);
    }

    for (int d = 0; d <= std::min(o.max_d, kCubePosetMaxDim); ++d)
        c.expect_poly("g-recursion-vs-gessel", d_input(d), g_cube(d, GMethod::recursion),
                      g_cube(d, GMethod::gessel));
    for (int d = 1; d <= std::min(o.max_d, o.guard_nc); ++d)
        c.expect_poly("g-nc-vs-gessel", d_input(d), g_cube(d, GMethod::nc, o.guard_nc),
                      g_cube(d, GMethod::gessel));

    const std::vector<std::vector<Poly>> table2 = {
        {Poly::from_ints({0, 1}), Poly::from_ints({1})},
        {Poly::from_ints({0, 0, 1}), Poly::from_ints({0, 2}), Poly::from_ints({1})},
        {Poly::from_ints({0, 0, 1, 1}), Poly::from_ints({0, 0, 4}), Poly::from_ints({0, 4}),
         Poly::from_ints({1, 1})},
        {Poly::from_ints({0, 0, 0, 4, 1}), Poly::from_ints({0, 0, 2, 8}),
         Poly::from_ints({0, 0, 10}), Poly::from_ints({0, 8, 2}), Poly::from_ints({1, 4})},
        {Poly::from_ints({0, 0, 0, 2, 11, 1}), Poly::from_ints({0, 0, 0, 12, 16}),
         Poly::from_ints({0, 0, 4, 24}), Poly::from_ints({0, 0, 24, 4}),
         Poly::from_ints({0, 16, 12}), Poly::from_ints({1, 11, 2})},
    };
    for (int d = 0; d <= std::min(o.max_d, 4); ++d)
        for (int k = 0; k <= d + 1; ++k)
            c.expect_poly("table2", dk_input(d, k), q_poly(d, k), table2[d][k]);
}

void suite_involution(Checker& c, const VerifyOptions& o) {
    for (int d = 1; d <= std::min(o.max_d, o.guard_nc); ++d) {
        const bool with_oracle = d <= 8;
        for (const auto& pi : enumerate_nc(d, o.guard_nc)) {
            const NcPartition a = alpha(pi);
            const NcPartition round = alpha(a);
            if (round == pi)
                c.pass();
            else
                c.fail("alpha-involution", partition_text(pi), partition_text(round),
                       partition_text(pi));

            const auto spi = stats(pi);
            const auto sa = stats(a);
            c.expect_ll("alpha-size-sum", partition_text(pi), spi.size() + sa.size(), d + 1);

            std::vector<int> expected;
            for (int k : spi.antisingletons) expected.push_back(k == d ? d : d - k);
            std::sort(expected.begin(), expected.end());
            if (expected == sa.singletons)
                c.pass();
            else
                c.fail("antisingleton-singleton", partition_text(pi), int_list(expected),
                       int_list(sa.singletons));

            if (with_oracle) {
                const NcPartition oracle = alpha_bruteforce(pi);
                if (oracle == a)
                    c.pass();
                else
                    c.fail("alpha-vs-oracle", partition_text(pi), partition_text(a),
                           partition_text(oracle));
            }
        }
    }
}

void suite_beta(Checker& c, const VerifyOptions& o) {
    const auto wrapped = [](const IntervalFamily& s) {
        for (const auto& iv : s.intervals())
            if (iv.wrapped()) return true;
        return false;
    };
    for (int d = 1; d <= std::min(o.max_d, o.guard_family); ++d) {
        for (const auto& s : enumerate_families(d)) {
            const IntervalFamily b = beta(s);
            const IntervalFamily round = beta(b);
            if (round == s)
                c.pass();
            else
                c.fail("beta-involution", family_text(s), family_text(round), family_text(s));

            if (s.interval_count() == 0 || s.star()) continue;
            c.expect_ll("beta-interval-count", family_text(s), b.interval_count(),
                        s.interval_count());
            c.expect_ll("beta-coverage", family_text(s), b.covered_count(),
                        s.interval_count() + s.uncovered_count());

            const bool ws = wrapped(s);
            const bool wb = wrapped(b);
            const int li = s.intervals().back().hi;
            const bool ok = li == d ? (!ws && !wb) : (ws != wb);
            if (ok)
                c.pass();
            else
                c.fail("wrapped-trichotomy", family_text(s), ws ? "wrapped" : "unwrapped",
                       wb ? "wrapped" : "unwrapped");
        }
    }
}

void suite_weights(Checker& c, const VerifyOptions& o) {
    for (int d = 1; d <= std::min(o.max_d, o.guard_nc); ++d) {
        const auto all = enumerate_nc(d, o.guard_nc);
        for (int k = 0; k <= d + 1; ++k) {
            const IntervalFamily s = wt_family(d, k);
            for (const auto& pi : all) {
                const int lhs = weight_k_exponent(pi, k);
                const int rhs = weight_exponent(pi, s);
                if (lhs == rhs)
                    c.pass();
                else
                    c.fail("wtk-vs-family", partition_text(pi) + " " + dk_input(d, k),
                           std::to_string(lhs), std::to_string(rhs));
            }
        }
    }

    // direct evaluation against the singleton-count closed form
    for (int d = 1; d <= std::min({o.max_d, o.guard_family, o.guard_nc}); ++d) {
        const auto all = nc_with_alpha(d, o.guard_nc);
        for (const auto& s : enumerate_families(d)) {
            const IntervalFamily comp = complement_family(beta(s));
            for (const auto& e : all) {
                const int direct = weight_exponent(e.pi, s);
                int closed = e.spi.block_count;
                for (int v : e.spi.singletons) closed += s.covers(v) ? 1 : 0;
                for (int v : e.sa.singletons) closed += comp.covers(v) ? 1 : 0;
                if (direct == closed)
                    c.pass();
                else
                    c.fail("wt-closed-form", partition_text(e.pi) + " " + family_text(s),
                           std::to_string(direct), std::to_string(closed));
            }
        }
    }
}

void suite_qmodel(Checker& c, const VerifyOptions& o) {
    for (int d = 1; d <= std::min(o.max_d, o.guard_nc); ++d)
        for (int k = 0; k <= d + 1; ++k)
            c.expect_poly("q-model", dk_input(d, k), q_poly_nc(d, k, o.guard_nc), q_poly(d, k));
}

void suite_cmodel(Checker& c, const VerifyOptions& o) {
    for (int d = 1; d <= std::min({o.max_d, o.guard_family, o.guard_nc}); ++d) {
        const auto all = nc_with_alpha(d, o.guard_nc);
        std::map<std::pair<int, int>, std::pair<Poly, std::string>> first_seen;
        for (const auto& s : enumerate_families(d)) {
            if (s.interval_count() == 0) {
                c.expect_poly("c-model-empty", family_text(s), total_weight(all, s),
                              q_poly(d, d + 1));
                continue;
            }
            if (s.star()) {
                c.expect_poly("c-model-star", family_text(s), total_weight(all, s),
                              q_poly(d, 0));
                continue;
            }
            const int i = s.interval_count();
            const int j = s.uncovered_count();
            const Poly total = c_poly_nc(s, o.guard_nc);
            c.expect_poly("c-model", family_text(s), total, c_poly(d, i, j));
            auto [it, fresh] = first_seen.try_emplace({i, j}, total, family_text(s));
            if (!fresh)
                c.expect_poly("c-position-independence",
                              family_text(s) + " vs " + it->second.second, total,
                              it->second.first);
        }
    }
}

void suite_duality(Checker& c, const VerifyOptions& o) {
    for (int d = 0; d <= o.max_d; ++d)
        for (int k = 0; k <= d + 1; ++k) {
            c.expect_poly("q-duality", dk_input(d, k), q_poly(d, k).mirror(d + 1),
                          q_poly(d, d + 1 - k));
            const Poly sum = q_poly(d, k) + q_poly(d, d + 1 - k);
            c.expect_poly("q-sum-palindrome", dk_input(d, k), sum.mirror(d + 1), sum);
        }

    for (int d = 1; d <= o.max_d; ++d)
        for (int i = 1; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                c.expect_poly("c-duality",
                              d_input(d) + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                              c_poly(d, i, j).mirror(d + 1), c_poly(d, i, d - i - j));

    for (int d = 1; d <= std::min({o.max_d, o.guard_family, o.guard_nc}); ++d) {
        const auto all = nc_with_alpha(d, o.guard_nc);
        for (const auto& s : enumerate_families(d)) {
            const IntervalFamily b = beta(s);
            for (const auto& e : all) {
                const int sum = weight_exponent(e.pi, s) + weight_exponent(e.a, b);
                if (sum == d + 1)
                    c.pass();
                else
                    c.fail("weight-duality", partition_text(e.pi) + " " + family_text(s),
                           std::to_string(sum), std::to_string(d + 1));
            }
        }
    }

    for (int d = 1; d <= std::min(o.max_d, o.guard_nc); ++d) {
        const auto all = nc_with_alpha(d, o.guard_nc);
        for (int k = 0; k <= d + 1; ++k)
            for (const auto& e : all) {
                const int sum = weight_k_exponent(e.pi, k) + weight_k_exponent(e.a, d + 1 - k);
                if (sum == d + 1)
                    c.pass();
                else
                    c.fail("wtk-duality", partition_text(e.pi) + " " + dk_input(d, k),
                           std::to_string(sum), std::to_string(d + 1));
            }
    }
}

void suite_ds(Checker& c, const VerifyOptions& o) {
    for (int n = 1; n <= std::min(o.max_d, kCubePosetMaxDim); ++n) {
        const Poly f = toric_f(cube_boundary_complex(n));
        c.expect_poly("ds-palindrome", "n=" + std::to_string(n), f.mirror(n), f);
        Poly sum;
        for (int k = 0; k <= n; ++k) sum += q_poly(n - 1, k);
        c.expect_poly("ds-q-row-sum", "n=" + std::to_string(n), f, sum);
    }

    for (int n = 1; n <= o.max_d; ++n) {
        std::vector<Int> fv;
        for (int j = 0; j < n; ++j) fv.push_back(pow2(n - j) * binomial(n, j));
        const AdinH h = adin_h_from_f(make_fvector(std::move(fv)));
        const Int expected = pow2(n - 1);
        bool ok = true;
        for (const auto& e : h.long_h) ok = ok && e == expected;
        if (ok)
            c.pass();
        else {
            std::ostringstream got;
            for (size_t t = 0; t < h.long_h.size(); ++t)
                got << (t > 0 ? "," : "") << h.long_h[t];
            c.fail("ds-adin-constant", "n=" + std::to_string(n), got.str(), expected.str());
        }
    }
}

void suite_little(Checker& c, const VerifyOptions& o) {
    for (int d = 1; d <= o.max_d; ++d)
        for (int i = 1; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                for (int k = j; k <= d; ++k) {
                    Int lhs = 0;
                    for (int l = 0; l <= i; ++l)
                        lhs += binomial(i, l) * binomial(d - i - j, d - k - l) * pow2(i - l);
                    Int rhs = 0;
                    for (int m = 0; m <= i - 1; ++m)
                        rhs += binomial(i - 1, m) * (2 * binomial(d - m - j - 1, d - k) +
                                                     binomial(d - m - j - 1, d - k - 1));
                    if (lhs == rhs)
                        c.pass();
                    else
                        c.fail("little-identity",
                               d_input(d) + " i=" + std::to_string(i) + " j=" +
                                   std::to_string(j) + " k=" + std::to_string(k),
                               lhs.str(), rhs.str());
                }
}

using SuiteFn = void (*)(Checker&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"tables", suite_tables},
        {"involution", suite_involution},
        {"beta", suite_beta},
        {"weights", suite_weights},
        {"q-model", suite_qmodel},
        {"c-model", suite_cmodel},
        {"duality", suite_duality},
        {"dehn-sommerville", suite_ds},
        {"little", suite_little},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        n.emplace_back("all");
        return n;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
    VerificationReport report;
    report.suite = name;
    Checker c{report};
    const auto start = std::chrono::steady_clock::now();
    bool found = false;
    for (const auto& [n, fn] : registry()) {
        if (name != "all" && n != name) continue;
        fn(c, opt);
        found = true;
        if (name != "all") break;
    }
    if (!found) throw std::invalid_argument("unknown suite");
    const auto stop = std::chrono::steady_clock::now();
    report.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

}  // namespace toricnc

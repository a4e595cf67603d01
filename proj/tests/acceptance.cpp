// Acceptance gate: one PASS/FAIL line per criterion, exit 1 on any failure.
// argv[1] is the path of the command line binary (used by criterion 1).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "support/oracle.hpp"
#include "toricnc/cubical.hpp"
#include "toricnc/formats.hpp"
#include "toricnc/ncpart.hpp"
#include "toricnc/toric.hpp"
#include "toricnc/verify.hpp"

using namespace toricnc;

namespace {

std::string g_cli_path;

std::string capture_cli(const std::string& args, int& exit_code) {
    const std::string cmd = "'" + g_cli_path + "' " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int rc = pclose(pipe);
    exit_code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return out;
}

std::string show(const Poly& got, const Poly& want) {
    return got.text() + " != " + want.text();
}

std::string suite_result(const std::string& name, const VerifyOptions& o, long long min_checks) {
    const VerificationReport r = run_suite(name, o);
    if (!r.failures.empty()) {
        const auto& f = r.failures.front();
        return std::to_string(r.failures.size()) + " failed checks, first: " + f.check + " [" +
               f.inputs + "] " + f.lhs + " != " + f.rhs;
    }
    if (r.checks < min_checks)
        return "only " + std::to_string(r.checks) + " checks ran, expected at least " +
               std::to_string(min_checks);
    return "";
}

// ---- criteria; empty return means pass ----

std::string criterion_1() {
    int code = 0;
    const std::string out = capture_cli("g --max-d 4", code);
    if (code != 0) return "CLI exited with code " + std::to_string(code);
    const std::string expect =
        "d=-1: 1\n"
        "d=0: 1\n"
        "d=1: 1\n"
        "d=2: 1 + x\n"
        "d=3: 1 + 4x\n"
        "d=4: 1 + 11x + 2x^2\n";
    if (out != expect) return "CLI output mismatch:\n" + out;
    for (int d = 0; d <= 8; ++d) {
        const Poly a = g_cube(d, GMethod::recursion);
        const Poly b = g_cube(d, GMethod::gessel);
        if (a != b) return "recursion vs binomial at d=" + std::to_string(d) + ": " + show(a, b);
    }
    for (int d = 1; d <= 9; ++d) {
        const Poly a = g_cube(d, GMethod::nc, 12);
        const Poly b = g_cube(d, GMethod::gessel);
        if (a != b) return "census vs binomial at d=" + std::to_string(d) + ": " + show(a, b);
    }
    return "";
}

std::string criterion_2() {
    using Row = std::tuple<int, int, Poly>;
    const std::vector<Row> frozen = {
        {0, 0, Poly::from_ints({0, 1})},
        {0, 1, Poly::from_ints({1})},
        {1, 0, Poly::from_ints({0, 0, 1})},
        {1, 1, Poly::from_ints({0, 2})},
        {1, 2, Poly::from_ints({1})},
        {2, 0, Poly::from_ints({0, 0, 1, 1})},
        {2, 1, Poly::from_ints({0, 0, 4})},
        {2, 2, Poly::from_ints({0, 4})},
        {2, 3, Poly::from_ints({1, 1})},
        {3, 0, Poly::from_ints({0, 0, 0, 4, 1})},
        {3, 1, Poly::from_ints({0, 0, 2, 8})},
        {3, 2, Poly::from_ints({0, 0, 10})},
        {3, 3, Poly::from_ints({0, 8, 2})},
        {3, 4, Poly::from_ints({1, 4})},
        {4, 0, Poly::from_ints({0, 0, 0, 2, 11, 1})},
        {4, 1, Poly::from_ints({0, 0, 0, 12, 16})},
        {4, 2, Poly::from_ints({0, 0, 4, 24})},
        {4, 3, Poly::from_ints({0, 0, 24, 4})},
        {4, 4, Poly::from_ints({0, 16, 12})},
        {4, 5, Poly::from_ints({1, 11, 2})},
    };
    for (const auto& [d, k, want] : frozen) {
        const Poly got = q_poly(d, k);
        if (got != want)
            return "row d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " +
                   show(got, want);
    }
    return "";
}

std::string criterion_3() {
    VerifyOptions o;
    o.max_d = 9;
    o.guard_nc = 12;
    return suite_result("q-model", o, 63);  // sum of d+2 rows for d=1..9
}

std::string criterion_4() {
    VerifyOptions o;
    o.max_d = 6;
    return suite_result("c-model", o, 520);  // one check per family, d=1..6
}

std::string criterion_5() {
    VerifyOptions o;
    o.max_d = 9;
    return suite_result("involution", o, 6917);  // total partitions for d=1..9
}

std::string criterion_6() {
    VerifyOptions o;
    o.max_d = 8;
    const std::string base = suite_result("beta", o, 3570);  // families for d=1..8
    if (!base.empty()) return base;
    for (int d = 1; d <= 6; ++d)
        for (const auto& s : enumerate_families(d))
            if (beta(s) != oracle::beta_by_marked_points(s))
                return "marked-point reading disagrees for " + family_text(s) + " at d=" +
                       std::to_string(d);
    return "";
}

std::string criterion_7() {
    VerifyOptions o;
    o.max_d = 9;
    o.guard_nc = 12;
    o.guard_family = 7;
    return suite_result("duality", o, 100);
}

std::string criterion_8() {
    VerifyOptions o;
    o.max_d = 10;
    return suite_result("dehn-sommerville", o, 18);
}

std::string criterion_9() {
    VerifyOptions o;
    o.max_d = 10;
    return suite_result("little", o, 100);
}

std::string criterion_10() {
    for (int d = 0; d <= 5; ++d) {
        std::vector<Int> f(d + 1);
        for (int j = 0; j <= d; ++j) f[j] = pow2(d - j) * binomial(d, j);
        const FVector solid = make_fvector(f);
        const Poly by_poset = toric_f(cube_complex(d));
        const Poly by_counts = toric_f_cubical(solid);
        const Poly by_h = toric_f_from_adin(adin_h_from_f(solid).normalized);
        if (by_poset != by_counts)
            return "solid cube d=" + std::to_string(d) + ": " + show(by_poset, by_counts);
        if (by_counts != by_h)
            return "solid cube d=" + std::to_string(d) + ": " + show(by_counts, by_h);

        if (d == 0) continue;
        f.pop_back();
        const FVector bdry = make_fvector(f);
        const Poly bp = toric_f(cube_boundary_complex(d));
        const Poly bc = toric_f_cubical(bdry);
        const Poly bh = toric_f_from_adin(adin_h_from_f(bdry).normalized);
        if (bp != bc) return "cube boundary d=" + std::to_string(d) + ": " + show(bp, bc);
        if (bc != bh) return "cube boundary d=" + std::to_string(d) + ": " + show(bc, bh);
    }
    for (int d = 1; d <= 2; ++d) {
        const Poly shelled = toric_f_from_shelling(cube_boundary_shelling_cvector(d));
        const Poly direct = toric_f(cube_boundary_complex(d + 1));
        if (shelled != direct)
            return "shelling of the " + std::to_string(d + 1) + "-cube boundary: " +
                   show(shelled, direct);
    }
    return "";
}

std::string criterion_11() {
    for (int d = 0; d <= 9; ++d) {
        QTable t;
        try {
            t = q_table(d);
        } catch (const std::exception& e) {
            return "d=" + std::to_string(d) + ": " + e.what();
        }
        for (int k = 0; k <= d + 1; ++k) {
            const Poly& q = t.q[k];
            if (!q.integral() || !q.nonnegative())
                return "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                       " is not a nonnegative integer row: " + q.text();
            if (k >= 1 && k <= d)
                for (const Rat& c : q.coeffs())
                    if (numerator(c) % 2 != 0)
                        return "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                               " has an odd coefficient: " + q.text();
        }
    }
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 1;
    }
    g_cli_path = argv[1];

    struct Entry {
        int id;
        const char* name;
        double limit_s;  // 0 = no bound
        std::function<std::string()> run;
    };
    const std::vector<Entry> criteria = {
        {1, "g table via CLI, three g routes agree to d=8 (census to d=9)", 10, criterion_1},
        {2, "frozen contribution table, all 20 rows for d<=4", 1, criterion_2},
        {3, "weighted census equals the closed-form rows, d<=9", 60, criterion_3},
        {4, "every family sweep matches its component formula, d<=6", 120, criterion_4},
        {5, "involution identities, d<=9, brute-force cross-check to d=8", 0, criterion_5},
        {6, "family involution identities over all families, d<=8", 0, criterion_6},
        {7, "mirror dualities for rows, components and weight exponents", 0, criterion_7},
        {8, "cube boundary palindromes and constant normalized h to n=10", 0, criterion_8},
        {9, "binomial identity over all admissible tuples, d<=10", 0, criterion_9},
        {10, "toric f agrees across poset, count, h and shelling routes", 0, criterion_10},
        {11, "all rows have nonnegative integer, middle-even coefficients, d<=9", 0,
         criterion_11},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (detail.empty() && c.limit_s > 0 && secs > c.limit_s) {
            std::ostringstream os;
            os << "exceeded the " << c.limit_s << "s budget";
            detail = os.str();
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        if (detail.empty()) {
            line << "PASS criterion " << c.id << ": " << c.name << " (" << secs << "s)";
        } else {
            line << "FAIL criterion " << c.id << ": " << c.name << ": " << detail;
            all_ok = false;
        }
        std::cout << line.str() << std::endl;
    }
    return all_ok ? 0 : 1;
}

#include "oracle.hpp"

#include <stdexcept>
#include <vector>

namespace toricnc::oracle {

namespace {

// Positions 1..2d clockwise: element e at 2e-1, the midpoint between e and
// e+1 at 2e. The midpoint at 2e carries the dual label d-e, with 0 meaning d.
// An interval [lo,hi] encloses the contiguous run 2lo-1 .. 2hi-1, i.e. its
// elements plus the midpoints strictly inside; the star encloses everything.
std::vector<char> marks_of(const IntervalFamily& s) {
    const int d = s.d();
    std::vector<char> mark(2 * d + 1, 0);
    if (s.star()) {
        std::fill(mark.begin() + 1, mark.end(), 1);
        return mark;
    }
    for (const auto& iv : s.intervals()) {
        int pos = 2 * iv.lo - 1;
        const int stop = 2 * iv.hi - 1;
        while (true) {
            mark[pos] = 1;
            if (pos == stop) break;
            pos = pos % (2 * d) + 1;
        }
    }
    return mark;
}

int midpoint_label(int d, int pos) {
    const int l = d - pos / 2;
    return l == 0 ? d : l;
}

}  // namespace

IntervalFamily beta_by_marked_points(const IntervalFamily& s) {
    const int d = s.d();
    const auto mark = marks_of(s);
    const int n = 2 * d;

    bool any_marked = false;
    bool any_unmarked = false;
    for (int p = 1; p <= n; ++p) (mark[p] ? any_marked : any_unmarked) = true;
    if (!any_unmarked) return IntervalFamily::empty(d);
    if (!any_marked) return IntervalFamily::full_star(d);

    std::vector<CyclicInterval> out;
    for (int p = 1; p <= n; ++p) {
        const int prev = p == 1 ? n : p - 1;
        if (mark[p] || !mark[prev]) continue;  // not the start of an unmarked run
        if (p % 2 != 0) throw std::logic_error("complement run starts at an element");
        std::vector<int> labels;
        int q = p;
        int last = p;
        while (!mark[q]) {
            if (q % 2 == 0) labels.push_back(midpoint_label(d, q));
            last = q;
            q = q % n + 1;
        }
        if (last % 2 != 0) throw std::logic_error("complement run ends at an element");
        // walking clockwise the labels step down cyclically by one
        for (size_t t = 1; t < labels.size(); ++t) {
            const int expect = labels[t - 1] == 1 ? d : labels[t - 1] - 1;
            if (labels[t] != expect) throw std::logic_error("midpoint labels not consecutive");
        }
        out.push_back({labels.back(), labels.front()});
    }
    return IntervalFamily(d, std::move(out));
}

int weight_exponent_by_marked_points(const NcPartition& p, const IntervalFamily& s) {
    if (p.d != s.d()) throw std::invalid_argument("ground set size mismatch");
    const int d = p.d;
    const auto mark = marks_of(s);

    int e = 0;
    for (const auto& b : p.blocks)
        if (b.size() >= 2) ++e;
    // at d = 1 the lone element is a singleton and an antisingleton at once
    // and contributes through its element point and its midpoint separately
    for (int k = 1; k <= d; ++k) {
        if (p.blocks[p.block_of[k - 1]].size() == 1 && mark[2 * k - 1]) ++e;
        const int succ = k % d + 1;
        if (p.block_of[k - 1] == p.block_of[succ - 1] && mark[2 * k]) ++e;
    }
    return e;
}

}  // namespace toricnc::oracle

#include "toricnc/ncpart.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace toricnc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::vector<std::vector<int>> sorted_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

bool partition_of(int d, const std::vector<std::vector<int>>& blocks) {
    if (d < 1) return false;
    std::vector<char> seen(d + 1, 0);
    int total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        for (int e : b) {
            if (e < 1 || e > d || seen[e]) return false;
            seen[e] = 1;
            ++total;
        }
    }
    return total == d;
}

// p < q < r < s with p,r in one block and q,s in the other
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i + 1 < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            for (size_t u = 0; u + 1 < b.size(); ++u)
                for (size_t v = u + 1; v < b.size(); ++v) {
                    int p = a[i], r = a[j], q = b[u], s = b[v];
                    if ((p < q && q < r && r < s) || (q < p && p < s && s < r))
                        return true;
                }
    return false;
}

NcPartition finish(int d, std::vector<std::vector<int>> blocks) {
    NcPartition p;
    p.d = d;
    p.blocks = sorted_blocks(std::move(blocks));
    p.block_of.assign(d, 0);
    for (size_t id = 0; id < p.blocks.size(); ++id)
        for (int e : p.blocks[id]) p.block_of[e - 1] = static_cast<int>(id);
    return p;
}

}  // namespace

bool is_noncrossing(int d, const std::vector<std::vector<int>>& blocks) {
    require(partition_of(d, blocks), "not a partition");
    auto bs = sorted_blocks(blocks);
    for (size_t x = 0; x < bs.size(); ++x)
        for (size_t y = x + 1; y < bs.size(); ++y)
            if (blocks_cross(bs[x], bs[y])) return false;
    return true;
}

NcPartition make_nc_partition(int d, std::vector<std::vector<int>> blocks) {
    if (!is_noncrossing(d, blocks)) throw std::invalid_argument("crossing partition");
    return finish(d, std::move(blocks));
}

std::vector<NcPartition> enumerate_nc(int d, int guard) {
    require(d >= 1, "d must be positive");
    if (d > guard) throw std::invalid_argument("enumeration size guard");

    std::vector<NcPartition> out;
    std::vector<std::vector<int>> blocks;
    std::vector<int> open;  // stack of extendable block ids, ascending

    // Element e may start a new block or join an open one; joining open[t]
    // seals every block above it. Visiting joins bottom-up and the new block
    // last emits leaves in lexicographic block_of order.
    auto rec = [&](auto&& self, int e) -> void {
        if (e > d) {
            out.push_back(finish(d, blocks));
            return;
        }
        for (size_t t = 0; t < open.size(); ++t) {
            std::vector<int> sealed(open.begin() + t + 1, open.end());
            open.resize(t + 1);
            blocks[open[t]].push_back(e);
            self(self, e + 1);
            blocks[open[t]].pop_back();
            open.insert(open.end(), sealed.begin(), sealed.end());
        }
        blocks.push_back({e});
        open.push_back(static_cast<int>(blocks.size()) - 1);
        self(self, e + 1);
        open.pop_back();
        blocks.pop_back();
    };
    rec(rec, 1);
    return out;
}

PartitionStats stats(const NcPartition& p) {
    PartitionStats st;
    for (const auto& b : p.blocks) {
        if (b.size() == 1) {
            st.singletons.push_back(b[0]);
        } else {
            ++st.block_count;
            st.last_elements.push_back(b.back());
        }
    }
    std::sort(st.singletons.begin(), st.singletons.end());
    std::sort(st.last_elements.begin(), st.last_elements.end());
    // the successor is cyclic, so for d = 1 the sole element succeeds itself
    // and is an antisingleton (as well as a singleton)
    for (int k = 1; k <= p.d; ++k) {
        int succ = k % p.d + 1;
        if (p.block_of[k - 1] == p.block_of[succ - 1]) st.antisingletons.push_back(k);
    }
    return st;
}

NcPartition alpha(const NcPartition& p) {
    const int d = p.d;
    // sigma cycles the elements of each block in increasing order
    std::vector<int> sigma_inv(d + 1);
    for (const auto& b : p.blocks)
        for (size_t t = 0; t < b.size(); ++t) sigma_inv[b[(t + 1) % b.size()]] = b[t];
    // Kreweras complement: cycles of i -> sigma^{-1}(i mod d + 1),
    // then relabel e -> d-e (mod d, 0 -> d)
    std::vector<char> used(d + 1, 0);
    std::vector<std::vector<int>> blocks;
    for (int s = 1; s <= d; ++s) {
        if (used[s]) continue;
        std::vector<int> blk;
        int cur = s;
        while (!used[cur]) {
            used[cur] = 1;
            int lab = (d - cur) % d;
            blk.push_back(lab == 0 ? d : lab);
            cur = sigma_inv[cur % d + 1];
        }
        blocks.push_back(std::move(blk));
    }
    return finish(d, std::move(blocks));
}

// ---- brute-force alpha ----

namespace {

using Chord = std::pair<int, int>;  // positions on the circle of 2d points, first < second

// circular representation: consecutive elements of each block joined, blocks
// of two by a single chord
std::vector<Chord> circle_chords(const std::vector<std::vector<int>>& blocks,
                                 const std::vector<int>& pos) {
    std::vector<Chord> ch;
    for (const auto& b : blocks) {
        if (b.size() < 2) continue;
        std::vector<int> ps;
        ps.reserve(b.size());
        for (int e : b) ps.push_back(pos[e]);
        std::sort(ps.begin(), ps.end());
        if (ps.size() == 2) {
            ch.emplace_back(ps[0], ps[1]);
            continue;
        }
        for (size_t t = 0; t < ps.size(); ++t) {
            int a = ps[t], c = ps[(t + 1) % ps.size()];
            if (a > c) std::swap(a, c);
            ch.emplace_back(a, c);
        }
    }
    return ch;
}

bool chords_cross(const Chord& x, const Chord& y) {
    const bool lo_in = x.first < y.first && y.first < x.second;
    const bool hi_in = x.first < y.second && y.second < x.second;
    return lo_in != hi_in;
}

struct OracleTable {
    std::vector<NcPartition> parts;          // sorted by block count, then lex
    std::vector<std::vector<Chord>> chords;  // chords on the interleaved positions
};

// element e sits at position 2e-1; the interleaved point labeled l sits after
// element (d-l mod d), i.e. at position 2(d-l mod d), with 0 meaning after d
const OracleTable& oracle_table(int d) {
    static std::mutex mu;
    static std::map<int, OracleTable> tables;
    std::lock_guard<std::mutex> lk(mu);
    auto it = tables.find(d);
    if (it != tables.end()) return it->second;

    std::vector<int> ppos(d + 1);
    for (int l = 1; l <= d; ++l) {
        int m = (d - l) % d;
        ppos[l] = m == 0 ? 2 * d : 2 * m;
    }
    OracleTable tab;
    tab.parts = enumerate_nc(d);
    std::stable_sort(tab.parts.begin(), tab.parts.end(),
                     [](const NcPartition& a, const NcPartition& b) {
                         return a.blocks.size() < b.blocks.size();
                     });
    tab.chords.reserve(tab.parts.size());
    for (const auto& cand : tab.parts) tab.chords.push_back(circle_chords(cand.blocks, ppos));
    return tables.emplace(d, std::move(tab)).first->second;
}

}  // namespace

NcPartition alpha_bruteforce(const NcPartition& p) {
    const int d = p.d;
    std::vector<int> upos(d + 1);
    for (int e = 1; e <= d; ++e) upos[e] = 2 * e - 1;
    const auto pchords = circle_chords(p.blocks, upos);

    const auto& tab = oracle_table(d);
    const NcPartition* found = nullptr;
    for (size_t n = 0; n < tab.parts.size(); ++n) {
        if (found && tab.parts[n].blocks.size() > found->blocks.size()) break;
        bool ok = true;
        for (const auto& a : tab.chords[n]) {
            for (const auto& b : pchords)
                if (chords_cross(a, b)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (!ok) continue;
        if (found) throw std::logic_error("coarsest compatible partition is not unique");
        found = &tab.parts[n];
    }
    if (!found) throw std::logic_error("no compatible partition found");
    return *found;
}

// ---- interval families ----

IntervalFamily::IntervalFamily(int d, std::vector<CyclicInterval> intervals, bool star)
    : d_(d), intervals_(std::move(intervals)), star_(star) {
    require(d >= 1, "ground set must be nonempty");
    for (const auto& iv : intervals_)
        require(iv.lo >= 1 && iv.lo <= d && iv.hi >= 1 && iv.hi <= d,
                "interval endpoint out of range");
    std::sort(intervals_.begin(), intervals_.end(),
              [](const CyclicInterval& a, const CyclicInterval& b) { return a.lo < b.lo; });
    std::vector<char> cov(d + 1, 0);
    int wrapped_count = 0;
    for (const auto& iv : intervals_) {
        if (iv.wrapped()) ++wrapped_count;
        int k = iv.lo;
        while (true) {
            require(!cov[k], "overlapping intervals");
            cov[k] = 1;
            if (k == iv.hi) break;
            k = k % d_ + 1;
        }
    }
    require(wrapped_count <= 1, "more than one wrapped interval");
    require(wrapped_count == 0 || intervals_.back().wrapped(), "wrapped interval must sort last");
    if (star_)
        require(intervals_.size() == 1 && intervals_[0].lo == 1 && intervals_[0].hi == d_,
                "star requires the full interval [1,d]");
}

IntervalFamily IntervalFamily::empty(int d) {
    return IntervalFamily(d, {});
}

IntervalFamily IntervalFamily::full_star(int d) {
    return IntervalFamily(d, {CyclicInterval{1, d}}, true);
}

int IntervalFamily::covered_count() const {
    int total = 0;
    for (const auto& iv : intervals_)
        total += iv.wrapped() ? (d_ - iv.lo + 1 + iv.hi) : (iv.hi - iv.lo + 1);
    return total;
}

bool IntervalFamily::covers(int k) const {
    for (const auto& iv : intervals_) {
        const bool in = iv.wrapped() ? (k >= iv.lo || k <= iv.hi) : (iv.lo <= k && k <= iv.hi);
        if (in) return true;
    }
    return false;
}

IntervalFamily beta(const IntervalFamily& s) {
    const int d = s.d();
    if (s.interval_count() == 0) return IntervalFamily::full_star(d);
    if (s.star()) return IntervalFamily::empty(d);
    const auto& iv = s.intervals();
    const int i = static_cast<int>(iv.size());
    auto dual_hi = [d](int l) {
        int h = d - l;
        return h == 0 ? d : h;
    };
    std::vector<CyclicInterval> out;
    out.reserve(i);
    for (int n = 0; n + 1 < i; ++n)
        out.push_back({d - iv[n + 1].lo + 1, dual_hi(iv[n].hi)});
    out.push_back({d - iv[0].lo + 1, dual_hi(iv[i - 1].hi)});
    return IntervalFamily(d, std::move(out));
}

IntervalFamily complement_family(const IntervalFamily& s) {
    const int d = s.d();
    if (s.interval_count() == 0) return IntervalFamily::full_star(d);
    std::vector<char> cov(d + 1, 0);
    bool any_uncovered = false;
    for (int k = 1; k <= d; ++k) {
        cov[k] = s.covers(k) ? 1 : 0;
        if (!cov[k]) any_uncovered = true;
    }
    if (!any_uncovered) return IntervalFamily::empty(d);
    std::vector<CyclicInterval> runs;
    for (int k = 1; k <= d; ++k) {
        const int prev = k == 1 ? d : k - 1;
        if (cov[k] || !cov[prev]) continue;  // run starts where coverage ends
        int end = k;
        while (true) {
            const int nxt = end % d + 1;
            if (cov[nxt] || nxt == k) break;
            end = nxt;
        }
        runs.push_back({k, end});
    }
    return IntervalFamily(d, std::move(runs));
}

int weight_exponent(const NcPartition& p, const IntervalFamily& s) {
    if (p.d != s.d()) throw std::invalid_argument("ground set size mismatch");
    const auto st = stats(p);
    int e = st.block_count;
    for (int k : st.singletons)
        if (s.covers(k)) ++e;
    for (int k : st.antisingletons) {
        for (const auto& iv : s.intervals()) {
            const bool in = iv.wrapped() ? (k >= iv.lo || k <= iv.hi) : (iv.lo <= k && k <= iv.hi);
            if (in && (s.star() || k != iv.hi)) {
                ++e;
                break;
            }
        }
    }
    return e;
}

int weight_k_exponent(const NcPartition& p, int k) {
    const int d = p.d;
    if (k < 0 || k > d + 1) throw std::invalid_argument("k out of range");
    if (k == 0) return weight_exponent(p, IntervalFamily::full_star(d));
    if (k == d + 1) return weight_exponent(p, IntervalFamily::empty(d));
    return weight_exponent(p, IntervalFamily(d, {CyclicInterval{k, d}}));
}

std::vector<IntervalFamily> enumerate_families(int d) {
    require(d >= 1, "d must be positive");
    if (d > 16) throw std::invalid_argument("enumeration size guard");

    std::vector<IntervalFamily> out;
    out.push_back(IntervalFamily::empty(d));
    out.push_back(IntervalFamily::full_star(d));

    const int full = (1 << d) - 1;
    for (int mask = 1; mask <= full; ++mask) {
        if (mask == full) {
            // cutting after each chosen element splits the full circle
            for (int cuts = 1; cuts <= full; ++cuts) {
                std::vector<int> cut;
                for (int t = 1; t <= d; ++t)
                    if (cuts >> (t - 1) & 1) cut.push_back(t);
                std::vector<CyclicInterval> ivs;
                ivs.reserve(cut.size());
                for (size_t a = 0; a < cut.size(); ++a)
                    ivs.push_back({cut[a] % d + 1, cut[(a + 1) % cut.size()]});
                out.emplace_back(d, std::move(ivs));
            }
            continue;
        }
        auto covered = [&](int k) { return (mask >> (k - 1) & 1) != 0; };
        // maximal cyclic runs of covered elements
        std::vector<std::vector<int>> runs;
        for (int k = 1; k <= d; ++k) {
            const int prev = k == 1 ? d : k - 1;
            if (!covered(k) || covered(prev)) continue;
            std::vector<int> run{k};
            int cur = k;
            while (true) {
                const int nxt = cur % d + 1;
                if (!covered(nxt)) break;
                run.push_back(nxt);
                cur = nxt;
            }
            runs.push_back(std::move(run));
        }
        // each run splits independently at any subset of internal boundaries
        std::vector<std::vector<std::vector<CyclicInterval>>> choices;
        for (const auto& run : runs) {
            const int L = static_cast<int>(run.size());
            std::vector<std::vector<CyclicInterval>> splits;
            for (int b = 0; b < (1 << (L - 1)); ++b) {
                std::vector<CyclicInterval> part;
                int start = run[0];
                for (int t = 0; t + 1 < L; ++t) {
                    if (b >> t & 1) {
                        part.push_back({start, run[t]});
                        start = run[t + 1];
                    }
                }
                part.push_back({start, run[L - 1]});
                splits.push_back(std::move(part));
            }
            choices.push_back(std::move(splits));
        }
        std::vector<size_t> idx(choices.size(), 0);
        while (true) {
            std::vector<CyclicInterval> ivs;
            for (size_t r = 0; r < choices.size(); ++r)
                for (const auto& iv : choices[r][idx[r]]) ivs.push_back(iv);
            out.emplace_back(d, std::move(ivs));
            size_t r = 0;
            while (r < idx.size() && ++idx[r] == choices[r].size()) idx[r++] = 0;
            if (r == idx.size()) break;
        }
    }
    return out;
}

}  // namespace toricnc

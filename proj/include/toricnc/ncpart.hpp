#pragma once

#include <string>
#include <vector>

namespace toricnc {

constexpr int kNcEnumerationGuard = 14;

/// Set partition of {1,...,d} with no crossing pair of blocks.
/// Blocks are ordered by their minimum, elements ascending; block ids in
/// block_of follow that order.
struct NcPartition {
    int d = 0;
    std::vector<int> block_of;             // index e-1 -> block id
    std::vector<std::vector<int>> blocks;

    bool operator==(const NcPartition&) const = default;
};

struct PartitionStats {
    int block_count = 0;                   // nonsingleton blocks
    std::vector<int> singletons;
    std::vector<int> antisingletons;
    std::vector<int> last_elements;        // maxima of the nonsingleton blocks

    /// |pi| = nonsingleton blocks + singletons.
    [[nodiscard]] int size() const {
        return block_count + static_cast<int>(singletons.size());
    }
};

/// Cyclic interval [lo,hi] on {1,...,d}; wrapped when lo > hi (runs through d
/// and back from 1).
struct CyclicInterval {
    int lo = 1;
    int hi = 1;

    [[nodiscard]] bool wrapped() const { return lo > hi; }
    bool operator==(const CyclicInterval&) const = default;
};

/// Ordered family of pairwise disjoint cyclic intervals on {1,...,d}.
/// Normal form sorts by interval start, so a wrapped interval (whose start
/// exceeds every other start) comes last; at most one interval may wrap.
/// `star` marks the distinguished full interval that also carries the seam
/// between d and 1, written {[1,d]*}.
class IntervalFamily {
public:
    IntervalFamily(int d, std::vector<CyclicInterval> intervals, bool star = false);

    static IntervalFamily empty(int d);
    static IntervalFamily full_star(int d);

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const std::vector<CyclicInterval>& intervals() const { return intervals_; }
    [[nodiscard]] bool star() const { return star_; }

    [[nodiscard]] int interval_count() const { return static_cast<int>(intervals_.size()); }
    [[nodiscard]] int covered_count() const;
    /// j = d - covered elements.
    [[nodiscard]] int uncovered_count() const { return d_ - covered_count(); }
    [[nodiscard]] bool covers(int k) const;

    bool operator==(const IntervalFamily&) const = default;

private:
    int d_ = 0;
    std::vector<CyclicInterval> intervals_;
    bool star_ = false;
};

// ---- construction and enumeration ----

/// True iff blocks form a set partition of {1,...,d}; throws "not a
/// partition" when they do not.
bool is_noncrossing(int d, const std::vector<std::vector<int>>& blocks);

/// Validates (partition of {1,...,d}, noncrossing) and canonicalizes.
NcPartition make_nc_partition(int d, std::vector<std::vector<int>> blocks);

/// All of NC(d) in lexicographic order on block_of.
std::vector<NcPartition> enumerate_nc(int d, int guard = kNcEnumerationGuard);

/// Every interval family on {1,...,d}, including the empty family and the
/// full starred one. Deterministic order.
std::vector<IntervalFamily> enumerate_families(int d);

// ---- statistics and the involution ----

PartitionStats stats(const NcPartition& p);

/// Simion-Ullman involution: Kreweras complement followed by the relabeling
/// e -> d-e (mod d, 0 -> d).
NcPartition alpha(const NcPartition& p);

/// Reference route for alpha: exhaustive search for the coarsest noncrossing
/// partition on the interleaved points whose chords cross none of p's.
NcPartition alpha_bruteforce(const NcPartition& p);

// ---- interval-family operators ----

/// Dual family: {[d-k_{n+1}+1, d-l_n]}_n plus [d-k_1+1, d-l_i], endpoints
/// mod d with 0 -> d; beta(empty) = {[1,d]*} and beta({[1,d]*}) = empty.
IntervalFamily beta(const IntervalFamily& s);

/// Maximal cyclic runs of uncovered elements.
IntervalFamily complement_family(const IntervalFamily& s);

// ---- weights ----

/// Exponent e of the weight monomial x^e: one per nonsingleton block, one per
/// singleton covered by the family, one per antisingleton k lying in an
/// interval without being its endpoint hi (for the starred family every
/// element of an interval counts).
int weight_exponent(const NcPartition& p, const IntervalFamily& s);

/// weight_exponent against the family {[k,d]} for 1 <= k <= d, {[1,d]*} for
/// k = 0, the empty family for k = d+1.
int weight_k_exponent(const NcPartition& p, int k);

}  // namespace toricnc

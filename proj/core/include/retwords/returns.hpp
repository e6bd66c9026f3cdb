#pragma once

#include <optional>
#include <set>
#include <vector>

#include "retwords/language.hpp"

namespace retwords {

inline constexpr long kDefaultStepCap = 1'000'000;
inline constexpr std::size_t kDefaultScanBudget = 100'000;

/// All start positions of w in the first prefix_len symbols, overlaps included.
std::vector<std::size_t> occurrences(const SymbolSequence& seq, const Word& w,
                                     std::size_t prefix_len);

enum class ReturnMethod { scan, geometric };

/**
 * Return words over a target factor w: the blocks from one occurrence of w to
 * the start of the next. `lengths` is the sorted multiset of the distinct
 * return words' lengths; `positions` holds the first few occurrence positions
 * (scan only). `complete` certifies that the whole return-word set was found:
 * always true for the geometric route, and true for a scan only when a matching
 * expected count was supplied and met.
 */
struct ReturnReport {
    Word target;
    std::set<Word> returns;
    std::vector<std::size_t> lengths;
    std::vector<std::size_t> positions;
    ReturnMethod method;
    bool complete = false;
    std::size_t budget_used = 0;
};

ReturnReport return_words_scan(const SymbolSequence& seq, const Word& w, std::size_t budget,
                               std::optional<std::size_t> expected = std::nullopt);

/// The interval I_w of points whose coding starts with w; empty when w is not
/// a factor. Single interval for a regular IET.
Interval factor_interval(const IETransform& T, const Word& w);

/**
 * First-return structure of T on a factor interval: the k subintervals of the
 * induced map together with the exact first-return time of each.
 */
struct InducedPartition {
    Interval base;
    std::vector<Interval> parts;      // ordered, disjoint, covering base
    std::vector<long> return_times;   // first return time of each part
};

/// Splits I_w at the first backward landings of the interior endpoints and of
/// the endpoints of I_w itself; exactly k-1 interior cut points for a regular
/// IET (anything else raises Errc::regularity_violation). Searches beyond
/// step_cap raise Errc::horizon_exceeded.
InducedPartition induced_partition(const IETransform& T, const Interval& iw,
                                   long step_cap = kDefaultStepCap);

/// Return words read off the induced partition: for each part, the coding of
/// its midpoint for one full return. Exactly k words, complete by construction.
ReturnReport return_words_geometric(const IETransform& T, const Word& w,
                                    long step_cap = kDefaultStepCap);

struct AuditRow {
    Word w;
    std::size_t count_scan = 0;
    std::optional<std::size_t> count_geom;  // absent in scan-only audits
    std::size_t expected = 0;
    bool agree = false;  // identical sets (both routes) / expected count met (scan-only)
};

struct AuditTable {
    int max_len = 0;
    std::size_t budget = 0;
    std::vector<AuditRow> rows;
    bool all_agree = true;
};

/// For every factor w with |w| <= max_len: return words by both routes, with
/// set equality as the agreement flag. The scan runs over the coding of x0.
AuditTable verify_property_Rk(const IETransform& T, const Scalar& x0, int max_len,
                              std::size_t budget = kDefaultScanBudget,
                              long step_cap = kDefaultStepCap);

/// Scan-only audit for sequences without an exact geometric model: counts the
/// scanned return words of every scanned factor against an expected count.
AuditTable audit_scan_only(const SymbolSequence& seq, int max_len, std::size_t budget,
                           std::size_t expected);

}  // namespace retwords

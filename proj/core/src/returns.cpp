#include "retwords/returns.hpp"

#include <algorithm>
#include <sstream>

namespace retwords {

namespace {

constexpr std::size_t kMaxReportedPositions = 16;

std::vector<std::size_t> find_occurrences(const std::vector<Symbol>& prefix, const Word& w) {
    std::vector<std::size_t> pos;
    if (w.empty() || prefix.size() < w.size()) return pos;
    for (std::size_t i = 0; i + w.size() <= prefix.size(); ++i) {
        if (std::equal(w.begin(), w.end(), prefix.begin() + static_cast<std::ptrdiff_t>(i)))
            pos.push_back(i);
    }
    return pos;
}

ReturnReport scan_report(const std::vector<Symbol>& prefix, const Word& w, std::size_t budget,
                         std::optional<std::size_t> expected) {
    std::vector<std::size_t> pos = find_occurrences(prefix, w);
    if (pos.empty())
        throw Error(Errc::no_occurrence,
                    "'" + word_str(w) + "' does not occur in the first " + std::to_string(budget) +
                        " symbols");
    ReturnReport rep;
    rep.target = w;
    rep.method = ReturnMethod::scan;
    rep.budget_used = budget;
    for (std::size_t i = 0; i + 1 < pos.size(); ++i)
        rep.returns.insert(Word(prefix.begin() + static_cast<std::ptrdiff_t>(pos[i]),
                                prefix.begin() + static_cast<std::ptrdiff_t>(pos[i + 1])));
    for (const Word& r : rep.returns) rep.lengths.push_back(r.size());
    std::sort(rep.lengths.begin(), rep.lengths.end());
    rep.positions.assign(pos.begin(),
                         pos.begin() + static_cast<std::ptrdiff_t>(
                                           std::min(pos.size(), kMaxReportedPositions)));
    rep.complete = expected.has_value() && rep.returns.size() == *expected;
    return rep;
}

// First backward landing of y in [L, R): iterate T^{-1} until the orbit
// enters the half-open interval. skip_first starts the search at T^{-1}(y).
struct Landing {
    Scalar point;
    long steps;
};

Landing first_backward_landing(const IETransform& T, Scalar y, const Interval& iw,
                               bool skip_first, long cap) {
    long t = 0;
    if (skip_first) {
        y = T.preimage_closure(y);
        t = 1;
    }
    while (!iw.contains_halfopen(y)) {
        y = T.preimage_closure(y);
        if (++t > cap)
            throw Error(Errc::horizon_exceeded,
                        "backward orbit did not reach the factor interval within " +
                            std::to_string(cap) + " steps");
    }
    return {std::move(y), t};
}

}  // namespace

std::vector<std::size_t> occurrences(const SymbolSequence& seq, const Word& w,
                                     std::size_t prefix_len) {
    if (w.empty()) throw Error(Errc::invalid_argument, "occurrences of the empty word");
    if (w.size() > prefix_len)
        throw Error(Errc::invalid_argument, "target longer than scanned prefix");
    return find_occurrences(seq.prefix(prefix_len), w);
}

ReturnReport return_words_scan(const SymbolSequence& seq, const Word& w, std::size_t budget,
                               std::optional<std::size_t> expected) {
    if (w.empty()) throw Error(Errc::invalid_argument, "return words over the empty word");
    if (w.size() > budget) throw Error(Errc::invalid_argument, "target longer than scan budget");
    return scan_report(seq.prefix(budget), w, budget, expected);
}

Interval factor_interval(const IETransform& T, const Word& w) {
    if (w.empty()) throw Error(Errc::invalid_argument, "factor interval of the empty word");
    for (Symbol s : w) {
        if (s < 1 || s > T.k())
            throw Error(Errc::invalid_argument, "letter " + std::to_string(s) +
                                                    " outside alphabet 1.." + std::to_string(T.k()));
    }
    const auto& a = T.endpoints();
    // Track C = T^m(A_m), the forward image of the set of points coding
    // w_1..w_m; it is an interval inside X_{w_m} and T acts on it by one
    // translation per step.
    Interval c{a[static_cast<std::size_t>(w[0] - 1)], a[static_cast<std::size_t>(w[0])]};
    Scalar shift(0);
    for (std::size_t m = 1; m < w.size(); ++m) {
        const Scalar& t = T.translations()[static_cast<std::size_t>(w[m - 1] - 1)];
        c.lo += t;
        c.hi += t;
        shift += t;
        const Scalar& xlo = a[static_cast<std::size_t>(w[m] - 1)];
        const Scalar& xhi = a[static_cast<std::size_t>(w[m])];
        if ((c.lo - xlo).sign() < 0) c.lo = xlo;
        if ((c.hi - xhi).sign() > 0) c.hi = xhi;
        if (c.empty()) return {Scalar(0), Scalar(0)};
    }
    return {c.lo - shift, c.hi - shift};
}

InducedPartition induced_partition(const IETransform& T, const Interval& iw, long step_cap) {
    if (iw.empty()) throw Error(Errc::invalid_argument, "empty factor interval");
    ensure_regularity(T, T.certified_keane_horizon() > 0 ? T.certified_keane_horizon() : 1000);

    const int k = T.k();
    std::set<Scalar> cuts;
    // Interior endpoints: a first landing strictly inside (L, R) is a cut; a
    // landing at L exhausts the orbit (later landings lie past the first
    // return). The endpoints of I_w continue their own backward orbits: at
    // T^{-t}(R) the return time jumps (one side exits past R), likewise for L.
    for (int i = 2; i <= k; ++i) {
        Landing l = first_backward_landing(T, T.endpoints()[static_cast<std::size_t>(i - 1)], iw,
                                           false, step_cap);
        if (!(l.point == iw.lo)) cuts.insert(std::move(l.point));
    }
    for (const Scalar& edge : {iw.lo, iw.hi}) {
        Landing l = first_backward_landing(T, edge, iw, true, step_cap);
        if (!(l.point == iw.lo)) cuts.insert(std::move(l.point));
    }

    if (static_cast<int>(cuts.size()) != k - 1) {
        std::ostringstream os;
        os << "induced partition of [" << iw.lo.str() << ", " << iw.hi.str() << ") produced "
           << cuts.size() << " interior cut points, expected " << (k - 1)
           << "; contradicts regularity";
        throw Error(Errc::regularity_violation, os.str());
    }

    InducedPartition out;
    out.base = iw;
    std::vector<Scalar> bounds;
    bounds.reserve(static_cast<std::size_t>(k) + 1);
    bounds.push_back(iw.lo);
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(iw.hi);
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Interval part{bounds[i], bounds[i + 1]};
        Scalar x = part.mid();
        long r = 0;
        do {
            x = T.apply(x);
            if (++r > step_cap)
                throw Error(Errc::horizon_exceeded,
                            "first return exceeded " + std::to_string(step_cap) + " steps");
        } while (!iw.contains_halfopen(x));
        out.parts.push_back(std::move(part));
        out.return_times.push_back(r);
    }
    return out;
}

ReturnReport return_words_geometric(const IETransform& T, const Word& w, long step_cap) {
    Interval iw = factor_interval(T, w);
    if (iw.empty())
        throw Error(Errc::not_a_factor, "'" + word_str(w) + "' is not a factor of the coding");
    InducedPartition ind = induced_partition(T, iw, step_cap);

    ReturnReport rep;
    rep.target = w;
    rep.method = ReturnMethod::geometric;
    rep.budget_used = 0;
    for (std::size_t i = 0; i < ind.parts.size(); ++i) {
        rep.returns.insert(code_orbit(T, ind.parts[i].mid(),
                                      static_cast<std::size_t>(ind.return_times[i])));
        rep.lengths.push_back(static_cast<std::size_t>(ind.return_times[i]));
    }
    std::sort(rep.lengths.begin(), rep.lengths.end());
    rep.complete = rep.returns.size() == static_cast<std::size_t>(T.k());
    return rep;
}

AuditTable verify_property_Rk(const IETransform& T, const Scalar& x0, int max_len,
                              std::size_t budget, long step_cap) {
    if (max_len < 1) throw Error(Errc::invalid_argument, "audit needs max_len >= 1");
    ensure_regularity(T, std::max<long>(max_len, 1000));

    SymbolSequence seq = coding_sequence(T, x0);
    std::vector<Symbol> prefix = seq.prefix(budget);
    const std::size_t expected = static_cast<std::size_t>(T.k());

    AuditTable table;
    table.max_len = max_len;
    table.budget = budget;
    for (int n = 1; n <= max_len; ++n) {
        for (const Word& w : factors(T, n).words) {
            ReturnReport geom = return_words_geometric(T, w, step_cap);
            ReturnReport scan = scan_report(prefix, w, budget, expected);
            AuditRow row;
            row.w = w;
            row.count_scan = scan.returns.size();
            row.count_geom = geom.returns.size();
            row.expected = expected;
            row.agree = geom.returns == scan.returns;
            table.all_agree = table.all_agree && row.agree;
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

AuditTable audit_scan_only(const SymbolSequence& seq, int max_len, std::size_t budget,
                           std::size_t expected) {
    if (max_len < 1) throw Error(Errc::invalid_argument, "audit needs max_len >= 1");
    std::vector<Symbol> prefix = seq.prefix(budget);
    AuditTable table;
    table.max_len = max_len;
    table.budget = budget;
    for (int n = 1; n <= max_len; ++n) {
        std::set<Word> words;
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= prefix.size(); ++i)
            words.insert(Word(prefix.begin() + static_cast<std::ptrdiff_t>(i),
                              prefix.begin() + static_cast<std::ptrdiff_t>(i) + n));
        for (const Word& w : words) {
            ReturnReport scan = scan_report(prefix, w, budget, expected);
            AuditRow row;
            row.w = w;
            row.count_scan = scan.returns.size();
            row.expected = expected;
            row.agree = scan.returns.size() == expected;
            table.all_agree = table.all_agree && row.agree;
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

}  // namespace retwords

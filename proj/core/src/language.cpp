#include "retwords/language.hpp"

#include <algorithm>
#include <sstream>

namespace retwords {

namespace {
const Scalar kZero(0);
const Scalar kOne(1);
}  // namespace

PartitionLevel partition_level(const IETransform& T, int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "partition level requires n >= 1");
    ensure_regularity(T, n);

    std::set<Scalar> pts(T.endpoints().begin(), T.endpoints().end());
    std::vector<Scalar> layer(T.endpoints().begin(), T.endpoints().end());
    for (int j = 1; j < n; ++j) {
        for (Scalar& p : layer) p = T.preimage_closure(p);
        pts.insert(layer.begin(), layer.end());
    }

    const std::size_t expected =
        static_cast<std::size_t>(n) * static_cast<std::size_t>(T.k() - 1) + 2;
    if (pts.size() != expected) {
        std::ostringstream os;
        os << "X^(" << n << ") has " << pts.size() << " points, expected " << expected
           << "; duplicate backward-orbit points contradict regularity";
        throw Error(Errc::regularity_violation, os.str());
    }

    PartitionLevel out;
    out.n = n;
    out.points.assign(pts.begin(), pts.end());
    out.cells.reserve(out.points.size() - 1);
    for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
        Interval cell{out.points[i], out.points[i + 1]};
        out.cells.push_back({cell, code_orbit(T, cell.mid(), static_cast<std::size_t>(n))});
    }
    return out;
}

FactorSet factors(const IETransform& T, int n) {
    if (n < 0) throw Error(Errc::invalid_argument, "factor length must be >= 0");
    FactorSet fs;
    fs.n = n;
    fs.source = FactorSource::geometric;
    if (n == 0) {
        fs.words.insert(Word{});
        return fs;
    }
    PartitionLevel level = partition_level(T, n);
    for (const auto& cell : level.cells) fs.words.insert(cell.word);
    if (fs.words.size() != level.cells.size())
        throw Error(Errc::regularity_violation,
                    "distinct cells of X^(n) produced identical words");
    return fs;
}

FactorSet factors_scan(const SymbolSequence& seq, int n, std::size_t prefix_len) {
    if (n < 0) throw Error(Errc::invalid_argument, "factor length must be >= 0");
    if (static_cast<std::size_t>(n) > prefix_len)
        throw Error(Errc::invalid_argument, "prefix shorter than factor length");
    FactorSet fs;
    fs.n = n;
    fs.source = FactorSource::scan;
    fs.prefix_len = prefix_len;
    if (n == 0) {
        fs.words.insert(Word{});
        return fs;
    }
    std::vector<Symbol> prefix = seq.prefix(prefix_len);
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= prefix.size(); ++i)
        fs.words.insert(Word(prefix.begin() + static_cast<std::ptrdiff_t>(i),
                             prefix.begin() + static_cast<std::ptrdiff_t>(i) + n));
    return fs;
}

ArcSet ArcSet::full_circle() {
    ArcSet s;
    s.pieces_.push_back({kZero, kOne});
    return s;
}

ArcSet ArcSet::arc(const Scalar& lo, const Scalar& len) {
    if (len.sign() <= 0) return {};
    if ((len - kOne).sign() >= 0) return full_circle();
    Scalar start = lo.mod1();
    Scalar end = start + len;
    ArcSet s;
    if ((end - kOne).sign() <= 0) {
        s.pieces_.push_back({start, end});
    } else {
        s.pieces_.push_back({kZero, end - kOne});
        s.pieces_.push_back({start, kOne});
    }
    s.normalize();
    return s;
}

void ArcSet::normalize() {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& p : pieces_) {
        if (p.empty()) continue;
        if (!merged.empty() && merged.back().hi == p.lo)
            merged.back().hi = p.hi;
        else
            merged.push_back(p);
    }
    pieces_ = std::move(merged);
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
    ArcSet out;
    for (const Interval& a : pieces_) {
        for (const Interval& b : other.pieces_) {
            Interval c{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
            if (!c.empty()) out.pieces_.push_back(c);
        }
    }
    out.normalize();
    return out;
}

ArcSet ArcSet::rotated(const Scalar& delta) const {
    ArcSet out;
    for (const Interval& p : pieces_) {
        ArcSet piece = ArcSet::arc(p.lo + delta, p.hi - p.lo);
        out.pieces_.insert(out.pieces_.end(), piece.pieces_.begin(), piece.pieces_.end());
    }
    out.normalize();
    return out;
}

bool ArcSet::contains(const Scalar& x) const {
    Scalar v = x.mod1();
    return std::any_of(pieces_.begin(), pieces_.end(),
                       [&](const Interval& p) { return p.contains_halfopen(v); });
}

Scalar ArcSet::total_length() const {
    Scalar total(0);
    for (const Interval& p : pieces_) total += p.length();
    return total;
}

int ArcSet::circular_components() const {
    if (pieces_.empty()) return 0;
    int count = static_cast<int>(pieces_.size());
    // pieces are disjoint, sorted and non-adjacent after normalize();
    // the only possible junction is across 0 ~ 1.
    if (count > 1 && pieces_.front().lo == kZero && pieces_.back().hi == kOne) --count;
    return count;
}

RotationFactorResult rotation_factor_test(const RotationCoding& rc, const Word& w) {
    if (!rc.irrational())
        throw Error(Errc::invalid_argument,
                    "membership by arc intersection requires an irrational angle; "
                    "use scanning for rational rotations");
    for (Symbol s : w) {
        if (s < 0 || s >= rc.p())
            throw Error(Errc::invalid_argument,
                        "letter " + std::to_string(s) + " outside alphabet 0.." +
                            std::to_string(rc.p() - 1));
    }

    // I(w) = intersection over j of R^{-j}(cell(w_j)); shifting by -j*alpha.
    ArcSet acc = ArcSet::full_circle();
    Scalar shift(0);
    for (Symbol s : w) {
        auto [lo, hi] = rc.cell_bounds(s);
        ArcSet cell = ArcSet::arc((lo - shift).mod1(), hi - lo);
        acc = acc.intersect(cell);
        if (acc.empty()) break;
        shift = (shift + rc.alpha()).mod1();
    }
    return {!acc.empty(), acc};
}

}  // namespace retwords

#pragma once

#include <set>
#include <vector>

#include "retwords/dynamics.hpp"
#include "retwords/scalar.hpp"
#include "retwords/words.hpp"

namespace retwords {

/// Half-open interval [lo, hi) with exact endpoints.
struct Interval {
    Scalar lo;
    Scalar hi;

    bool empty() const { return (hi - lo).sign() <= 0; }
    Scalar length() const { return hi - lo; }
    Scalar mid() const { return midpoint(lo, hi); }
    bool contains_halfopen(const Scalar& x) const {
        return (x - lo).sign() >= 0 && (x - hi).sign() < 0;
    }
    bool contains_closed(const Scalar& x) const {
        return (x - lo).sign() >= 0 && (x - hi).sign() <= 0;
    }
};

struct PartitionCell {
    Interval cell;
    Word word;  // n-step coding, constant on the cell
};

/**
 * The ordered endpoint set X^(n) = X^(1) u T^{-1}X^(1) u ... u T^{-n+1}X^(1)
 * together with its cells, each labelled by the coding of its midpoint.
 * For a regular IET this has n(k-1)+2 points and n(k-1)+1 cells.
 */
struct PartitionLevel {
    int n;
    std::vector<Scalar> points;
    std::vector<PartitionCell> cells;
};

/// Requires Keane certification at horizon >= n; a duplicate point in the
/// union contradicts regularity and raises Errc::regularity_violation.
PartitionLevel partition_level(const IETransform& T, int n);

enum class FactorSource { geometric, scan };

struct FactorSet {
    int n;
    std::set<Word> words;
    FactorSource source;
    std::size_t prefix_len = 0;  // scan only
};

/// All length-n factors of the coding, from the X^(n) cells (exact, complete).
FactorSet factors(const IETransform& T, int n);

/// All distinct length-n blocks of the first prefix_len symbols.
FactorSet factors_scan(const SymbolSequence& seq, int n, std::size_t prefix_len);

inline std::size_t complexity(const FactorSet& fs) { return fs.words.size(); }

/// A finite union of half-open circular arcs, kept as sorted disjoint
/// non-wrapping pieces inside [0,1].
class ArcSet {
public:
    static ArcSet full_circle();
    /// Arc of given length starting at lo (mod 1); wraps when lo+len > 1.
    static ArcSet arc(const Scalar& lo, const Scalar& len);

    bool empty() const { return pieces_.empty(); }
    const std::vector<Interval>& pieces() const { return pieces_; }

    ArcSet intersect(const ArcSet& other) const;
    /// Rotation of the whole set by delta (mod 1).
    ArcSet rotated(const Scalar& delta) const;

    bool contains(const Scalar& x) const;
    Scalar total_length() const;
    /// Number of connected components on the circle (pieces touching at 0~1
    /// count as one).
    int circular_components() const;

private:
    void normalize();
    std::vector<Interval> pieces_;
};

struct RotationFactorResult {
    bool factor;
    ArcSet witness;  // I(w) as a union of circular arcs
};

/// Lemma-style membership test: w is a factor of the rotation coding iff the
/// intersection of rotated cell preimages is nonempty. Requires an irrational
/// angle (for rational angles only scanning is meaningful).
RotationFactorResult rotation_factor_test(const RotationCoding& rc, const Word& w);

}  // namespace retwords

#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "retwords/scalar.hpp"
#include "retwords/words.hpp"

namespace retwords {

/**
 * Interval exchange transformation of [0,1) on k intervals.
 *
 * Given positive lengths summing to one and a permutation sigma (one-line
 * image list, 1-based), the map translates X_i = [a_i, a_{i+1}) onto the
 * sigma(i)-th interval of the rearranged partition. Translations are
 *   t_i = sum_{j: sigma(j) < sigma(i)} lambda_j - sum_{j < i} lambda_j.
 *
 * Immutable after construction. The Keane certification horizon is a cached
 * note (atomic), not part of the value.
 */
class IETransform {
public:
    IETransform(std::vector<Scalar> lengths, std::vector<int> sigma);

    IETransform(const IETransform& o);
    IETransform& operator=(const IETransform& o);

    int k() const { return static_cast<int>(lengths_.size()); }
    const std::vector<Scalar>& lengths() const { return lengths_; }
    const std::vector<int>& permutation() const { return sigma_; }
    /// a_1 = 0 < a_2 < ... < a_{k+1} = 1
    const std::vector<Scalar>& endpoints() const { return endpoints_; }
    /// breakpoints of the rearranged partition
    const std::vector<Scalar>& image_endpoints() const { return image_endpoints_; }
    const std::vector<Scalar>& translations() const { return translations_; }
    bool irreducible() const { return irreducible_; }

    /// 1-based letter of the interval containing x; requires x in [0,1).
    int interval_index(const Scalar& x) const;

    Scalar apply(const Scalar& x) const;
    Scalar apply_inverse(const Scalar& y) const;

    /// apply_inverse extended to y == 1 (right endpoint of the interval sent
    /// to the last slot); used by the backward-orbit machinery.
    Scalar preimage_closure(const Scalar& y) const;

    long certified_keane_horizon() const { return keane_horizon_.load(std::memory_order_relaxed); }
    void note_keane_pass(long horizon) const;

private:
    std::vector<Scalar> lengths_;
    std::vector<int> sigma_;      // sigma_[i-1] = slot of X_i
    std::vector<int> slot_src_;   // slot_src_[j-1] = i with sigma(i) = j
    std::vector<Scalar> endpoints_;
    std::vector<Scalar> image_endpoints_;
    std::vector<Scalar> translations_;
    bool irreducible_ = false;
    mutable std::atomic<long> keane_horizon_{0};
};

struct KeaneWitness {
    long n;  // iterate count with T^n a_i = a_j
    int i;
    int j;
};

struct KeaneReport {
    bool passed;
    long horizon;
    std::optional<KeaneWitness> witness;  // present for orbit-collision failures
    std::string note;                     // "reducible permutation" etc.
};

/// Iterates every interior endpoint up to `horizon` steps, testing exact
/// collision with interior endpoints. Reducible permutations fail immediately.
KeaneReport keane_check(const IETransform& T, long horizon);

/// Throws Errc::regularity_violation unless keane_check passes at `horizon`.
void ensure_regularity(const IETransform& T, long horizon);

/**
 * Coding of a circle rotation: angle alpha in (0,1), partition points
 * beta_0 < ... < beta_{p-1} in [0,1). The cell of letter j is
 * [beta_j, beta_{j+1}) with beta_p wrapping to beta_0; letters are 0-based.
 * Rational angles are accepted (scan-only use); the geometric operations
 * require an irrational angle.
 */
class RotationCoding {
public:
    RotationCoding(Scalar alpha, std::vector<Scalar> betas, Scalar x0);

    int p() const { return static_cast<int>(betas_.size()); }
    const Scalar& alpha() const { return alpha_; }
    const std::vector<Scalar>& betas() const { return betas_; }
    const Scalar& x0() const { return x0_; }
    bool irrational() const { return !alpha_.is_rational(); }

    int cell_index(const Scalar& x) const;
    Scalar rotate(const Scalar& x) const { return (x + alpha_).mod1(); }

    /// [lo, hi) of cell j; for the last cell hi = beta_0 + 1 (wraps past 1
    /// whenever beta_0 > 0).
    std::pair<Scalar, Scalar> cell_bounds(int j) const;
    Scalar cell_length(int j) const;

private:
    Scalar alpha_;
    std::vector<Scalar> betas_;
    Scalar x0_;
};

/**
 * Result of reducing a rotation coding to an interval exchange: the coding of
 * `start` under `iet` equals the rotation coding symbol-for-symbol after
 * applying letter_of_cell (rotation letter j -> IET letter letter_of_cell[j]).
 */
struct RotationReduction {
    IETransform iet;
    Scalar start;
    std::vector<int> letter_of_cell;
    int pivot_cell;  // index of the cell of length alpha that was moved to [0, alpha)
};

/// Requires some cell of length exactly alpha; otherwise throws
/// Errc::not_reducible. The produced permutation is the cycle (2 3 ... k 1).
RotationReduction to_iet(const RotationCoding& rc);

SymbolSequence coding_sequence(const IETransform& T, const Scalar& x0, std::string name = "iet");
SymbolSequence coding_sequence(const RotationCoding& rc, const Scalar& x0,
                               std::string name = "rotation");
inline SymbolSequence coding_sequence(const RotationCoding& rc) {
    return coding_sequence(rc, rc.x0());
}

Word code_orbit(const IETransform& T, const Scalar& x0, std::size_t n);
Word code_orbit(const RotationCoding& rc, const Scalar& x0, std::size_t n);

}  // namespace retwords

#include "retwords/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace retwords {

namespace {
const Scalar kZero(0);
const Scalar kOne(1);
}  // namespace

IETransform::IETransform(std::vector<Scalar> lengths, std::vector<int> sigma)
    : lengths_(std::move(lengths)), sigma_(std::move(sigma)) {
    const int k = static_cast<int>(lengths_.size());
    if (k < 1) throw Error(Errc::invalid_argument, "empty length vector");
    if (static_cast<int>(sigma_.size()) != k)
        throw Error(Errc::invalid_argument, "permutation size does not match interval count");

    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int v : sigma_) {
        if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
            throw Error(Errc::invalid_argument, "permutation is not a bijection of 1..k");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    slot_src_.assign(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= k; ++i) slot_src_[static_cast<std::size_t>(sigma_[i - 1] - 1)] = i;

    endpoints_.reserve(k + 1);
    endpoints_.push_back(kZero);
    for (const Scalar& l : lengths_) {
        if (l.sign() <= 0) throw Error(Errc::invalid_argument, "interval lengths must be positive");
        endpoints_.push_back(endpoints_.back() + l);
    }
    if (!(endpoints_.back() == kOne))
        throw Error(Errc::invalid_argument, "interval lengths must sum to exactly 1");

    image_endpoints_.reserve(k + 1);
    image_endpoints_.push_back(kZero);
    for (int j = 1; j <= k; ++j)
        image_endpoints_.push_back(image_endpoints_.back() +
                                   lengths_[static_cast<std::size_t>(slot_src_[j - 1] - 1)]);

    translations_.reserve(k);
    for (int i = 1; i <= k; ++i) {
        int slot = sigma_[i - 1];
        translations_.push_back(image_endpoints_[slot - 1] - endpoints_[i - 1]);
    }

    irreducible_ = true;
    for (int l = 1; l < k; ++l) {
        int max_image = 0;
        for (int i = 1; i <= l; ++i) max_image = std::max(max_image, sigma_[i - 1]);
        if (max_image == l) {
            irreducible_ = false;
            break;
        }
    }
}

IETransform::IETransform(const IETransform& o)
    : lengths_(o.lengths_),
      sigma_(o.sigma_),
      slot_src_(o.slot_src_),
      endpoints_(o.endpoints_),
      image_endpoints_(o.image_endpoints_),
      translations_(o.translations_),
      irreducible_(o.irreducible_),
      keane_horizon_(o.keane_horizon_.load(std::memory_order_relaxed)) {}

IETransform& IETransform::operator=(const IETransform& o) {
    if (this != &o) {
        lengths_ = o.lengths_;
        sigma_ = o.sigma_;
        slot_src_ = o.slot_src_;
        endpoints_ = o.endpoints_;
        image_endpoints_ = o.image_endpoints_;
        translations_ = o.translations_;
        irreducible_ = o.irreducible_;
        keane_horizon_.store(o.keane_horizon_.load(std::memory_order_relaxed),
                             std::memory_order_relaxed);
    }
    return *this;
}

int IETransform::interval_index(const Scalar& x) const {
    if (x.sign() < 0 || (x - kOne).sign() >= 0)
        throw Error(Errc::invalid_argument, "point " + x.str() + " outside [0,1)");
    int i = 1;
    while (i < k() && (x - endpoints_[i]).sign() >= 0) ++i;
    return i;
}

Scalar IETransform::apply(const Scalar& x) const {
    return x + translations_[static_cast<std::size_t>(interval_index(x) - 1)];
}

Scalar IETransform::apply_inverse(const Scalar& y) const {
    if (y.sign() < 0 || (y - kOne).sign() >= 0)
        throw Error(Errc::invalid_argument, "point " + y.str() + " outside [0,1)");
    int j = 1;
    while (j < k() && (y - image_endpoints_[j]).sign() >= 0) ++j;
    int i = slot_src_[static_cast<std::size_t>(j - 1)];
    return y - translations_[static_cast<std::size_t>(i - 1)];
}

Scalar IETransform::preimage_closure(const Scalar& y) const {
    if (y == kOne) {
        int i = slot_src_[static_cast<std::size_t>(k() - 1)];
        return endpoints_[static_cast<std::size_t>(i)];
    }
    return apply_inverse(y);
}

void IETransform::note_keane_pass(long horizon) const {
    long cur = keane_horizon_.load(std::memory_order_relaxed);
    while (cur < horizon &&
           !keane_horizon_.compare_exchange_weak(cur, horizon, std::memory_order_relaxed)) {
    }
}

KeaneReport keane_check(const IETransform& T, long horizon) {
    if (horizon < 1) throw Error(Errc::invalid_argument, "horizon must be >= 1");
    if (!T.irreducible()) return {false, horizon, std::nullopt, "reducible permutation"};

    const auto& a = T.endpoints();
    const int k = T.k();
    for (int i = 2; i <= k; ++i) {
        Scalar x = a[static_cast<std::size_t>(i - 1)];
        for (long n = 1; n <= horizon; ++n) {
            x = T.apply(x);
            for (int j = 2; j <= k; ++j) {
                if (x == a[static_cast<std::size_t>(j - 1)])
                    return {false, horizon, KeaneWitness{n, i, j}, "endpoint collision"};
            }
        }
    }
    T.note_keane_pass(horizon);
    return {true, horizon, std::nullopt, ""};
}

void ensure_regularity(const IETransform& T, long horizon) {
    if (T.certified_keane_horizon() >= horizon) return;
    KeaneReport r = keane_check(T, horizon);
    if (r.passed) return;
    std::ostringstream os;
    os << "Keane regularity check failed at horizon " << horizon;
    if (r.witness)
        os << ": T^" << r.witness->n << " a_" << r.witness->i << " = a_" << r.witness->j;
    if (!r.note.empty()) os << " (" << r.note << ")";
    throw Error(Errc::regularity_violation, os.str());
}

RotationCoding::RotationCoding(Scalar alpha, std::vector<Scalar> betas, Scalar x0)
    : alpha_(std::move(alpha)), betas_(std::move(betas)), x0_(std::move(x0)) {
    if (betas_.size() < 2) throw Error(Errc::invalid_argument, "need at least two partition points");
    if (alpha_.sign() <= 0 || (alpha_ - kOne).sign() >= 0)
        throw Error(Errc::invalid_argument, "angle must lie in (0,1)");
    for (std::size_t i = 0; i < betas_.size(); ++i) {
        if (betas_[i].sign() < 0 || (betas_[i] - kOne).sign() >= 0)
            throw Error(Errc::invalid_argument, "partition points must lie in [0,1)");
        if (i > 0 && (betas_[i] - betas_[i - 1]).sign() <= 0)
            throw Error(Errc::invalid_argument, "partition points must be strictly increasing");
    }
    if (x0_.sign() < 0 || (x0_ - kOne).sign() >= 0)
        throw Error(Errc::invalid_argument, "start point must lie in [0,1)");
}

int RotationCoding::cell_index(const Scalar& x) const {
    if (x.sign() < 0 || (x - kOne).sign() >= 0)
        throw Error(Errc::invalid_argument, "point " + x.str() + " outside [0,1)");
    if ((x - betas_[0]).sign() < 0) return p() - 1;  // wrap cell
    int j = p() - 1;
    while (j > 0 && (x - betas_[static_cast<std::size_t>(j)]).sign() < 0) --j;
    return j;
}

std::pair<Scalar, Scalar> RotationCoding::cell_bounds(int j) const {
    if (j < 0 || j >= p()) throw Error(Errc::invalid_argument, "cell index out of range");
    if (j + 1 < p()) return {betas_[static_cast<std::size_t>(j)], betas_[static_cast<std::size_t>(j + 1)]};
    return {betas_.back(), betas_[0] + kOne};
}

Scalar RotationCoding::cell_length(int j) const {
    auto [lo, hi] = cell_bounds(j);
    return hi - lo;
}

RotationReduction to_iet(const RotationCoding& rc) {
    const int p = rc.p();
    int pivot = -1;
    for (int j = 0; j < p; ++j) {
        if (rc.cell_length(j) == rc.alpha()) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0)
        throw Error(Errc::not_reducible,
                    "no partition cell has length exactly alpha; the geometric reduction "
                    "does not apply (scanning remains available)");

    const Scalar& betaK = rc.betas()[static_cast<std::size_t>(pivot)];
    // translate the circle by -betaK: cell K becomes [0, alpha), the others
    // follow in circular order; then translate by -alpha so the natural IET
    // partition appears, with the alpha-cell as the last letter.
    std::vector<Scalar> gamma(static_cast<std::size_t>(p));
    for (int m = 0; m < p; ++m)
        gamma[static_cast<std::size_t>(m)] =
            (rc.betas()[static_cast<std::size_t>((pivot + m) % p)] - betaK).mod1();

    std::vector<Scalar> lengths(static_cast<std::size_t>(p));
    for (int i = 1; i < p; ++i) {
        Scalar hi = (i + 1 < p) ? gamma[static_cast<std::size_t>(i + 1)] : kOne;
        lengths[static_cast<std::size_t>(i - 1)] = hi - gamma[static_cast<std::size_t>(i)];
    }
    lengths[static_cast<std::size_t>(p - 1)] = rc.alpha();

    std::vector<int> sigma(static_cast<std::size_t>(p));
    for (int i = 1; i < p; ++i) sigma[static_cast<std::size_t>(i - 1)] = i + 1;
    sigma[static_cast<std::size_t>(p - 1)] = 1;

    std::vector<int> letter_of_cell(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) {
        int m = (j - pivot + p) % p;
        letter_of_cell[static_cast<std::size_t>(j)] = (m == 0) ? p : m;
    }

    Scalar start = (rc.x0() - betaK - rc.alpha()).mod1();
    return RotationReduction{IETransform(std::move(lengths), std::move(sigma)), std::move(start),
                             std::move(letter_of_cell), pivot};
}

SymbolSequence coding_sequence(const IETransform& T, const Scalar& x0, std::string name) {
    if (x0.sign() < 0 || (x0 - kOne).sign() >= 0)
        throw Error(Errc::invalid_argument, "start point outside [0,1)");
    return SymbolSequence(std::move(name),
                          [T, cur = x0](std::vector<Symbol>& buf, std::size_t want) mutable {
                              while (buf.size() < want) {
                                  int i = T.interval_index(cur);
                                  buf.push_back(i);
                                  cur += T.translations()[static_cast<std::size_t>(i - 1)];
                              }
                          });
}

SymbolSequence coding_sequence(const RotationCoding& rc, const Scalar& x0, std::string name) {
    if (x0.sign() < 0 || (x0 - kOne).sign() >= 0)
        throw Error(Errc::invalid_argument, "start point outside [0,1)");
    return SymbolSequence(std::move(name),
                          [rc, cur = x0](std::vector<Symbol>& buf, std::size_t want) mutable {
                              while (buf.size() < want) {
                                  buf.push_back(rc.cell_index(cur));
                                  cur = rc.rotate(cur);
                              }
                          });
}

Word code_orbit(const IETransform& T, const Scalar& x0, std::size_t n) {
    return coding_sequence(T, x0).prefix(n);
}

Word code_orbit(const RotationCoding& rc, const Scalar& x0, std::size_t n) {
    return coding_sequence(rc, x0).prefix(n);
}

}  // namespace retwords

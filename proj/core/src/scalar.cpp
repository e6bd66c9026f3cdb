#include "retwords/scalar.hpp"

#include <cctype>
#include <sstream>

namespace retwords {

namespace {

bool square_free(unsigned long d) {
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

mpq_class parse_rational(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw Error(Errc::invalid_argument, "empty rational");
    try {
        mpq_class q(s, 10);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(Errc::invalid_argument, "bad rational: '" + std::string(text) + "'");
    }
}

std::string rational_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

Scalar::Scalar(mpq_class a, mpq_class b, unsigned long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ >= 2 && !square_free(d_))
        throw Error(Errc::invalid_argument, "radicand " + std::to_string(d_) + " is not square-free");
    canonicalize();
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

void Scalar::canonicalize() {
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    } else if (d_ == 0) {
        b_ = 0;
    }
    if (b_ == 0) d_ = 0;
}

unsigned long Scalar::merged_radicand(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw Error(Errc::radicand_mismatch, "cannot combine sqrt(" + std::to_string(x.d_) +
                                             ") with sqrt(" + std::to_string(y.d_) + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(a_ + o.a_, b_ + o.b_, merged_radicand(*this, o));
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(a_ - o.a_, b_ - o.b_, merged_radicand(*this, o));
}

Scalar Scalar::operator*(const Scalar& o) const {
    unsigned long d = merged_radicand(*this, o);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    mpq_class a = a_ * o.a_ + b_ * o.b_ * mpq_class(static_cast<unsigned long>(d));
    mpq_class b = a_ * o.b_ + o.a_ * b_;
    return Scalar(std::move(a), std::move(b), d);
}

int Scalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d (signs of squares decide)
    mpq_class diff = a_ * a_ - b_ * b_ * mpq_class(d_);
    int c = sgn(diff);
    return sa > 0 ? c : -c;
}

mpz_class Scalar::floor_int() const {
    if (b_ == 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        return q;
    }
    // Bracket sqrt(d) between root/2^96 and (root+1)/2^96, take the floor of
    // the rational lower bound, then refine with exact sign tests.
    constexpr unsigned kBits = 96;
    mpz_class scaled = mpz_class(d_);
    scaled <<= 2 * kBits;
    mpz_class root = sqrt(scaled);
    mpz_class denom = mpz_class(1) << kBits;
    mpq_class lo(root, denom), hi(root + 1, denom);
    lo.canonicalize();
    hi.canonicalize();
    mpq_class bound = a_ + b_ * (sgn(b_) > 0 ? lo : hi);  // <= value
    mpz_class m;
    mpz_fdiv_q(m.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    while ((*this - Scalar(mpq_class(m + 1))).sign() >= 0) ++m;
    while ((*this - Scalar(mpq_class(m))).sign() < 0) --m;
    return m;
}

Scalar Scalar::mod1() const { return *this - Scalar(mpq_class(floor_int())); }

std::string Scalar::str() const {
    if (d_ == 0) return rational_str(a_);
    std::string radical = rational_str(abs(b_)) + " sqrt(" + std::to_string(d_) + ")";
    if (b_ < 0) {
        if (a_ == 0) return "-" + radical;
        return rational_str(a_) + " - " + radical;
    }
    if (a_ == 0) return radical;
    return rational_str(a_) + " + " + radical;
}

double Scalar::approx() const {
    double v = a_.get_d();
    if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

Scalar Scalar::parse(std::string_view text) {
    // grammar: term (('+'|'-') term)?   with term := rational | [rational] 'sqrt(' uint ')'
    std::string s(text);
    auto sq = s.find("sqrt(");
    if (sq == std::string::npos) return Scalar(parse_rational(s));

    auto close = s.find(')', sq);
    if (close == std::string::npos)
        throw Error(Errc::invalid_argument, "unterminated sqrt( in '" + s + "'");
    unsigned long d = 0;
    try {
        d = std::stoul(s.substr(sq + 5, close - sq - 5));
    } catch (const std::exception&) {
        throw Error(Errc::invalid_argument, "bad radicand in '" + s + "'");
    }
    if (s.find_first_not_of(" \t", close + 1) != std::string::npos)
        throw Error(Errc::invalid_argument, "trailing text in '" + s + "'");

    // split the part before sqrt( into "<a> +/- <coef>" or "<coef>"
    std::string head = s.substr(0, sq);
    // find the sign that separates the rational term from the coefficient:
    // last '+' or '-' that is not a leading sign and not inside a fraction.
    std::size_t split = std::string::npos;
    int depth = 0;
    for (std::size_t i = head.size(); i-- > 0;) {
        char c = head[i];
        (void)depth;
        if ((c == '+' || c == '-') && i > 0) {
            // a sign directly after '/', 'e' etc. cannot occur in this grammar;
            // any interior sign splits the two terms
            std::size_t prev = head.find_last_not_of(" \t", i - 1);
            if (prev != std::string::npos && (std::isdigit(static_cast<unsigned char>(head[prev])) ||
                                              head[prev] == '/')) {
                split = i;
                break;
            }
        }
    }
    mpq_class a(0), b(1);
    if (split == std::string::npos) {
        std::string coef = head;
        auto nonspace = coef.find_first_not_of(" \t");
        if (nonspace == std::string::npos) {
            b = 1;
        } else if (coef.find_first_not_of(" \t-") == std::string::npos) {
            b = -1;
        } else {
            b = parse_rational(coef);
        }
    } else {
        a = parse_rational(head.substr(0, split));
        char sign = head[split];
        std::string coef = head.substr(split + 1);
        if (coef.find_first_not_of(" \t") == std::string::npos)
            b = 1;
        else
            b = parse_rational(coef);
        if (sign == '-') b = -b;
    }
    return Scalar(std::move(a), std::move(b), d);
}

}  // namespace retwords

#ifndef KSCHUR_RAT_QT_HPP
#define KSCHUR_RAT_QT_HPP

#include <optional>
#include <utility>

#include "kschur/poly_qt.hpp"

namespace kschur {

// Rational function in q, t: a pair of coprime-after-reduction integer
// polynomials with nonzero denominator.  Equality goes through
// cross-multiplication; no canonical form is assumed anywhere.
class rat_qt {
public:
    rat_qt() : num_(), den_(1) {}
    rat_qt(const bigint& c) : num_(c), den_(1) {}
    rat_qt(long c) : num_(bigint(c)), den_(1) {}
    rat_qt(poly_qt n) : num_(std::move(n)), den_(1) {}
    rat_qt(poly_qt n, poly_qt d);

    static rat_qt from_laurent(const laurent_t& a);
    static rat_qt fraction(const bigint& n, const bigint& d);

    const poly_qt& num() const { return num_; }
    const poly_qt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    rat_qt operator-() const;
    friend rat_qt operator+(const rat_qt& a, const rat_qt& b);
    friend rat_qt operator-(const rat_qt& a, const rat_qt& b);
    friend rat_qt operator*(const rat_qt& a, const rat_qt& b);
    friend rat_qt operator/(const rat_qt& a, const rat_qt& b); // throws on /0
    rat_qt& operator+=(const rat_qt& o) { return *this = *this + o; }
    rat_qt& operator-=(const rat_qt& o) { return *this = *this - o; }
    rat_qt& operator*=(const rat_qt& o) { return *this = *this * o; }
    rat_qt& operator/=(const rat_qt& o) { return *this = *this / o; }

    // a/b == c/d  iff  a*d == c*b.
    friend bool operator==(const rat_qt& a, const rat_qt& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const rat_qt& a, const rat_qt& b) { return !(a == b); }

    // Exact conversion out; throws not_polynomial / unsupported_ring on failure.
    poly_qt to_poly() const;
    laurent_t to_laurent() const;
    std::optional<poly_qt> try_to_poly() const;
    std::optional<laurent_t> try_to_laurent() const;

    rat_qt subst_t_inv() const; // t -> 1/t

private:
    void normalize();
    poly_qt num_, den_;
};

} // namespace kschur

#endif

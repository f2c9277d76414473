#include "kschur/rat_qt.hpp"

#include "kschur/errors.hpp"

namespace kschur {

rat_qt::rat_qt(poly_qt n, poly_qt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw invalid_input("rat_qt: zero denominator");
    normalize();
}

rat_qt rat_qt::from_laurent(const laurent_t& a) {
    int shift = a.min_exp() < 0 ? -a.min_exp() : 0;
    poly_qt n;
    for (const auto& [e, c] : a.terms()) n.add_term(0, e + shift, c);
    return rat_qt(std::move(n), poly_qt::monomial(0, shift));
}

rat_qt rat_qt::fraction(const bigint& n, const bigint& d) {
    return rat_qt(poly_qt(n), poly_qt(d));
}

// Reduction keeps intermediate Gram-Schmidt chains from blowing up; values
// are unchanged (equality is by cross-multiplication).
void rat_qt::normalize() {
    if (num_.is_zero()) {
        den_ = poly_qt(1);
        return;
    }
    if (!den_.is_one()) {
        poly_qt g = poly_qt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *poly_qt::divide_exact(num_, g);
            den_ = *poly_qt::divide_exact(den_, g);
        }
        bigint cn = num_.content(), cd = den_.content();
        bigint ci = gcd(cn, cd);
        if (ci > 1) {
            num_.divide_content(ci);
            den_.divide_content(ci);
        }
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

rat_qt rat_qt::operator-() const {
    rat_qt r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

rat_qt operator+(const rat_qt& a, const rat_qt& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return rat_qt(a.num_ + b.num_, a.den_);
    return rat_qt(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

rat_qt operator-(const rat_qt& a, const rat_qt& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return rat_qt(a.num_ - b.num_, a.den_);
    return rat_qt(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

rat_qt operator*(const rat_qt& a, const rat_qt& b) {
    if (a.is_zero() || b.is_zero()) return rat_qt();
    return rat_qt(a.num_ * b.num_, a.den_ * b.den_);
}

rat_qt operator/(const rat_qt& a, const rat_qt& b) {
    if (b.is_zero()) throw invalid_input("rat_qt: division by zero");
    if (a.is_zero()) return rat_qt();
    return rat_qt(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<poly_qt> rat_qt::try_to_poly() const {
    return poly_qt::divide_exact(num_, den_);
}

poly_qt rat_qt::to_poly() const {
    auto p = try_to_poly();
    if (!p) throw not_polynomial("rat_qt value is not a polynomial");
    return *p;
}

std::optional<laurent_t> rat_qt::try_to_laurent() const {
    // After reduction a Laurent value has monomial denominator c * q^a t^b
    // with a = 0; divide term by term.
    if (!den_.is_monomial()) return std::nullopt;
    qt_exp de = den_.leading_exp();
    bigint dc = den_.leading_coeff();
    laurent_t r;
    for (const auto& [e, c] : num_.terms()) {
        if (e.q != de.q) return std::nullopt;
        if (c % dc != 0) return std::nullopt;
        r.add_term(e.t - de.t, c / dc);
    }
    return r;
}

laurent_t rat_qt::to_laurent() const {
    auto l = try_to_laurent();
    if (!l) throw unsupported_ring("rat_qt value is not a Laurent polynomial in t");
    return *l;
}

rat_qt rat_qt::subst_t_inv() const {
    int d = std::max(num_.t_degree(), den_.t_degree());
    poly_qt n, dn;
    for (const auto& [e, c] : num_.terms()) n.add_term(e.q, d - e.t, c);
    for (const auto& [e, c] : den_.terms()) dn.add_term(e.q, d - e.t, c);
    return rat_qt(std::move(n), std::move(dn));
}

} // namespace kschur

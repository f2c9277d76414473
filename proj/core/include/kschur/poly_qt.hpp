#ifndef KSCHUR_POLY_QT_HPP
#define KSCHUR_POLY_QT_HPP

#include <map>
#include <optional>
#include <utility>

#include "kschur/bigint.hpp"
#include "kschur/laurent.hpp"

namespace kschur {

// Monomial exponent pair q^q_exp t^t_exp, both nonnegative.
struct qt_exp {
    int q = 0;
    int t = 0;
    friend bool operator==(const qt_exp&, const qt_exp&) = default;
};

// Graded lexicographic order with q > t; the map's largest key is the
// leading monomial used for sign normalization.
struct grlex_less {
    bool operator()(const qt_exp& a, const qt_exp& b) const {
        int da = a.q + a.t, db = b.q + b.t;
        if (da != db) return da < db;
        return a.q < b.q;
    }
};

// Sparse bivariate polynomial in q, t over the integers, nonnegative
// exponents, no stored zero coefficients.
class poly_qt {
public:
    poly_qt() = default;
    poly_qt(const bigint& c) {
        if (c != 0) coeffs_[{0, 0}] = c;
    }
    poly_qt(long c) : poly_qt(bigint(c)) {}

    static poly_qt monomial(int qe, int te, bigint c = bigint(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == qt_exp{0, 0} &&
               coeffs_.begin()->second == 1;
    }
    bool is_monomial() const { return coeffs_.size() == 1; }
    bool is_constant() const {
        return coeffs_.empty() ||
               (coeffs_.size() == 1 && coeffs_.begin()->first == qt_exp{0, 0});
    }

    const std::map<qt_exp, bigint, grlex_less>& terms() const { return coeffs_; }

    bigint coeff(int qe, int te) const {
        auto it = coeffs_.find({qe, te});
        return it == coeffs_.end() ? bigint(0) : it->second;
    }

    void add_term(int qe, int te, const bigint& c);

    poly_qt& operator+=(const poly_qt& o);
    poly_qt& operator-=(const poly_qt& o);
    friend poly_qt operator+(poly_qt a, const poly_qt& b) { return a += b; }
    friend poly_qt operator-(poly_qt a, const poly_qt& b) { return a -= b; }
    friend poly_qt operator*(const poly_qt& a, const poly_qt& b);
    poly_qt& operator*=(const poly_qt& o) { return *this = *this * o; }
    poly_qt operator-() const;

    friend bool operator==(const poly_qt& a, const poly_qt& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const poly_qt& a, const poly_qt& b) {
        return !(a == b);
    }

    // Leading coefficient under grlex with q > t; 0 for the zero polynomial.
    bigint leading_coeff() const {
        return coeffs_.empty() ? bigint(0) : coeffs_.rbegin()->second;
    }
    qt_exp leading_exp() const {
        return coeffs_.empty() ? qt_exp{0, 0} : coeffs_.rbegin()->first;
    }

    // gcd of all integer coefficients, nonnegative; 0 for zero.
    bigint content() const;
    void divide_content(const bigint& g);

    int q_degree() const;
    int t_degree() const;

    bool nonnegative() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    // Exact division; nullopt when b does not divide a over Z[q,t].
    static std::optional<poly_qt> divide_exact(const poly_qt& a, const poly_qt& b);

    // Polynomial gcd via primitive PRS on Z[t][q]; result has positive
    // leading coefficient and content equal to gcd of the contents.
    static poly_qt gcd(const poly_qt& a, const poly_qt& b);

    // Evaluations used by the verification suite.
    laurent_t at_q0() const;        // q -> 0, leaves a polynomial in t
    laurent_t at_q_equals_t() const; // q -> t
    bigint at_q1_t1() const;        // q -> 1, t -> 1

    static poly_qt from_laurent(const laurent_t& a); // requires exponents >= 0
    std::optional<laurent_t> to_laurent() const;     // requires q-degree 0

private:
    std::map<qt_exp, bigint, grlex_less> coeffs_;
};

} // namespace kschur

#endif

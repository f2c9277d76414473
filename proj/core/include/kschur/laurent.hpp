#ifndef KSCHUR_LAURENT_HPP
#define KSCHUR_LAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "kschur/bigint.hpp"

namespace kschur {

// Sparse Laurent polynomial in t over the integers.  Canonical form: the
// exponent map never stores a zero coefficient, so operator== on the map is
// value equality.
class laurent_t {
public:
    laurent_t() = default;
    laurent_t(const bigint& c) {
        if (c != 0) coeffs_[0] = c;
    }
    laurent_t(long c) : laurent_t(bigint(c)) {}

    static laurent_t t_power(int e, bigint c = bigint(1)) {
        laurent_t r;
        if (c != 0) r.coeffs_[e] = std::move(c);
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }

    // Single term t^e with a unit-or-not coefficient; {exponent, coefficient}.
    bool is_monomial() const { return coeffs_.size() == 1; }

    const std::map<int, bigint>& terms() const { return coeffs_; }

    bigint coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? bigint(0) : it->second;
    }

    void add_term(int e, const bigint& c) {
        if (c == 0) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    laurent_t& operator+=(const laurent_t& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    laurent_t& operator-=(const laurent_t& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend laurent_t operator+(laurent_t a, const laurent_t& b) { return a += b; }
    friend laurent_t operator-(laurent_t a, const laurent_t& b) { return a -= b; }

    friend laurent_t operator*(const laurent_t& a, const laurent_t& b) {
        laurent_t r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    laurent_t& operator*=(const laurent_t& o) { return *this = *this * o; }

    laurent_t operator-() const {
        laurent_t r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend bool operator==(const laurent_t& a, const laurent_t& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const laurent_t& a, const laurent_t& b) {
        return !(a == b);
    }
    friend bool operator<(const laurent_t& a, const laurent_t& b) {
        return a.coeffs_ < b.coeffs_;
    }

    // t -> 1: sum of coefficients.
    bigint at_t1() const {
        bigint s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    // t -> 1/t: negate every exponent.  An involution.
    laurent_t invert_t() const {
        laurent_t r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    // True when every coefficient is nonnegative (membership in N[t, 1/t]).
    bool nonnegative() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    // Exactly one term and its coefficient is 1, i.e. a power t^e.
    bool is_unit_t_power() const {
        return coeffs_.size() == 1 && coeffs_.begin()->second == 1;
    }

private:
    std::map<int, bigint> coeffs_;
};

} // namespace kschur

#endif

#ifndef KSCHUR_EXPANSION_HPP
#define KSCHUR_EXPANSION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "kschur/bigint.hpp"
#include "kschur/laurent.hpp"
#include "kschur/partition.hpp"
#include "kschur/poly_qt.hpp"
#include "kschur/rat_qt.hpp"

namespace kschur {

enum class basis {
    monomial,
    elementary,
    homogeneous,
    power,
    schur,
    hall_littlewood,
    k_split,
    k_schur,
    macdonald_j,
    macdonald_h,
};

// k accompanies the k-indexed bases and is 0 otherwise.
struct basis_tag {
    basis kind = basis::schur;
    int k = 0;
    friend bool operator==(const basis_tag&, const basis_tag&) = default;
};

inline bool is_k_indexed(basis b) {
    return b == basis::k_split || b == basis::k_schur;
}

std::string basis_name(basis b);        // "SCHUR", "KSPLIT", ...
basis basis_from_name(const std::string& name);

// Ring identification for the four coefficient rings.
template <typename R> struct ring_of;
template <> struct ring_of<bigint> {
    static constexpr const char* name = "INT";
};
template <> struct ring_of<laurent_t> {
    static constexpr const char* name = "LAURENT_T";
};
template <> struct ring_of<poly_qt> {
    static constexpr const char* name = "POLY_QT";
};
template <> struct ring_of<rat_qt> {
    static constexpr const char* name = "RAT_QT";
};

// Basis-tagged sparse linear combination of partitions: the universal
// symmetric-function value.  Immutable by convention once built; all
// operations return fresh values.
template <typename R>
class expansion {
public:
    expansion() = default;
    explicit expansion(basis_tag tag) : tag_(tag) {}

    static expansion unit(basis_tag tag) {
        expansion e(tag);
        e.add_term(partition(), R(1));
        return e;
    }
    static expansion single(basis_tag tag, const partition& p, R c = R(1)) {
        expansion e(tag);
        e.add_term(p, std::move(c));
        return e;
    }

    const basis_tag& tag() const { return tag_; }
    void set_tag(basis_tag t) { tag_ = t; }

    const std::map<partition, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    R coeff(const partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add_term(const partition& p, const R& c) {
        if (c == R(0)) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, c);
        } else {
            it->second = it->second + c;
            if (it->second == R(0)) terms_.erase(it);
        }
    }

    expansion& operator+=(const expansion& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }
    expansion& operator-=(const expansion& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, -c);
        return *this;
    }
    friend expansion operator+(expansion a, const expansion& b) { return a += b; }
    friend expansion operator-(expansion a, const expansion& b) { return a -= b; }

    expansion operator-() const {
        expansion r(tag_);
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }

    friend expansion operator*(const R& s, const expansion& e) {
        expansion r(e.tag_);
        for (const auto& [p, c] : e.terms_) r.add_term(p, s * c);
        return r;
    }

    friend bool operator==(const expansion& a, const expansion& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const expansion& a, const expansion& b) {
        return !(a == b);
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [p, c] : terms_) d = std::max(d, p.degree());
        return d;
    }
    bool homogeneous_of(int d) const {
        for (const auto& [p, c] : terms_)
            if (p.degree() != d) return false;
        return true;
    }
    expansion component(int d) const {
        expansion r(tag_);
        for (const auto& [p, c] : terms_)
            if (p.degree() == d) r.terms_.emplace(p, c);
        return r;
    }
    // Degrees present, ascending.
    std::vector<int> degrees() const {
        std::vector<int> ds;
        for (const auto& [p, c] : terms_) {
            int d = p.degree();
            if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    }

private:
    basis_tag tag_;
    std::map<partition, R> terms_;
};

// Ring widenings; narrowing is always an explicit checked call.
inline laurent_t widen_laurent(const bigint& c) { return laurent_t(c); }
inline poly_qt widen_poly(const bigint& c) { return poly_qt(c); }
inline rat_qt widen_rat(const bigint& c) { return rat_qt(c); }
inline rat_qt widen_rat(const laurent_t& c) { return rat_qt::from_laurent(c); }
inline rat_qt widen_rat(const poly_qt& c) { return rat_qt(c); }

template <typename To, typename From, typename F>
expansion<To> map_coeffs(const expansion<From>& e, F&& f) {
    expansion<To> r(e.tag());
    for (const auto& [p, c] : e.terms()) r.add_term(p, f(c));
    return r;
}

inline expansion<rat_qt> to_rat(const expansion<laurent_t>& e) {
    return map_coeffs<rat_qt>(e, [](const laurent_t& c) { return widen_rat(c); });
}
inline expansion<rat_qt> to_rat(const expansion<poly_qt>& e) {
    return map_coeffs<rat_qt>(e, [](const poly_qt& c) { return widen_rat(c); });
}
inline expansion<rat_qt> to_rat(const expansion<bigint>& e) {
    return map_coeffs<rat_qt>(e, [](const bigint& c) { return widen_rat(c); });
}
inline expansion<laurent_t> to_laurent(const expansion<bigint>& e) {
    return map_coeffs<laurent_t>(e, [](const bigint& c) { return laurent_t(c); });
}

// Checked narrowings; throw when a coefficient does not fit.
expansion<laurent_t> narrow_to_laurent(const expansion<rat_qt>& e);
expansion<poly_qt> narrow_to_poly(const expansion<rat_qt>& e);
expansion<bigint> narrow_to_int(const expansion<laurent_t>& e);

// t -> 1 on every coefficient.
expansion<bigint> specialize_t1(const expansion<laurent_t>& e);

} // namespace kschur

#endif

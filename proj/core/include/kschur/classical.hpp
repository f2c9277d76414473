#ifndef KSCHUR_CLASSICAL_HPP
#define KSCHUR_CLASSICAL_HPP

#include <utility>

#include "kschur/errors.hpp"
#include "kschur/expansion.hpp"
#include "kschur/lr.hpp"

namespace kschur {

namespace detail {

template <typename R>
R from_int(const bigint& c) {
    return R(c);
}

template <typename R>
void require_basis(const expansion<R>& f, basis b, const char* who) {
    if (f.tag().kind != b)
        throw invalid_input(std::string(who) + ": expansion not in the expected basis");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Schur-basis operations
// ---------------------------------------------------------------------------

// Bilinear extension of s_lam * s_mu via the Littlewood-Richardson rule.
template <typename R>
expansion<R> schur_multiply(const expansion<R>& f, const expansion<R>& g) {
    detail::require_basis(f, basis::schur, "schur_multiply");
    detail::require_basis(g, basis::schur, "schur_multiply");
    expansion<R> out(f.tag());
    for (const auto& [lam, a] : f.terms())
        for (const auto& [mu, b] : g.terms()) {
            R ab = a * b;
            for (const auto& [rho, c] : schur_product(lam, mu))
                out.add_term(rho, ab * detail::from_int<R>(c));
        }
    return out;
}

// h_r (horizontal) or e_r (vertical) Pieri multiplication.
template <typename R>
expansion<R> pieri(const expansion<R>& f, int r, strip_kind kind) {
    detail::require_basis(f, basis::schur, "pieri");
    if (r < 0) throw invalid_input("pieri: negative strip size");
    if (r == 0) return f;
    expansion<R> out(f.tag());
    for (const auto& [lam, c] : f.terms())
        for (const auto& mu : strip_additions(lam, r, kind)) out.add_term(mu, c);
    return out;
}

// s_mu^perp f (skewing), zero on terms not containing mu.
template <typename R>
expansion<R> skew_by(const partition& mu, const expansion<R>& f) {
    detail::require_basis(f, basis::schur, "skew_by");
    expansion<R> out(f.tag());
    for (const auto& [lam, c] : f.terms())
        for (const auto& [nu, n] : skew_expand(lam, mu))
            out.add_term(nu, c * detail::from_int<R>(n));
    return out;
}

// g^perp f for arbitrary g given in the Schur basis.
template <typename R>
expansion<R> skew_perp(const expansion<R>& g, const expansion<R>& f) {
    detail::require_basis(g, basis::schur, "skew_perp");
    expansion<R> out(f.tag());
    for (const auto& [mu, c] : g.terms()) {
        expansion<R> part = skew_by(mu, f);
        for (const auto& [nu, v] : part.terms()) out.add_term(nu, c * v);
    }
    return out;
}

// Coefficients c^lam_{mu,rho} of s_lam[X+Y].
std::map<std::pair<partition, partition>, bigint> coproduct(const partition& lam);

// Hall scalar product (Schur functions orthonormal).
template <typename R>
R scalar_hall(const expansion<R>& f, const expansion<R>& g) {
    detail::require_basis(f, basis::schur, "scalar_hall");
    detail::require_basis(g, basis::schur, "scalar_hall");
    R out(0);
    for (const auto& [lam, a] : f.terms()) {
        R b = g.coeff(lam);
        if (!(b == R(0))) out = out + a * b;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Basis conversions among M, E, H, P, SCHUR
// ---------------------------------------------------------------------------

namespace detail {

template <typename R>
expansion<R> h_basis_to_schur(const expansion<R>& f) {
    expansion<R> out(basis_tag{basis::schur, 0});
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, k] : homogeneous_in_schur(lam))
            out.add_term(mu, c * from_int<R>(k));
    return out;
}

template <typename R>
expansion<R> e_basis_to_schur(const expansion<R>& f) {
    expansion<R> out(basis_tag{basis::schur, 0});
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, k] : elementary_in_schur(lam))
            out.add_term(mu, c * from_int<R>(k));
    return out;
}

template <typename R>
expansion<R> schur_to_h_basis(const expansion<R>& f) {
    expansion<R> out(basis_tag{basis::homogeneous, 0});
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, k] : jacobi_trudi_h(lam)) out.add_term(mu, c * from_int<R>(k));
    return out;
}

template <typename R>
expansion<R> schur_to_e_basis(const expansion<R>& f) {
    expansion<R> out(basis_tag{basis::elementary, 0});
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, k] : jacobi_trudi_e(lam)) out.add_term(mu, c * from_int<R>(k));
    return out;
}

template <typename R>
expansion<R> schur_to_monomial(const expansion<R>& f) {
    expansion<R> out(basis_tag{basis::monomial, 0});
    for (int d : f.degrees()) {
        expansion<R> comp = f.component(d);
        for (const auto& mu : partitions_of(d)) {
            // <f, h_mu> = sum_lam f_lam K_{lam,mu}
            R c(0);
            const auto& kostka = homogeneous_in_schur(mu);
            for (const auto& [lam, a] : comp.terms()) {
                auto it = kostka.find(lam);
                if (it != kostka.end()) c = c + a * from_int<R>(it->second);
            }
            out.add_term(mu, c);
        }
    }
    return out;
}

template <typename R>
expansion<R> monomial_to_schur(const expansion<R>& f) {
    expansion<R> out(basis_tag{basis::schur, 0});
    for (int d : f.degrees()) {
        // unitriangular solve against the monomial expansions of s_mu,
        // eliminating from the dominance-largest index downward
        std::map<partition, R> residual;
        for (const auto& [p, c] : f.component(d).terms()) residual.emplace(p, c);
        auto candidates = partitions_of(d);
        for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
            const partition& mu = *it;
            auto rit = residual.find(mu);
            if (rit == residual.end() || rit->second == R(0)) continue;
            R d_mu = rit->second;
            // subtract d_mu * (monomial expansion of s_mu)
            for (const auto& nu : partitions_of(d)) {
                auto kit = homogeneous_in_schur(nu).find(mu);
                if (kit == homogeneous_in_schur(nu).end()) continue;
                auto& slot = residual[nu];
                slot = slot - d_mu * from_int<R>(kit->second);
                if (slot == R(0)) residual.erase(nu);
            }
            out.add_term(mu, d_mu);
        }
        if (!residual.empty())
            throw not_in_subspace("monomial_to_schur: residual after solve");
    }
    return out;
}

template <typename R>
expansion<R> p_basis_to_h(const expansion<R>& f) {
    expansion<R> out(basis_tag{basis::homogeneous, 0});
    for (const auto& [rho, c] : f.terms()) {
        // p_rho = prod p_{rho_i}, each an integer h-combination
        std::map<partition, bigint> acc;
        acc.emplace(partition(), 1);
        for (int part : rho.parts()) {
            std::map<partition, bigint> next;
            for (const auto& [mu, a] : acc)
                for (const auto& [nu, b] : power_in_h(part))
                    next[partition::union_parts(mu, nu)] += a * b;
            acc = std::move(next);
        }
        for (const auto& [mu, a] : acc) out.add_term(mu, c * from_int<R>(a));
    }
    return out;
}

expansion<rat_qt> h_basis_to_p(const expansion<rat_qt>& f);

} // namespace detail

// Conversion router for the classical bases.  P-basis conversions require
// RAT_QT coefficients (the transition matrices are rational); everything
// else is integral and works over any coefficient ring.
template <typename R>
expansion<R> to_basis_classical(const expansion<R>& f, basis target) {
    basis src = f.tag().kind;
    auto check_classical = [](basis b) {
        if (b != basis::monomial && b != basis::elementary && b != basis::homogeneous &&
            b != basis::power && b != basis::schur)
            throw unsupported_conversion("to_basis_classical: non-classical basis");
    };
    check_classical(src);
    check_classical(target);
    if (src == target) return f;

    if (src == basis::power || target == basis::power) {
        if constexpr (!std::is_same_v<R, rat_qt>) {
            throw unsupported_ring("P-basis conversions need RAT_QT coefficients");
        } else {
            if (src == basis::power) {
                expansion<rat_qt> h = detail::p_basis_to_h(f);
                return target == basis::homogeneous ? h : to_basis_classical(h, target);
            }
            expansion<rat_qt> h =
                src == basis::homogeneous ? f : to_basis_classical(f, basis::homogeneous);
            return detail::h_basis_to_p(h);
        }
    }

    expansion<R> s(f);
    switch (src) {
        case basis::schur: break;
        case basis::homogeneous: s = detail::h_basis_to_schur(f); break;
        case basis::elementary: s = detail::e_basis_to_schur(f); break;
        case basis::monomial: s = detail::monomial_to_schur(f); break;
        default: break;
    }
    switch (target) {
        case basis::schur: return s;
        case basis::homogeneous: return detail::schur_to_h_basis(s);
        case basis::elementary: return detail::schur_to_e_basis(s);
        case basis::monomial: return detail::schur_to_monomial(s);
        default: break;
    }
    throw unsupported_conversion("to_basis_classical: unreachable");
}

// Macdonald q,t scalar product; both inputs in the Schur basis.
rat_qt scalar_qt(const expansion<rat_qt>& f, const expansion<rat_qt>& g);

} // namespace kschur

#endif

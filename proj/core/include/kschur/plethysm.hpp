#ifndef KSCHUR_PLETHYSM_HPP
#define KSCHUR_PLETHYSM_HPP

#include "kschur/classical.hpp"

namespace kschur {

// Alphabet substitutions: the power sum p_r maps to, respectively,
// p_r/(1-t^r), p_r*(t^r-1), (-1)^r p_r, t^r p_r, p_r*(1-t^r).
enum class alphabet_sub {
    x_over_one_minus_t,
    x_times_t_minus_one,
    minus_x,
    t_times_x,
    one_minus_t_inverse,
};

// Route through the power-sum basis, scale, and convert back to the input's
// basis tag.  Full generality lives at RAT_QT.
expansion<rat_qt> plethystic_substitute(const expansion<rat_qt>& f, alphabet_sub sub);

// Convenience for t-polynomial inputs: widen, substitute, narrow.  Throws
// unsupported_ring when the result leaves Z[t,1/t] (e.g. X/(1-t)).
expansion<laurent_t> plethystic_substitute(const expansion<laurent_t>& f, alphabet_sub sub);

// The involution omega.  On SCHUR it conjugates indices, on H/E it swaps the
// basis tag, on P it scales p_rho by (-1)^(|rho|-l(rho)).
template <typename R>
expansion<R> omega(const expansion<R>& f) {
    switch (f.tag().kind) {
        case basis::schur: {
            expansion<R> out(f.tag());
            for (const auto& [lam, c] : f.terms()) out.add_term(lam.conjugate(), c);
            return out;
        }
        case basis::homogeneous: {
            expansion<R> out(f);
            out.set_tag(basis_tag{basis::elementary, 0});
            return out;
        }
        case basis::elementary: {
            expansion<R> out(f);
            out.set_tag(basis_tag{basis::homogeneous, 0});
            return out;
        }
        case basis::power: {
            expansion<R> out(f.tag());
            for (const auto& [rho, c] : f.terms()) {
                int sign = (rho.degree() - rho.length()) % 2 ? -1 : 1;
                out.add_term(rho, sign > 0 ? c : -c);
            }
            return out;
        }
        default:
            throw unsupported_conversion("omega: convert to a classical basis first");
    }
}

// Twisted involution omega_t: apply omega, then t -> 1/t in every coefficient.
expansion<laurent_t> omega_t(const expansion<laurent_t>& f);
expansion<rat_qt> omega_t(const expansion<rat_qt>& f);

} // namespace kschur

#endif

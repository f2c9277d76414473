#include "kschur/plethysm.hpp"

namespace kschur {

namespace {

rat_qt sub_factor(alphabet_sub sub, int r) {
    poly_qt one_minus_tr(1);
    one_minus_tr.add_term(0, r, bigint(-1));
    switch (sub) {
        case alphabet_sub::x_over_one_minus_t:
            return rat_qt(poly_qt(1), one_minus_tr);
        case alphabet_sub::x_times_t_minus_one:
            return rat_qt(-one_minus_tr);
        case alphabet_sub::minus_x:
            return rat_qt(bigint(r % 2 ? -1 : 1));
        case alphabet_sub::t_times_x:
            return rat_qt(poly_qt::monomial(0, r));
        case alphabet_sub::one_minus_t_inverse:
            return rat_qt(one_minus_tr);
    }
    throw invalid_input("plethystic_substitute: unknown substitution");
}

} // namespace

expansion<rat_qt> plethystic_substitute(const expansion<rat_qt>& f, alphabet_sub sub) {
    basis original = f.tag().kind;
    expansion<rat_qt> p = to_basis_classical(f, basis::power);
    expansion<rat_qt> scaled(p.tag());
    for (const auto& [rho, c] : p.terms()) {
        rat_qt factor(1);
        for (int part : rho.parts()) factor *= sub_factor(sub, part);
        scaled.add_term(rho, c * factor);
    }
    return to_basis_classical(scaled, original);
}

expansion<laurent_t> plethystic_substitute(const expansion<laurent_t>& f, alphabet_sub sub) {
    return narrow_to_laurent(plethystic_substitute(to_rat(f), sub));
}

expansion<laurent_t> omega_t(const expansion<laurent_t>& f) {
    return map_coeffs<laurent_t>(omega(f), [](const laurent_t& c) { return c.invert_t(); });
}

expansion<rat_qt> omega_t(const expansion<rat_qt>& f) {
    return map_coeffs<rat_qt>(omega(f), [](const rat_qt& c) { return c.subst_t_inv(); });
}

} // namespace kschur

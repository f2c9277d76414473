#include "kschur/expansion.hpp"

#include "kschur/errors.hpp"

namespace kschur {

std::string basis_name(basis b) {
    switch (b) {
        case basis::monomial: return "M";
        case basis::elementary: return "E";
        case basis::homogeneous: return "H";
        case basis::power: return "P";
        case basis::schur: return "SCHUR";
        case basis::hall_littlewood: return "HL";
        case basis::k_split: return "KSPLIT";
        case basis::k_schur: return "KSCHUR";
        case basis::macdonald_j: return "MACJ";
        case basis::macdonald_h: return "MACH";
    }
    return "?";
}

basis basis_from_name(const std::string& name) {
    if (name == "M") return basis::monomial;
    if (name == "E") return basis::elementary;
    if (name == "H") return basis::homogeneous;
    if (name == "P") return basis::power;
    if (name == "SCHUR") return basis::schur;
    if (name == "HL") return basis::hall_littlewood;
    if (name == "KSPLIT") return basis::k_split;
    if (name == "KSCHUR") return basis::k_schur;
    if (name == "MACJ") return basis::macdonald_j;
    if (name == "MACH") return basis::macdonald_h;
    throw invalid_input("unknown basis '" + name + "'");
}

expansion<laurent_t> narrow_to_laurent(const expansion<rat_qt>& e) {
    return map_coeffs<laurent_t>(e, [](const rat_qt& c) { return c.to_laurent(); });
}

expansion<poly_qt> narrow_to_poly(const expansion<rat_qt>& e) {
    return map_coeffs<poly_qt>(e, [](const rat_qt& c) { return c.to_poly(); });
}

expansion<bigint> narrow_to_int(const expansion<laurent_t>& e) {
    return map_coeffs<bigint>(e, [](const laurent_t& c) {
        if (!c.is_monomial() || c.min_exp() != 0)
            throw unsupported_ring("coefficient has t-support, cannot narrow to INT");
        return c.coeff(0);
    });
}

expansion<bigint> specialize_t1(const expansion<laurent_t>& e) {
    return map_coeffs<bigint>(e, [](const laurent_t& c) { return c.at_t1(); });
}

} // namespace kschur

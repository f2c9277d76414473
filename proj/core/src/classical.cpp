#include "kschur/classical.hpp"

namespace kschur {

namespace detail {

expansion<rat_qt> h_basis_to_p(const expansion<rat_qt>& f) {
    expansion<rat_qt> out(basis_tag{basis::power, 0});
    for (const auto& [lam, c] : f.terms()) {
        std::map<partition, rat_qt> acc;
        acc.emplace(partition(), rat_qt(1));
        for (int part : lam.parts()) {
            std::map<partition, rat_qt> next;
            for (const auto& [mu, a] : acc)
                for (const auto& [nu, frac] : h_in_power(part)) {
                    rat_qt term = a * rat_qt::fraction(frac.first, frac.second);
                    partition key = partition::union_parts(mu, nu);
                    auto it = next.find(key);
                    if (it == next.end()) next.emplace(std::move(key), std::move(term));
                    else it->second += term;
                }
            acc = std::move(next);
        }
        for (const auto& [mu, a] : acc) out.add_term(mu, c * a);
    }
    return out;
}

} // namespace detail

std::map<std::pair<partition, partition>, bigint> coproduct(const partition& lam) {
    std::map<std::pair<partition, partition>, bigint> out;
    for (int d = 0; d <= lam.degree(); ++d)
        for (const auto& mu : partitions_of(d)) {
            if (!lam.contains(mu)) continue;
            for (const auto& [rho, c] : skew_expand(lam, mu)) out[{mu, rho}] = c;
        }
    return out;
}

rat_qt scalar_qt(const expansion<rat_qt>& f, const expansion<rat_qt>& g) {
    detail::require_basis(f, basis::schur, "scalar_qt");
    detail::require_basis(g, basis::schur, "scalar_qt");
    expansion<rat_qt> fp = to_basis_classical(f, basis::power);
    expansion<rat_qt> gp = to_basis_classical(g, basis::power);
    rat_qt out;
    for (const auto& [rho, a] : fp.terms()) {
        rat_qt b = gp.coeff(rho);
        if (b.is_zero()) continue;
        rat_qt w(z_factor(rho));
        for (int part : rho.parts()) {
            poly_qt qn(1), tn(1);
            qn.add_term(part, 0, bigint(-1)); // 1 - q^part
            tn.add_term(0, part, bigint(-1)); // 1 - t^part
            w *= rat_qt(std::move(qn), std::move(tn));
        }
        out += a * b * w;
    }
    return out;
}

} // namespace kschur

#include "kschur/macdonald.hpp"

#include "kschur/classical.hpp"
#include "kschur/kschur.hpp"
#include "kschur/memo.hpp"
#include "kschur/plethysm.hpp"

namespace kschur {

namespace {

constexpr basis_tag schur_tag{basis::schur, 0};

// <s_a, s_b>_{q,t} for all pairs of one degree, computed once.
memo_table<int, std::map<std::pair<partition, partition>, rat_qt>>& gram_memo() {
    static memo_table<int, std::map<std::pair<partition, partition>, rat_qt>> table;
    return table;
}

const std::map<std::pair<partition, partition>, rat_qt>& schur_gram(int d) {
    static auto compute = [](int deg) {
        std::map<std::pair<partition, partition>, rat_qt> out;
        auto parts = partitions_of(deg);
        std::map<partition, expansion<rat_qt>> powers;
        for (const auto& p : parts)
            powers.emplace(p, to_basis_classical(
                                  expansion<rat_qt>::single(schur_tag, p), basis::power));
        for (const auto& a : parts)
            for (const auto& b : parts) {
                if (b < a) continue;
                rat_qt v;
                const auto& pa = powers.at(a);
                const auto& pb = powers.at(b);
                for (const auto& [rho, ca] : pa.terms()) {
                    rat_qt cb = pb.coeff(rho);
                    if (cb.is_zero()) continue;
                    rat_qt w(z_factor(rho));
                    for (int part : rho.parts()) {
                        poly_qt qn(1), tn(1);
                        qn.add_term(part, 0, bigint(-1));
                        tn.add_term(0, part, bigint(-1));
                        w *= rat_qt(std::move(qn), std::move(tn));
                    }
                    v += ca * cb * w;
                }
                out[{a, b}] = v;
                out[{b, a}] = v;
            }
        return out;
    };
    return *gram_memo().get_or_compute(d, [&]() { return compute(d); });
}

struct j_entry {
    expansion<poly_qt> j; // the integral form has polynomial coefficients
    rat_qt norm;
};

rat_qt gram_pair(const std::map<std::pair<partition, partition>, rat_qt>& gram,
                 const expansion<poly_qt>& f, const expansion<poly_qt>& g) {
    rat_qt out;
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) out += rat_qt(ca * cb) * gram.at({a, b});
    return out;
}

// J_lam = v_lamlam (s_lam - sum_{mu < lam} <s_lam, J_mu>/<J_mu,J_mu> J_mu):
// previously built forms are mutually orthogonal, so a one-shot projection
// is exact, and the result certifies as integral (to_poly throws otherwise).
std::map<partition, j_entry> build_degree(int d) {
    const auto& gram = schur_gram(d);
    std::map<partition, j_entry> built;
    for (const auto& lam : partitions_of(d)) {
        rat_qt diag(macdonald_diag(lam));
        std::map<partition, rat_qt> coeffs;
        coeffs[lam] = diag;
        for (const auto& [mu, prev] : built) {
            if (!dominance_lt(mu, lam)) continue;
            rat_qt sp;
            for (const auto& [b, cb] : prev.j.terms()) sp += rat_qt(cb) * gram.at({lam, b});
            if (sp.is_zero()) continue;
            rat_qt ratio = diag * sp / prev.norm;
            for (const auto& [nu, cb] : prev.j.terms()) coeffs[nu] -= ratio * rat_qt(cb);
        }
        expansion<poly_qt> j(schur_tag);
        for (const auto& [nu, c] : coeffs) j.add_term(nu, c.to_poly());
        rat_qt norm = gram_pair(gram, j, j);
        built.emplace(lam, j_entry{std::move(j), std::move(norm)});
    }
    return built;
}

memo_table<int, std::map<partition, j_entry>>& j_memo() {
    static memo_table<int, std::map<partition, j_entry>> table;
    return table;
}

const std::map<partition, j_entry>& j_of_degree(int d) {
    return *j_memo().get_or_compute(d, [&]() { return build_degree(d); });
}

} // namespace

poly_qt macdonald_diag(const partition& lam) {
    poly_qt out(1);
    partition conj = lam.conjugate();
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i - 1); ++j) {
            int arm = lam.part(i - 1) - j;
            int leg = conj.part(j - 1) - i;
            poly_qt factor(1);
            factor.add_term(arm, leg + 1, bigint(-1));
            out *= factor;
        }
    return out;
}

std::shared_ptr<const expansion<rat_qt>> macdonald_j(const partition& lam) {
    const auto& table = j_of_degree(lam.degree());
    return std::make_shared<const expansion<rat_qt>>(to_rat(table.at(lam).j));
}

expansion<rat_qt> macdonald_j_with_order(const partition& lam,
                                         const std::vector<partition>& order) {
    // classic running-candidate Gram-Schmidt; different extensions take
    // genuinely different paths to the same answer
    const auto& gram = schur_gram(lam.degree());
    std::map<partition, std::pair<expansion<rat_qt>, rat_qt>> built;
    for (const auto& cur : order) {
        expansion<rat_qt> cand = expansion<rat_qt>::single(schur_tag, cur);
        for (const auto& mu : order) {
            if (mu == cur) break;
            if (!dominance_lt(mu, cur)) continue;
            const auto& [jmu, norm] = built.at(mu);
            rat_qt sp;
            for (const auto& [a, ca] : cand.terms())
                for (const auto& [b, cb] : jmu.terms()) sp += ca * cb * gram.at({a, b});
            cand -= (sp / norm) * jmu;
        }
        cand = rat_qt(macdonald_diag(cur)) * cand;
        rat_qt norm;
        for (const auto& [a, ca] : cand.terms())
            for (const auto& [b, cb] : cand.terms()) norm += ca * cb * gram.at({a, b});
        built.emplace(cur, std::make_pair(cand, norm));
        if (cur == lam) return built.at(lam).first;
    }
    throw invalid_input("macdonald_j_with_order: lambda not in the order");
}

expansion<poly_qt> macdonald_h(const partition& lam) {
    expansion<rat_qt> h =
        plethystic_substitute(*macdonald_j(lam), alphabet_sub::x_over_one_minus_t);
    return narrow_to_poly(h);
}

std::map<partition, poly_qt> kschur_qt_kostka(int k, const partition& lam) {
    if (!lam.k_bounded(k)) throw not_k_bounded("kschur_qt_kostka: first part exceeds k");
    expansion<rat_qt> h = to_rat(macdonald_h(lam));
    expansion<rat_qt> coeffs = to_kschur_basis_qt(k, h);
    std::map<partition, poly_qt> out;
    for (const auto& [mu, c] : coeffs.terms()) out.emplace(mu, c.to_poly());
    return out;
}

} // namespace kschur

#include "kschur/kschur.hpp"

#include "kschur/classical.hpp"
#include "kschur/memo.hpp"

namespace kschur {

namespace {

using kpart = std::pair<int, partition>;

memo_table<kpart, expansion<laurent_t>>& gsplit_memo() {
    static memo_table<kpart, expansion<laurent_t>> table;
    return table;
}

memo_table<kpart, expansion<bigint>>& g_t1_memo() {
    static memo_table<kpart, expansion<bigint>> table;
    return table;
}

memo_table<kpart, expansion<laurent_t>>& kschur_memo_table() {
    static memo_table<kpart, expansion<laurent_t>> table;
    return table;
}

memo_table<kpart, expansion<bigint>>& kschur_t1_memo() {
    static memo_table<kpart, expansion<bigint>> table;
    return table;
}

// Dominance-ordered back-substitution against unitriangular rows
// row(mu) = s_mu + (dominance-larger terms).  Candidates are the k-bounded
// partitions of each degree, visited in ascending lex (a linear extension of
// dominance), so the s_mu coefficient is final when mu's turn comes.
template <typename R, typename RowFn>
expansion<R> unitriangular_solve(const expansion<R>& f, basis_tag out_tag, int k,
                                 RowFn&& row_of, const char* who) {
    expansion<R> residual = f;
    expansion<R> out(out_tag);
    for (int d : f.degrees()) {
        for (const auto& mu : k_bounded_partitions(d, k)) {
            R c = residual.coeff(mu);
            if (c == R(0)) continue;
            out.add_term(mu, c);
            auto row = row_of(mu); // shared_ptr keeps the memoized value alive
            for (const auto& [nu, rc] : row->terms()) residual.add_term(nu, -(c * rc));
        }
    }
    if (!residual.is_zero())
        throw not_in_subspace(std::string(who) + ": input not in the spanned subspace");
    return out;
}

} // namespace

std::shared_ptr<const expansion<laurent_t>> k_split_poly(int k, const partition& lam) {
    return gsplit_memo().get_or_compute(kpart{k, lam},
                                        [&]() { return *h_s(k_split(lam, k)); });
}

std::shared_ptr<const expansion<bigint>> k_split_poly_t1(int k, const partition& lam) {
    return g_t1_memo().get_or_compute(kpart{k, lam}, [&]() {
        expansion<bigint> out = expansion<bigint>::unit(basis_tag{basis::schur, 0});
        for (const auto& block : k_split(lam, k))
            out = schur_multiply(
                out, expansion<bigint>::single(basis_tag{basis::schur, 0}, block));
        return out;
    });
}

expansion<laurent_t> to_g_basis(int k, const expansion<laurent_t>& f) {
    detail::require_basis(f, basis::schur, "to_g_basis");
    return unitriangular_solve(
        f, basis_tag{basis::k_split, k}, k,
        [&](const partition& mu) { return k_split_poly(k, mu); }, "to_g_basis");
}

expansion<bigint> to_g_basis_t1(int k, const expansion<bigint>& f) {
    detail::require_basis(f, basis::schur, "to_g_basis_t1");
    return unitriangular_solve(
        f, basis_tag{basis::k_split, k}, k,
        [&](const partition& mu) { return k_split_poly_t1(k, mu); }, "to_g_basis_t1");
}

expansion<laurent_t> t_bar_project(int k, int j, const expansion<laurent_t>& f) {
    expansion<laurent_t> g = to_g_basis(k, f);
    expansion<laurent_t> out(basis_tag{basis::schur, 0});
    for (const auto& [mu, c] : g.terms()) {
        if (mu.first() != j) continue;
        out += c * *k_split_poly(k, mu);
    }
    return out;
}

expansion<bigint> t_project_t1(int k, int j, const expansion<bigint>& f) {
    expansion<bigint> g = to_g_basis_t1(k, f);
    expansion<bigint> out(basis_tag{basis::schur, 0});
    for (const auto& [mu, c] : g.terms()) {
        if (mu.first() != j) continue;
        out += c * *k_split_poly_t1(k, mu);
    }
    return out;
}

std::shared_ptr<const expansion<laurent_t>> k_schur(int k, const partition& lam) {
    if (!lam.k_bounded(k)) throw not_k_bounded("k_schur: first part exceeds k");
    return kschur_memo_table().get_or_compute(kpart{k, lam}, [&]() {
        if (lam.empty()) return expansion<laurent_t>::unit(basis_tag{basis::schur, 0});
        return t_bar_project(k, lam.first(), b_ell(lam.first(), *k_schur(k, lam.tail())));
    });
}

std::shared_ptr<const expansion<bigint>> k_schur_t1(int k, const partition& lam) {
    if (!lam.k_bounded(k)) throw not_k_bounded("k_schur_t1: first part exceeds k");
    return kschur_t1_memo().get_or_compute(kpart{k, lam}, [&]() {
        if (lam.empty()) return expansion<bigint>::unit(basis_tag{basis::schur, 0});
        expansion<bigint> prod =
            pieri(*k_schur_t1(k, lam.tail()), lam.first(), strip_kind::horizontal);
        return t_project_t1(k, lam.first(), prod);
    });
}

expansion<laurent_t> to_kschur_basis(int k, const expansion<laurent_t>& f) {
    detail::require_basis(f, basis::schur, "to_kschur_basis");
    return unitriangular_solve(
        f, basis_tag{basis::k_schur, k}, k,
        [&](const partition& mu) { return k_schur(k, mu); }, "to_kschur_basis");
}

expansion<bigint> to_kschur_basis_t1(int k, const expansion<bigint>& f) {
    detail::require_basis(f, basis::schur, "to_kschur_basis_t1");
    return unitriangular_solve(
        f, basis_tag{basis::k_schur, k}, k,
        [&](const partition& mu) { return k_schur_t1(k, mu); }, "to_kschur_basis_t1");
}

expansion<rat_qt> to_kschur_basis_qt(int k, const expansion<rat_qt>& f) {
    detail::require_basis(f, basis::schur, "to_kschur_basis_qt");
    return unitriangular_solve(
        f, basis_tag{basis::k_schur, k}, k,
        [&](const partition& mu) {
            return std::make_shared<const expansion<rat_qt>>(to_rat(*k_schur(k, mu)));
        },
        "to_kschur_basis_qt");
}

int rectangle_action(int k, int ell, const partition& lam) {
    if (ell < 1 || ell > k) throw invalid_input("rectangle_action: need 1 <= ell <= k");
    if (!lam.k_bounded(k)) throw not_k_bounded("rectangle_action: first part exceeds k");
    partition rect(std::vector<int>(static_cast<size_t>(k - ell + 1), ell));
    expansion<laurent_t> lhs = b_lambda(rect, *k_schur(k, lam));
    partition target = partition::union_parts(lam, rect);
    const expansion<laurent_t>& rhs = *k_schur(k, target);
    // s^(k)_target is Schur-unitriangular, so the coefficient at the target
    // index is the claimed power of t
    laurent_t lead = lhs.coeff(target);
    if (!lead.is_unit_t_power() || lead.min_exp() < 0)
        throw theorem_violation("rectangle_action: leading coefficient is not t^c, lambda=" +
                                lam.to_string() + " ell=" + std::to_string(ell));
    int c = lead.min_exp();
    if (lhs != lead * rhs)
        throw theorem_violation("rectangle_action: result is not t^c * k-Schur, lambda=" +
                                lam.to_string() + " ell=" + std::to_string(ell));
    return c;
}

std::vector<partition> pieri_set(int k, const partition& lam, int ell, strip_kind kind) {
    if (ell > k) throw invalid_input("pieri_set: strip larger than k");
    if (!lam.k_bounded(k)) throw not_k_bounded("pieri_set: first part exceeds k");
    strip_kind other =
        kind == strip_kind::horizontal ? strip_kind::vertical : strip_kind::horizontal;
    partition conj = k_conjugate(lam, k);
    std::vector<partition> out;
    for (const auto& mu : strip_additions(lam, ell, kind)) {
        if (!mu.k_bounded(k)) continue;
        if (is_strip(conj, k_conjugate(mu, k), ell, other)) out.push_back(mu);
    }
    return out;
}

void seed_k_split_poly(int k, const partition& lam, expansion<laurent_t> value) {
    gsplit_memo().seed(kpart{k, lam}, std::move(value));
}

void seed_k_schur(int k, const partition& lam, expansion<laurent_t> value) {
    kschur_memo_table().seed(kpart{k, lam}, std::move(value));
}

void visit_k_split_memo(
    const std::function<void(int, const partition&, const expansion<laurent_t>&)>& fn) {
    gsplit_memo().for_each_ready(
        [&](const kpart& key, const expansion<laurent_t>& v) { fn(key.first, key.second, v); });
}

void visit_k_schur_memo(
    const std::function<void(int, const partition&, const expansion<laurent_t>&)>& fn) {
    kschur_memo_table().for_each_ready(
        [&](const kpart& key, const expansion<laurent_t>& v) { fn(key.first, key.second, v); });
}

expansion<bigint> quotient_reduce(int k, const expansion<bigint>& f) {
    expansion<bigint> coeffs = to_kschur_basis_t1(k, f);
    expansion<bigint> out(coeffs.tag());
    for (const auto& [mu, c] : coeffs.terms())
        if (is_k_irreducible(mu, k)) out.add_term(mu, c);
    return out;
}

} // namespace kschur

#include "kschur/vertex.hpp"

#include <algorithm>

#include "kschur/classical.hpp"
#include "kschur/memo.hpp"
#include "kschur/plethysm.hpp"

namespace kschur {

namespace {

partition_sequence drop_empty(const partition_sequence& s) {
    partition_sequence out;
    for (const auto& p : s)
        if (!p.empty()) out.push_back(p);
    return out;
}

memo_table<int, expansion<laurent_t>>& twisted_memo() {
    static memo_table<int, expansion<laurent_t>> table;
    return table;
}

memo_table<partition, expansion<laurent_t>>& hl_memo() {
    static memo_table<partition, expansion<laurent_t>> table;
    return table;
}

memo_table<partition_sequence, expansion<laurent_t>>& hs_memo() {
    static memo_table<partition_sequence, expansion<laurent_t>> table;
    return table;
}

memo_table<partition_sequence, std::map<partition, laurent_t>>& morris_memo() {
    static memo_table<partition_sequence, std::map<partition, laurent_t>> table;
    return table;
}

} // namespace

std::shared_ptr<const expansion<laurent_t>> schur_of_twisted_alphabet(int i) {
    return twisted_memo().get_or_compute(i, [&]() {
        auto s_i = i == 0 ? expansion<laurent_t>::unit(basis_tag{basis::schur, 0})
                          : expansion<laurent_t>::single(basis_tag{basis::schur, 0},
                                                         partition({i}));
        return plethystic_substitute(s_i, alphabet_sub::x_times_t_minus_one);
    });
}

expansion<laurent_t> b_ell(int ell, const expansion<laurent_t>& f) {
    detail::require_basis(f, basis::schur, "b_ell");
    expansion<laurent_t> out(f.tag());
    if (f.is_zero()) return out;
    int top = f.max_degree();
    for (int i = 0; i <= top; ++i) {
        if (i + ell < 0) continue;
        expansion<laurent_t> skewed = skew_perp(*schur_of_twisted_alphabet(i), f);
        if (skewed.is_zero()) continue;
        if (i + ell > 0) skewed = pieri(skewed, i + ell, strip_kind::horizontal);
        out += skewed;
    }
    return out;
}

expansion<laurent_t> b_lambda(const partition& lam, const expansion<laurent_t>& f) {
    detail::require_basis(f, basis::schur, "b_lambda");
    int m = lam.length();
    if (m == 0) return f;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    expansion<laurent_t> out(f.tag());
    size_t subsets = size_t{1} << pairs.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> v(lam.parts().begin(), lam.parts().end());
        int picked = 0;
        for (size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) {
                ++picked;
                ++v[static_cast<size_t>(pairs[b].first)];
                --v[static_cast<size_t>(pairs[b].second)];
            }
        expansion<laurent_t> g = f;
        for (int i = m - 1; i >= 0 && !g.is_zero(); --i) g = b_ell(v[static_cast<size_t>(i)], g);
        if (picked % 2) g = -g;
        if (picked > 0) g = laurent_t::t_power(picked) * g;
        out += g;
    }
    return out;
}

void seed_hall_littlewood(const partition& lam, expansion<laurent_t> value) {
    hl_memo().seed(lam, std::move(value));
}

void visit_hall_littlewood_memo(
    const std::function<void(const partition&, const expansion<laurent_t>&)>& fn) {
    hl_memo().for_each_ready(fn);
}

std::shared_ptr<const expansion<laurent_t>> hall_littlewood(const partition& lam) {
    return hl_memo().get_or_compute(lam, [&]() {
        if (lam.empty()) return expansion<laurent_t>::unit(basis_tag{basis::schur, 0});
        return b_ell(lam.first(), *hall_littlewood(lam.tail()));
    });
}

std::shared_ptr<const expansion<laurent_t>> h_s(const partition_sequence& s) {
    partition_sequence key = drop_empty(s);
    return hs_memo().get_or_compute(key, [&]() {
        if (key.empty()) return expansion<laurent_t>::unit(basis_tag{basis::schur, 0});
        partition_sequence rest(key.begin() + 1, key.end());
        return b_lambda(key.front(), *h_s(rest));
    });
}

namespace {

// One Morris step: expand K_{mu;S} through the coset sum over
// w = [[i_1..i_m]], alpha/beta the first m and last n-m parts of
// w^{-1}(mu+delta)-delta.
laurent_t morris_step(const partition& mu, const partition& head,
                      const std::map<partition, laurent_t>& tail_kostka) {
    int m = head.length();
    int n = std::max(mu.length(), m);
    laurent_t total;
    std::vector<int> comb(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) comb[static_cast<size_t>(i)] = i + 1;
    auto advance = [&]() {
        int i = m - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - (m - 1 - i)) --i;
        if (i < 0) return false;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        return true;
    };
    if (m == 0) {
        auto it = tail_kostka.find(mu);
        return it == tail_kostka.end() ? laurent_t() : it->second;
    }
    do {
        // alpha_j = mu_{i_j} - i_j + j (1-based), beta from the complement
        std::vector<int> alpha(static_cast<size_t>(m));
        bool dead = false;
        int len = 0;
        for (int j = 1; j <= m && !dead; ++j) {
            int ij = comb[static_cast<size_t>(j - 1)];
            alpha[static_cast<size_t>(j - 1)] = mu.part(ij - 1) - ij + j;
            if (alpha[static_cast<size_t>(j - 1)] < head.part(j - 1)) dead = true;
            len += ij - j;
        }
        if (dead) continue;
        std::vector<bool> used(static_cast<size_t>(n) + 1, false);
        for (int ij : comb) used[static_cast<size_t>(ij)] = true;
        std::vector<int> beta;
        int pos = m;
        for (int w = 1; w <= n; ++w) {
            if (used[static_cast<size_t>(w)]) continue;
            ++pos;
            beta.push_back(mu.part(w - 1) - w + pos);
        }
        partition alpha_p = partition::from_weak(alpha);
        partition beta_p = partition::from_weak(beta);
        if (!alpha_p.contains(head)) continue;

        // c^nu_{alpha/head, beta} = sum_rho c^alpha_{head,rho} c^nu_{rho,beta}
        laurent_t inner;
        for (const auto& [rho, a] : skew_expand(alpha_p, head)) {
            for (const auto& [nu, kt] : tail_kostka) {
                bigint c = lr_coeff(nu, rho, beta_p);
                if (c == 0) continue;
                inner += laurent_t(a * c) * kt;
            }
        }
        if (inner.is_zero()) continue;
        int texp = alpha_p.degree() - head.degree();
        laurent_t weight = laurent_t::t_power(texp, bigint(len % 2 ? -1 : 1));
        total += weight * inner;
    } while (advance());
    return total;
}

} // namespace

std::shared_ptr<const std::map<partition, laurent_t>> morris_kostka(const partition_sequence& s) {
    partition_sequence key = drop_empty(s);
    return morris_memo().get_or_compute(key, [&]() {
        std::map<partition, laurent_t> out;
        if (key.empty()) {
            out.emplace(partition(), laurent_t(1));
            return out;
        }
        if (key.size() == 1) {
            out.emplace(key.front(), laurent_t(1));
            return out;
        }
        partition_sequence rest(key.begin() + 1, key.end());
        auto tail = morris_kostka(rest);
        for (const auto& mu : partitions_of(sequence_degree(key))) {
            laurent_t k = morris_step(mu, key.front(), *tail);
            if (!k.is_zero()) out.emplace(mu, std::move(k));
        }
        return out;
    });
}

} // namespace kschur

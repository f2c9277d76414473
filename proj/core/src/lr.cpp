#include "kschur/lr.hpp"

#include <algorithm>
#include <tuple>

#include "kschur/memo.hpp"

namespace kschur {

namespace {

// Backtracking count of lattice skew tableaux of shape rho/lam and content
// mu.  Cells are visited in reverse reading order (row 1 right-to-left, then
// row 2, ...), which makes the lattice condition a simple running-count
// check: value v may be placed only while #v < #(v-1).
struct lr_counter {
    const partition& rho;
    const partition& lam;
    const partition& mu;
    std::vector<std::vector<int>> grid; // grid[i][c-1], 0 = unfilled
    std::vector<int> count;             // placed cells of each value, 1-based

    lr_counter(const partition& r, const partition& l, const partition& m)
        : rho(r), lam(l), mu(m) {
        grid.resize(static_cast<size_t>(rho.length()));
        for (int i = 0; i < rho.length(); ++i)
            grid[static_cast<size_t>(i)].assign(static_cast<size_t>(rho.part(i)), 0);
        count.assign(static_cast<size_t>(mu.length()) + 1, 0);
    }

    int value_at(int row, int col) const { // 1-based, 0 when outside the skew
        if (row < 1 || row > rho.length()) return 0;
        if (col <= lam.part(row - 1) || col > rho.part(row - 1)) return 0;
        return grid[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
    }

    bigint fill(int row, int col) {
        if (row > rho.length()) return 1;
        if (col <= lam.part(row - 1)) return fill(row + 1, rho.part(row));
        if (col == 0) return fill(row + 1, rho.part(row));
        bigint total = 0;
        int right = col < rho.part(row - 1) ? value_at(row, col + 1) : mu.length();
        int above = value_at(row - 1, col);
        for (int v = 1; v <= right; ++v) {
            if (v <= above) continue;
            if (count[static_cast<size_t>(v)] >= mu.part(v - 1)) continue;
            if (v >= 2 && count[static_cast<size_t>(v)] >= count[static_cast<size_t>(v - 1)])
                continue;
            grid[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] = v;
            ++count[static_cast<size_t>(v)];
            total += fill(row, col - 1);
            --count[static_cast<size_t>(v)];
            grid[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] = 0;
        }
        return total;
    }

    bigint run() {
        if (rho.length() == 0) return mu.empty() ? 1 : 0;
        return fill(1, rho.part(0));
    }
};

using lr_key = std::tuple<partition, partition, partition>;
memo_table<lr_key, bigint>& lr_memo() {
    static memo_table<lr_key, bigint> table;
    return table;
}

using skew_key = std::pair<partition, partition>;
memo_table<skew_key, std::map<partition, bigint>>& skew_memo() {
    static memo_table<skew_key, std::map<partition, bigint>> table;
    return table;
}

memo_table<partition, std::map<partition, bigint>>& jt_h_memo() {
    static memo_table<partition, std::map<partition, bigint>> table;
    return table;
}
memo_table<partition, std::map<partition, bigint>>& jt_e_memo() {
    static memo_table<partition, std::map<partition, bigint>> table;
    return table;
}
memo_table<partition, std::map<partition, bigint>>& h_schur_memo() {
    static memo_table<partition, std::map<partition, bigint>> table;
    return table;
}
memo_table<partition, std::map<partition, bigint>>& e_schur_memo() {
    static memo_table<partition, std::map<partition, bigint>> table;
    return table;
}
memo_table<int, std::map<partition, bigint>>& p_in_h_memo() {
    static memo_table<int, std::map<partition, bigint>> table;
    return table;
}
memo_table<int, std::map<partition, std::pair<bigint, bigint>>>& h_in_p_memo() {
    static memo_table<int, std::map<partition, std::pair<bigint, bigint>>> table;
    return table;
}

void horizontal_additions(const partition& lam, int r, std::vector<partition>& out) {
    // choose the new row lengths top-down with the interlacing constraint
    int rows = lam.length() + 1;
    std::vector<int> mu(static_cast<size_t>(rows), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == rows) {
            if (remaining == 0) out.push_back(partition::from_weak(mu));
            return;
        }
        int base = lam.part(i);
        int lo = base;                                  // cannot shrink
        int hi = base + remaining;                      // all remaining cells here
        if (i > 0) hi = std::min(hi, lam.part(i - 1));  // one cell per column
        for (int len = lo; len <= hi; ++len) {
            if (i > 0 && len > mu[static_cast<size_t>(i - 1)]) break;
            mu[static_cast<size_t>(i)] = len;
            self(self, i + 1, remaining - (len - base));
            mu[static_cast<size_t>(i)] = base;
        }
    };
    rec(rec, 0, r);
}

} // namespace

bigint lr_coeff(const partition& rho, const partition& lam, const partition& mu) {
    if (rho.degree() != lam.degree() + mu.degree()) return 0;
    if (!rho.contains(lam)) return 0;
    auto v = lr_memo().get_or_compute(lr_key{rho, lam, mu}, [&]() {
        return lr_counter(rho, lam, mu).run();
    });
    return *v;
}

const std::map<partition, bigint>& skew_expand(const partition& lam, const partition& mu) {
    static std::map<partition, bigint> empty;
    auto v = skew_memo().get_or_compute(skew_key{lam, mu}, [&]() {
        std::map<partition, bigint> out;
        if (!lam.contains(mu)) return out;
        for (const auto& rho : partitions_of(lam.degree() - mu.degree())) {
            bigint c = lr_coeff(lam, mu, rho);
            if (c != 0) out.emplace(rho, std::move(c));
        }
        return out;
    });
    return *v;
}

const std::map<partition, bigint>& schur_product(const partition& lam, const partition& mu) {
    static memo_table<skew_key, std::map<partition, bigint>> table;
    return *table.get_or_compute(skew_key{lam, mu}, [&]() {
        std::map<partition, bigint> out;
        for (const auto& rho : partitions_of(lam.degree() + mu.degree())) {
            if (!rho.contains(lam)) continue;
            bigint c = lr_coeff(rho, lam, mu);
            if (c != 0) out.emplace(rho, std::move(c));
        }
        return out;
    });
}

std::vector<partition> strip_additions(const partition& lam, int r, strip_kind kind) {
    std::vector<partition> out;
    if (r < 0) return out;
    if (r == 0) {
        out.push_back(lam);
        return out;
    }
    if (kind == strip_kind::horizontal) {
        horizontal_additions(lam, r, out);
    } else {
        std::vector<partition> conj;
        horizontal_additions(lam.conjugate(), r, conj);
        out.reserve(conj.size());
        for (const auto& m : conj) out.push_back(m.conjugate());
    }
    return out;
}

namespace {

std::map<partition, bigint> jacobi_trudi(const partition& lam) {
    std::map<partition, bigint> out;
    int n = lam.length();
    if (n == 0) {
        out.emplace(partition(), 1);
        return out;
    }
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        std::vector<int> idx;
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            int e = lam.part(i) - i + perm[static_cast<size_t>(i)];
            if (e < 0) dead = true;
            else if (e > 0) idx.push_back(e);
        }
        if (dead) continue;
        std::sort(idx.begin(), idx.end(), std::greater<int>());
        partition key(std::move(idx));
        auto it = out.find(key);
        if (it == out.end()) out.emplace(std::move(key), sign);
        else {
            it->second += sign;
            if (it->second == 0) out.erase(it);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::map<partition, bigint> pieri_iterate(const partition& lam, strip_kind kind) {
    std::map<partition, bigint> cur;
    cur.emplace(partition(), 1);
    for (int p : lam.parts()) {
        std::map<partition, bigint> next;
        for (const auto& [nu, c] : cur)
            for (const auto& ext : strip_additions(nu, p, kind)) next[ext] += c;
        cur = std::move(next);
    }
    return cur;
}

} // namespace

const std::map<partition, bigint>& jacobi_trudi_h(const partition& lam) {
    return *jt_h_memo().get_or_compute(lam, [&]() { return jacobi_trudi(lam); });
}

const std::map<partition, bigint>& jacobi_trudi_e(const partition& lam) {
    return *jt_e_memo().get_or_compute(lam, [&]() { return jacobi_trudi(lam.conjugate()); });
}

const std::map<partition, bigint>& homogeneous_in_schur(const partition& lam) {
    return *h_schur_memo().get_or_compute(
        lam, [&]() { return pieri_iterate(lam, strip_kind::horizontal); });
}

const std::map<partition, bigint>& elementary_in_schur(const partition& lam) {
    return *e_schur_memo().get_or_compute(
        lam, [&]() { return pieri_iterate(lam, strip_kind::vertical); });
}

const std::map<partition, bigint>& power_in_h(int n) {
    return *p_in_h_memo().get_or_compute(n, [&]() {
        std::map<partition, bigint> out;
        // p_n = n h_n - sum_{i=1}^{n-1} h_i p_{n-i}
        out.emplace(partition({n}), n);
        for (int i = 1; i < n; ++i) {
            for (const auto& [mu, c] : power_in_h(n - i)) {
                partition key = partition::union_parts(mu, partition({i}));
                auto it = out.find(key);
                if (it == out.end()) out.emplace(std::move(key), -c);
                else {
                    it->second -= c;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
        return out;
    });
}

const std::map<partition, std::pair<bigint, bigint>>& h_in_power(int n) {
    return *h_in_p_memo().get_or_compute(n, [&]() {
        std::map<partition, std::pair<bigint, bigint>> out;
        for (const auto& rho : partitions_of(n)) out.emplace(rho, std::make_pair(bigint(1), z_factor(rho)));
        return out;
    });
}

bigint z_factor(const partition& lam) {
    bigint z = 1;
    int i = 0;
    while (i < lam.length()) {
        int j = i;
        while (j < lam.length() && lam.part(j) == lam.part(i)) ++j;
        int m = j - i;
        for (int f = 1; f <= m; ++f) z *= f;
        for (int f = 0; f < m; ++f) z *= lam.part(i);
        i = j;
    }
    return z;
}

} // namespace kschur

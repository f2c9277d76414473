#include "kschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace kschur {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw invalid_input("partition: parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw invalid_input("partition: parts must be weakly decreasing");
    }
}

partition partition::from_weak(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return partition(std::move(parts));
}

int partition::degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

partition partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]));
    for (int i = 1; i <= parts_[0]; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        conj[static_cast<size_t>(i - 1)] = count;
    }
    return partition(std::move(conj));
}

int partition::main_hook() const {
    if (parts_.empty()) throw empty_partition("main_hook of the empty partition");
    return parts_[0] + length() - 1;
}

bool partition::contains(const partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

partition partition::union_parts(const partition& a, const partition& b) {
    std::vector<int> merged;
    merged.reserve(a.parts_.size() + b.parts_.size());
    merged.insert(merged.end(), a.parts_.begin(), a.parts_.end());
    merged.insert(merged.end(), b.parts_.begin(), b.parts_.end());
    std::sort(merged.begin(), merged.end(), std::greater<int>());
    return partition(std::move(merged));
}

partition partition::tail() const {
    if (parts_.empty()) return {};
    return partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

partition partition::prepend(int r) const {
    if (r < first()) throw invalid_input("prepend: part smaller than first");
    std::vector<int> v;
    v.reserve(parts_.size() + 1);
    v.push_back(r);
    v.insert(v.end(), parts_.begin(), parts_.end());
    return partition(std::move(v));
}

std::string partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

partition partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(s);
    while (std::getline(is, token, ',')) {
        // allow surrounding spaces
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        token = token.substr(b, e - b + 1);
        try {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw invalid_input("partition: cannot parse part '" + token + "'");
        }
    }
    return partition(std::move(parts));
}

bool operator<(const partition& a, const partition& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // lex descending within a degree
    return b.parts_ < a.parts_;
}

bool dominance_leq(const partition& lam, const partition& mu) {
    if (lam.degree() != mu.degree())
        throw degree_mismatch("dominance order needs equal degrees");
    int n = std::max(lam.length(), mu.length());
    int pl = 0, pm = 0;
    for (int i = 0; i < n; ++i) {
        pl += lam.part(i);
        pm += mu.part(i);
        if (pl > pm) return false;
    }
    return true;
}

bool dominance_lt(const partition& lam, const partition& mu) {
    return lam != mu && dominance_leq(lam, mu);
}

bool lex_less(const partition& a, const partition& b) {
    return a.parts() < b.parts();
}

bool is_strip(const partition& inner, const partition& outer, int r, strip_kind kind) {
    if (!outer.contains(inner)) return false;
    if (outer.degree() - inner.degree() != r) return false;
    int n = outer.length();
    if (kind == strip_kind::horizontal) {
        // at most one cell per column: rows interlace
        for (int i = 0; i + 1 < n; ++i)
            if (outer.part(i + 1) > inner.part(i)) return false;
    } else {
        // at most one cell per row
        for (int i = 0; i < n; ++i)
            if (outer.part(i) - inner.part(i) > 1) return false;
    }
    return true;
}

std::vector<int> concatenate(const partition_sequence& s) {
    std::vector<int> v;
    for (const auto& p : s) v.insert(v.end(), p.parts().begin(), p.parts().end());
    return v;
}

bool is_dominant(const partition_sequence& s) {
    auto v = concatenate(s);
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

int sequence_degree(const partition_sequence& s) {
    int d = 0;
    for (const auto& p : s) d += p.degree();
    return d;
}

std::string to_string(const partition_sequence& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ';';
        out += s[i].to_string();
    }
    return out;
}

partition_sequence parse_sequence(const std::string& s) {
    partition_sequence seq;
    std::string token;
    std::istringstream is(s);
    while (std::getline(is, token, ';')) seq.push_back(partition::parse(token));
    return seq;
}

partition_sequence k_split(const partition& lam, int k) {
    if (k < 1) throw invalid_input("k_split: k must be >= 1");
    if (!lam.k_bounded(k)) throw not_k_bounded("k_split: first part exceeds k");
    partition_sequence blocks;
    const auto& parts = lam.parts();
    size_t i = 0;
    while (i < parts.size()) {
        // extend the block until its main hook reaches k
        size_t j = i;
        while (j < parts.size() && parts[i] + static_cast<int>(j - i) < k) ++j;
        if (j == parts.size()) j = parts.size() - 1;
        blocks.emplace_back(std::vector<int>(parts.begin() + static_cast<long>(i),
                                             parts.begin() + static_cast<long>(j) + 1));
        i = j + 1;
    }
    return blocks;
}

skew_shape::skew_shape(partition out, partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner)) throw invalid_input("skew_shape: inner not inside outer");
}

int skew_shape::hook(int row, int col) const {
    int east = row_end(row) - col;
    int north = 0;
    for (int r = row + 1; r <= rows(); ++r)
        if (row_start(r) <= col && col <= row_end(r)) ++north;
    return east + north + 1;
}

int skew_shape::max_hook() const {
    int h = 0;
    for (int r = 1; r <= rows(); ++r)
        for (int c = row_start(r); c <= row_end(r); ++c) h = std::max(h, hook(r, c));
    return h;
}

std::vector<int> skew_shape::row_lengths() const {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(rows()));
    for (int r = 1; r <= rows(); ++r) v.push_back(row_len(r));
    return v;
}

namespace {

// Build the candidate shape for a given overlap o: d shifted one column to
// the right, the new column of m cells at column 1 spanning rows
// rows(d)-o+1 .. rows(d)-o+m.  Returns nullopt when the rows fail to form a
// skew diagram.
std::optional<skew_shape> place_column(int m, const skew_shape& d, int o) {
    int r = d.rows();
    int total = r + m - o;
    std::vector<int> outer(static_cast<size_t>(total)), inner(static_cast<size_t>(total));
    for (int i = 1; i <= total; ++i) {
        bool in_d = i <= r;
        bool in_col = i > r - o && i <= r - o + m;
        int start, end;
        if (in_d && in_col) {
            if (d.row_start(i) != 1) return std::nullopt; // gap after the new cell
            start = 1;
            end = d.row_end(i) + 1;
        } else if (in_d) {
            start = d.row_start(i) + 1;
            end = d.row_end(i) + 1;
        } else {
            start = 1;
            end = 1;
        }
        outer[static_cast<size_t>(i - 1)] = end;
        inner[static_cast<size_t>(i - 1)] = start - 1;
    }
    // starts and ends must weakly decrease going up
    for (int i = 1; i < total; ++i) {
        if (outer[static_cast<size_t>(i)] > outer[static_cast<size_t>(i - 1)]) return std::nullopt;
        if (inner[static_cast<size_t>(i)] > inner[static_cast<size_t>(i - 1)]) return std::nullopt;
    }
    return skew_shape(partition::from_weak(std::move(outer)),
                      partition::from_weak(std::move(inner)));
}

} // namespace

skew_shape k_multiply(int m, const skew_shape& d, int k) {
    if (m < 1 || m > k) throw invalid_input("k_multiply: need 1 <= m <= k");
    if (d.max_hook() > k) throw invalid_input("k_multiply: input has a hook > k");
    for (int o = std::min(m, d.rows()); o >= 0; --o) {
        auto cand = place_column(m, d, o);
        if (cand && cand->max_hook() <= k) return *cand;
    }
    // o = 0 always satisfies both constraints
    throw invalid_input("k_multiply: no valid placement");
}

partition k_conjugate(const partition& lam, int k) {
    if (!lam.k_bounded(k)) throw not_k_bounded("k_conjugate: first part exceeds k");
    skew_shape d;
    const auto& parts = lam.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) d = k_multiply(*it, d, k);
    return partition(d.row_lengths());
}

bool is_k_irreducible(const partition& lam, int k) {
    // count of parts equal to v must be at most k - v, for v = 1..k
    std::vector<int> mult(static_cast<size_t>(k) + 1, 0);
    for (int p : lam.parts()) {
        if (p > k) return false;
        ++mult[static_cast<size_t>(p)];
    }
    for (int v = 1; v <= k; ++v)
        if (mult[static_cast<size_t>(v)] > k - v) return false;
    return true;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& acc,
                    std::vector<partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<partition> partitions_of(int n) {
    return k_bounded_partitions(n, n < 0 ? 0 : n);
}

std::vector<partition> k_bounded_partitions(int n, int k) {
    if (n < 0) throw invalid_input("k_bounded_partitions: negative degree");
    std::vector<partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> acc;
    gen_partitions(n, std::min(n, k), acc, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<partition> k_irreducible_partitions(int k) {
    // multiplicity of v ranges over 0..k-v
    std::vector<partition> out;
    std::vector<int> mult(static_cast<size_t>(k) + 1, 0);
    auto emit = [&]() {
        std::vector<int> parts;
        for (int v = k; v >= 1; --v)
            for (int c = 0; c < mult[static_cast<size_t>(v)]; ++c) parts.push_back(v);
        out.emplace_back(std::move(parts));
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v > k) {
            emit();
            return;
        }
        for (int c = 0; c <= k - v; ++c) {
            mult[static_cast<size_t>(v)] = c;
            self(self, v + 1);
        }
        mult[static_cast<size_t>(v)] = 0;
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kschur

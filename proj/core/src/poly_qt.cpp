#include "kschur/poly_qt.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "kschur/errors.hpp"

namespace kschur {

poly_qt poly_qt::monomial(int qe, int te, bigint c) {
    poly_qt r;
    if (c != 0) {
        if (qe < 0 || te < 0) throw invalid_input("poly_qt: negative exponent");
        r.coeffs_[{qe, te}] = std::move(c);
    }
    return r;
}

void poly_qt::add_term(int qe, int te, const bigint& c) {
    if (c == 0) return;
    if (qe < 0 || te < 0) throw invalid_input("poly_qt: negative exponent");
    qt_exp key{qe, te};
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

poly_qt& poly_qt::operator+=(const poly_qt& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e.q, e.t, c);
    return *this;
}

poly_qt& poly_qt::operator-=(const poly_qt& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e.q, e.t, -c);
    return *this;
}

poly_qt operator*(const poly_qt& a, const poly_qt& b) {
    poly_qt r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            r.add_term(ea.q + eb.q, ea.t + eb.t, ca * cb);
    return r;
}

poly_qt poly_qt::operator-() const {
    poly_qt r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

bigint poly_qt::content() const {
    bigint g = 0;
    for (const auto& [e, c] : coeffs_) {
        g = kschur::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void poly_qt::divide_content(const bigint& g) {
    if (g == 0 || g == 1) return;
    for (auto& [e, c] : coeffs_) c /= g;
}

int poly_qt::q_degree() const {
    int d = 0;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.q);
    return d;
}

int poly_qt::t_degree() const {
    int d = 0;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.t);
    return d;
}

std::optional<poly_qt> poly_qt::divide_exact(const poly_qt& a, const poly_qt& b) {
    if (b.is_zero()) return std::nullopt;
    poly_qt rem = a, quo;
    // grlex is degree-compatible, so leading terms multiply; greedy leading
    // term elimination terminates with zero remainder iff b | a over Z[q,t].
    while (!rem.is_zero()) {
        qt_exp er = rem.leading_exp(), eb = b.leading_exp();
        if (er.q < eb.q || er.t < eb.t) return std::nullopt;
        bigint cr = rem.leading_coeff(), cb = b.leading_coeff();
        if (cr % cb != 0) return std::nullopt;
        bigint c = cr / cb;
        int dq = er.q - eb.q, dt = er.t - eb.t;
        quo.add_term(dq, dt, c);
        for (const auto& [e, bc] : b.coeffs_) rem.add_term(e.q + dq, e.t + dt, -c * bc);
    }
    return quo;
}

namespace {

// Univariate view in q with laurent-free Z[t] coefficients; index = q power.
using tpoly = laurent_t;
using qview = std::vector<tpoly>;

qview to_qview(const poly_qt& p) {
    qview v(static_cast<size_t>(p.q_degree()) + 1);
    for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e.q)].add_term(e.t, c);
    return v;
}

poly_qt from_qview(const qview& v) {
    poly_qt p;
    for (size_t i = 0; i < v.size(); ++i)
        for (const auto& [te, c] : v[i].terms()) p.add_term(static_cast<int>(i), te, c);
    return p;
}

void trim(qview& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// ---- Z[t] univariate gcd (primitive PRS with pseudo-division) ----

bigint tcontent(const tpoly& p) {
    bigint g = 0;
    for (const auto& [e, c] : p.terms()) g = kschur::gcd(g, c);
    return g;
}

tpoly tdiv_int(const tpoly& p, const bigint& g) {
    tpoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c / g);
    return r;
}

// Exact division in Z[t]; caller guarantees divisibility.
tpoly tdiv_exact(const tpoly& a, const tpoly& b) {
    tpoly rem = a, quo;
    int db = b.max_exp();
    bigint lb = b.coeff(db);
    while (!rem.is_zero()) {
        int dr = rem.max_exp();
        bigint c = rem.coeff(dr) / lb;
        quo.add_term(dr - db, c);
        for (const auto& [e, bc] : b.terms()) rem.add_term(e + dr - db, -c * bc);
    }
    return quo;
}

// Pseudo-remainder of a by b in Z[t]: repeatedly a <- lb*a - la*t^(da-db)*b.
// The running remainder is divided by its integer content after every step;
// only the gcd up to content is needed, and this keeps coefficients small.
tpoly tprem(tpoly a, const tpoly& b) {
    int db = b.max_exp();
    bigint lb = b.coeff(db);
    while (!a.is_zero() && a.max_exp() >= db) {
        int da = a.max_exp();
        bigint la = a.coeff(da);
        a = a * laurent_t(lb);
        for (const auto& [e, bc] : b.terms()) a.add_term(e + da - db, -la * bc);
        if (!a.is_zero()) {
            bigint c = tcontent(a);
            if (c > 1) a = tdiv_int(a, c);
        }
    }
    return a;
}

tpoly tgcd(tpoly a, tpoly b) {
    auto sign_fix = [](tpoly p) {
        if (!p.is_zero() && p.coeff(p.max_exp()) < 0) return -p;
        return p;
    };
    if (a.is_zero()) return sign_fix(b);
    if (b.is_zero()) return sign_fix(a);
    bigint ca = tcontent(a), cb = tcontent(b);
    bigint cg = kschur::gcd(ca, cb);
    a = tdiv_int(a, ca);
    b = tdiv_int(b, cb);
    if (a.max_exp() < b.max_exp()) std::swap(a, b);
    while (!b.is_zero()) {
        tpoly r = tprem(a, b);
        a = b;
        b = r.is_zero() ? tpoly() : tdiv_int(r, tcontent(r));
    }
    return sign_fix(a) * laurent_t(cg);
}

// Content of a Z[t][q] polynomial: gcd over Z[t] of the q-coefficients.
tpoly qcontent(const qview& v) {
    tpoly g;
    for (const auto& c : v) g = tgcd(g, c);
    return g;
}

qview qscale(const qview& v, const tpoly& s) {
    qview r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

qview qdiv_exact(const qview& v, const tpoly& s) {
    qview r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].is_zero() ? tpoly() : tdiv_exact(v[i], s);
    return r;
}

// Pseudo-remainder of a by b in Z[t][q], integer content divided out after
// every elimination step.
qview qprem(qview a, const qview& b) {
    trim(a);
    size_t db = b.size() - 1;
    tpoly lb = b.back();
    while (a.size() > db) {
        size_t da = a.size() - 1;
        tpoly la = a.back();
        a = qscale(a, lb);
        for (size_t j = 0; j < b.size(); ++j) {
            a[j + da - db] -= la * b[j];
        }
        trim(a);
        if (a.empty()) break;
        bigint c = 0;
        for (const auto& coeff : a) {
            c = kschur::gcd(c, tcontent(coeff));
            if (c == 1) break;
        }
        if (c > 1)
            for (auto& coeff : a) coeff = tdiv_int(coeff, c);
    }
    return a;
}

} // namespace

namespace {

// gcd when one side is a single term: min exponents, content gcd.
poly_qt monomial_gcd(const poly_qt& mono, const poly_qt& other) {
    qt_exp e = mono.leading_exp();
    int minq = e.q, mint = e.t;
    bigint c = kschur::abs(mono.leading_coeff());
    for (const auto& [oe, oc] : other.terms()) {
        minq = std::min(minq, oe.q);
        mint = std::min(mint, oe.t);
        c = kschur::gcd(c, oc);
    }
    return poly_qt::monomial(minq, mint, c);
}

// ---- heuristic gcd: evaluate at xi = 2^s, integer gcd, balanced xi-adic
// reconstruction, verify by exact division.  Falls back to the PRS when
// reconstruction fails; an unverified candidate is never returned.

size_t max_coeff_bits(const poly_qt& p) {
    size_t bits = 1;
    for (const auto& [e, c] : p.terms())
        bits = std::max(bits, static_cast<size_t>(boost::multiprecision::msb(kschur::abs(c)) + 1));
    return bits;
}

bigint eval_shift(const std::vector<bigint>& coeffs, unsigned s) {
    bigint acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc <<= s;
        acc += coeffs[i];
    }
    return acc;
}

// Balanced digits of v in base 2^s; false when more than max_digits appear.
bool digits_balanced(bigint v, unsigned s, size_t max_digits, std::vector<bigint>& out) {
    bigint xi = bigint(1) << s;
    bigint half = xi >> 1;
    out.clear();
    while (v != 0) {
        if (out.size() >= max_digits) return false;
        bigint r = v % xi;
        if (r < 0) r += xi;
        if (r > half) r -= xi;
        out.push_back(r);
        v = (v - r) / xi; // exact
    }
    return true;
}

std::optional<poly_qt> gcd_heuristic(const poly_qt& a, const poly_qt& b) {
    int dq = std::min(a.q_degree(), b.q_degree());
    int dt = std::min(a.t_degree(), b.t_degree());
    size_t bits = std::max(max_coeff_bits(a), max_coeff_bits(b));
    // xi must exceed twice any coefficient that can appear in the gcd
    unsigned st = static_cast<unsigned>(bits) + 6;
    for (int attempt = 0; attempt < 4; ++attempt, st += st / 2 + 8) {
        // collapse t first: Z[q,t] -> Z[q]
        std::vector<std::vector<bigint>> rows_a(static_cast<size_t>(a.q_degree()) + 1),
            rows_b(static_cast<size_t>(b.q_degree()) + 1);
        for (auto& r : rows_a) r.assign(static_cast<size_t>(a.t_degree()) + 1, 0);
        for (auto& r : rows_b) r.assign(static_cast<size_t>(b.t_degree()) + 1, 0);
        for (const auto& [e, c] : a.terms()) rows_a[static_cast<size_t>(e.q)][static_cast<size_t>(e.t)] = c;
        for (const auto& [e, c] : b.terms()) rows_b[static_cast<size_t>(e.q)][static_cast<size_t>(e.t)] = c;
        std::vector<bigint> qa(rows_a.size()), qb(rows_b.size());
        for (size_t i = 0; i < rows_a.size(); ++i) qa[i] = eval_shift(rows_a[i], st);
        for (size_t i = 0; i < rows_b.size(); ++i) qb[i] = eval_shift(rows_b[i], st);
        // collapse q: Z[q] -> Z
        size_t qbits = 1;
        for (const auto& v : qa)
            if (v != 0) qbits = std::max(qbits, static_cast<size_t>(boost::multiprecision::msb(kschur::abs(v)) + 1));
        for (const auto& v : qb)
            if (v != 0) qbits = std::max(qbits, static_cast<size_t>(boost::multiprecision::msb(kschur::abs(v)) + 1));
        unsigned sq = static_cast<unsigned>(qbits) + 6;
        bigint na = eval_shift(qa, sq), nb = eval_shift(qb, sq);
        bigint g = kschur::gcd(na, nb);
        // lift back to Z[q], then to Z[q,t]
        std::vector<bigint> gq;
        if (!digits_balanced(g, sq, static_cast<size_t>(dq) + 1, gq)) continue;
        poly_qt cand;
        bool ok = true;
        for (size_t i = 0; i < gq.size() && ok; ++i) {
            std::vector<bigint> gt;
            if (!digits_balanced(gq[i], st, static_cast<size_t>(dt) + 1, gt)) {
                ok = false;
                break;
            }
            for (size_t j = 0; j < gt.size(); ++j)
                if (gt[j] != 0) cand.add_term(static_cast<int>(i), static_cast<int>(j), gt[j]);
        }
        if (!ok || cand.is_zero()) continue;
        bigint content = cand.content();
        cand.divide_content(content);
        if (!poly_qt::divide_exact(a, cand) || !poly_qt::divide_exact(b, cand)) continue;
        if (cand.leading_coeff() < 0) cand = -cand;
        bigint ic = kschur::gcd(a.content(), b.content());
        if (ic > 1) cand = cand * poly_qt(ic);
        return cand;
    }
    return std::nullopt;
}

poly_qt gcd_prs(const poly_qt& a, const poly_qt& b) {
    qview va = to_qview(a), vb = to_qview(b);
    trim(va);
    trim(vb);
    tpoly ca = qcontent(va), cb = qcontent(vb);
    tpoly cg = tgcd(ca, cb);
    va = qdiv_exact(va, ca);
    vb = qdiv_exact(vb, cb);
    if (va.size() < vb.size()) std::swap(va, vb);
    // primitive PRS
    while (!vb.empty()) {
        qview r = qprem(va, vb);
        va = std::move(vb);
        if (r.empty()) {
            vb.clear();
        } else {
            tpoly cr = qcontent(r);
            vb = qdiv_exact(r, cr);
        }
    }
    qview g = qscale(va, cg);
    poly_qt out = from_qview(g);
    if (out.leading_coeff() < 0) out = -out;
    return out;
}

} // namespace

namespace {

// Swap the roles of q and t.
poly_qt transpose_qt(const poly_qt& p) {
    poly_qt r;
    for (const auto& [e, c] : p.terms()) r.add_term(e.t, e.q, c);
    return r;
}

// gcd when b is free of q: reduce to a univariate gcd in t against the
// t-content of a.
poly_qt gcd_with_t_only(const poly_qt& a, const poly_qt& b) {
    qview va = to_qview(a);
    trim(va);
    tpoly bt;
    for (const auto& [e, c] : b.terms()) bt.add_term(e.t, c);
    tpoly g = tgcd(qcontent(va), bt);
    poly_qt out;
    for (const auto& [e, c] : g.terms()) out.add_term(0, e, c);
    if (out.leading_coeff() < 0) out = -out;
    return out;
}

} // namespace

poly_qt poly_qt::gcd(const poly_qt& a, const poly_qt& b) {
    if (a.is_zero()) {
        poly_qt r = b;
        if (r.leading_coeff() < 0) r = -r;
        return r;
    }
    if (b.is_zero()) {
        poly_qt r = a;
        if (r.leading_coeff() < 0) r = -r;
        return r;
    }
    if (a.is_monomial()) return monomial_gcd(a, b);
    if (b.is_monomial()) return monomial_gcd(b, a);
    if (b.q_degree() == 0) return gcd_with_t_only(a, b);
    if (a.q_degree() == 0) return gcd_with_t_only(b, a);
    if (b.t_degree() == 0) return transpose_qt(gcd_with_t_only(transpose_qt(a), transpose_qt(b)));
    if (a.t_degree() == 0) return transpose_qt(gcd_with_t_only(transpose_qt(b), transpose_qt(a)));
    if (auto heuristic = gcd_heuristic(a, b)) return *heuristic;
    if (std::getenv("KSCHUR_GCD_DEBUG"))
        fprintf(stderr, "gcdheu FALLBACK: a(q%d,t%d,%zu terms) b(q%d,t%d,%zu terms)\n",
                a.q_degree(), a.t_degree(), a.terms().size(), b.q_degree(), b.t_degree(),
                b.terms().size());
    return gcd_prs(a, b);
}

laurent_t poly_qt::at_q0() const {
    laurent_t r;
    for (const auto& [e, c] : coeffs_)
        if (e.q == 0) r.add_term(e.t, c);
    return r;
}

laurent_t poly_qt::at_q_equals_t() const {
    laurent_t r;
    for (const auto& [e, c] : coeffs_) r.add_term(e.q + e.t, c);
    return r;
}

bigint poly_qt::at_q1_t1() const {
    bigint s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

poly_qt poly_qt::from_laurent(const laurent_t& a) {
    poly_qt r;
    for (const auto& [e, c] : a.terms()) {
        if (e < 0) throw invalid_input("poly_qt::from_laurent: negative t exponent");
        r.add_term(0, e, c);
    }
    return r;
}

std::optional<laurent_t> poly_qt::to_laurent() const {
    laurent_t r;
    for (const auto& [e, c] : coeffs_) {
        if (e.q != 0) return std::nullopt;
        r.add_term(e.t, c);
    }
    return r;
}

} // namespace kschur

#include "kschur/verify.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "kschur/classical.hpp"
#include "kschur/kschur.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/plethysm.hpp"
#include "kschur/tables.hpp"

namespace kschur {

namespace {

constexpr basis_tag schur_tag{basis::schur, 0};

using task = std::pair<std::string, std::function<verify_case()>>;

verify_case pass(std::string name, std::string detail = "") {
    return {std::move(name), "PASS", std::move(detail)};
}
verify_case fail(std::string name, std::string detail) {
    return {std::move(name), "FAIL", std::move(detail)};
}
verify_case holds(std::string name, std::string detail = "") {
    return {std::move(name), "HOLDS", std::move(detail)};
}
verify_case counterexample(std::string name, std::string detail) {
    return {std::move(name), "COUNTEREXAMPLE", std::move(detail)};
}

std::string kd(int k, int d) {
    return "k=" + std::to_string(k) + " degree=" + std::to_string(d);
}

// ---------------------------------------------------------------------------
// theorem checks
// ---------------------------------------------------------------------------

std::vector<task> build_omega_k_involution(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d]() {
                for (const auto& lam : k_bounded_partitions(d, k)) {
                    partition conj = k_conjugate(lam, k);
                    if (conj.degree() != d || !conj.k_bounded(k))
                        return fail(kd(k, d), "omega_k leaves the k-bounded set at " +
                                                  lam.to_string());
                    if (k_conjugate(conj, k) != lam)
                        return fail(kd(k, d), "omega_k not an involution at " + lam.to_string());
                    if (!lam.empty() && lam.main_hook() <= k && conj != lam.conjugate())
                        return fail(kd(k, d),
                                    "omega_k != conjugate at " + lam.to_string());
                }
                return pass(kd(k, d));
            });
    return tasks;
}

std::vector<task> build_morris_vs_vertex(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d]() {
                int compared = 0;
                for (const auto& lam : k_bounded_partitions(d, k)) {
                    partition_sequence s = k_split(lam, k);
                    const auto& vertex_exp = *h_s(s);
                    const auto& kostka = *morris_kostka(s);
                    for (const auto& mu : partitions_of(d)) {
                        laurent_t via_vertex = vertex_exp.coeff(mu);
                        auto it = kostka.find(mu);
                        laurent_t via_morris = it == kostka.end() ? laurent_t() : it->second;
                        if (via_vertex != via_morris)
                            return fail(kd(k, d), "K_{mu;S} mismatch at S=" + to_string(s) +
                                                      " mu=" + mu.to_string());
                    }
                    // dominant-sequence properties: K_{Sbar;S} = 1 and
                    // K_{mu;S} = 0 unless mu >= Sbar
                    if (!kostka.count(lam) || !kostka.at(lam).is_one())
                        return fail(kd(k, d), "K_{Sbar;S} != 1 at S=" + to_string(s));
                    for (const auto& [mu, val] : kostka)
                        if (!dominance_leq(lam, mu))
                            return fail(kd(k, d), "K_{mu;S} != 0 for mu not above Sbar, S=" +
                                                      to_string(s) + " mu=" + mu.to_string());
                    ++compared;
                }
                return pass(kd(k, d), std::to_string(compared) + " sequences compared");
            });
    return tasks;
}

std::vector<task> build_tables(int kmax, int dmax) {
    std::vector<task> tasks;
    for (const auto& kind : {std::string("kschur-in-schur"), std::string("mach-in-kschur")})
        for (const auto& fixture : golden_tables(kind)) {
            if (fixture.k > kmax || fixture.degree > dmax) continue;
            std::string name = kind + " " + kd(fixture.k, fixture.degree);
            tasks.emplace_back(name, [name, kind, fixture]() {
                coeff_table got = kind == "kschur-in-schur"
                                      ? make_kschur_in_schur(fixture.k, fixture.degree)
                                      : make_mach_in_kschur(fixture.k, fixture.degree);
                auto diffs = compare_tables(got, fixture);
                if (diffs.empty()) return pass(name);
                return fail(name, diffs.front() +
                                      (diffs.size() > 1
                                           ? " (+" + std::to_string(diffs.size() - 1) + " more)"
                                           : ""));
            });
        }
    return tasks;
}

std::vector<task> build_rectangle_theorem(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d]() {
                int cases = 0;
                for (const auto& lam : k_bounded_partitions(d, k))
                    for (int ell = 1; ell <= k; ++ell) {
                        rectangle_action(k, ell, lam); // throws on violation
                        ++cases;
                    }
                return pass(kd(k, d), std::to_string(cases) + " rectangle products verified");
            });
    return tasks;
}

std::vector<task> build_t1_consistency(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d]() {
                for (const auto& lam : k_bounded_partitions(d, k)) {
                    // H_lam[X;1] = h_lam
                    expansion<bigint> hl1 = specialize_t1(*hall_littlewood(lam));
                    expansion<bigint> h_classical(schur_tag);
                    for (const auto& [mu, c] : homogeneous_in_schur(lam))
                        h_classical.add_term(mu, c);
                    if (hl1 != h_classical)
                        return fail(kd(k, d), "H_lam[X;1] != h_lam at " + lam.to_string());
                    // the two k-Schur constructions agree at t = 1
                    if (specialize_t1(*k_schur(k, lam)) != *k_schur_t1(k, lam))
                        return fail(kd(k, d), "t=1 specialization mismatch at " + lam.to_string());
                    // s^(k) = s when the main hook fits
                    if (!lam.empty() && lam.main_hook() <= k) {
                        if (*k_schur(k, lam) !=
                            expansion<laurent_t>::single(schur_tag, lam))
                            return fail(kd(k, d), "s^(k) != s for small hook at " + lam.to_string());
                    }
                    // H_S at t=1 multiplies the Schur functions of the blocks
                    partition_sequence s = k_split(lam, k);
                    expansion<bigint> prod = expansion<bigint>::unit(schur_tag);
                    for (const auto& block : s)
                        prod = schur_multiply(prod,
                                              expansion<bigint>::single(schur_tag, block));
                    if (specialize_t1(*h_s(s)) != prod)
                        return fail(kd(k, d), "H_S at t=1 is not the Schur product at S=" +
                                                  to_string(s));
                }
                // s_k . s^(k)_lam = s^(k)_{(k,lam)} at t=1
                if (d >= k)
                    for (const auto& lam : k_bounded_partitions(d - k, k)) {
                        expansion<bigint> lhs =
                            pieri(*k_schur_t1(k, lam), k, strip_kind::horizontal);
                        if (lhs != *k_schur_t1(k, lam.prepend(k)))
                            return fail(kd(k, d),
                                        "s_k . s^(k) != s^(k)_{(k,.)} at " + lam.to_string());
                    }
                return pass(kd(k, d));
            });
    return tasks;
}

std::vector<task> build_irreducible_count(int kmax, int) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        tasks.emplace_back("k=" + std::to_string(k), [k]() {
            auto all = k_irreducible_partitions(k);
            long factorial = 1;
            for (int i = 2; i <= k; ++i) factorial *= i;
            for (const auto& lam : all)
                if (!is_k_irreducible(lam, k))
                    return fail("k=" + std::to_string(k),
                                "enumerated partition is reducible: " + lam.to_string());
            if (static_cast<long>(all.size()) != factorial)
                return fail("k=" + std::to_string(k),
                            "count=" + std::to_string(all.size()) + " expected k!=" +
                                std::to_string(factorial));
            return pass("k=" + std::to_string(k), "count=" + std::to_string(all.size()));
        });
    return tasks;
}

std::vector<task> build_quotient_basis(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        tasks.emplace_back("k=" + std::to_string(k), [k, dmax]() {
            std::string name = "k=" + std::to_string(k);
            for (int d = 0; d <= dmax; ++d)
                for (const auto& lam : k_bounded_partitions(d, k)) {
                    expansion<bigint> reduced = quotient_reduce(k, *k_schur_t1(k, lam));
                    if (is_k_irreducible(lam, k)) {
                        if (reduced !=
                            expansion<bigint>::single(basis_tag{basis::k_schur, k}, lam))
                            return fail(name, "irreducible index not fixed: " + lam.to_string());
                    } else if (!reduced.is_zero()) {
                        return fail(name, "reducible index survives: " + lam.to_string());
                    }
                }
            return pass(name);
        });
    return tasks;
}

// ---------------------------------------------------------------------------
// conjecture regressions
// ---------------------------------------------------------------------------

std::vector<task> build_positivity_v(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d]() {
                for (const auto& lam : k_bounded_partitions(d, k))
                    for (const auto& [mu, c] : k_schur(k, lam)->terms())
                        if (!c.nonnegative() || c.min_exp() < 0)
                            return counterexample(
                                kd(k, d), "v^(k) not in N[t] at lambda=" + lam.to_string() +
                                              " mu=" + mu.to_string() + ": " + poly_string(c));
                return holds(kd(k, d));
            });
    return tasks;
}

std::vector<task> build_positivity_kqt(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d]() {
                for (const auto& lam : k_bounded_partitions(d, k)) {
                    auto kostka = kschur_qt_kostka(k, lam);
                    expansion<poly_qt> classical = macdonald_h(lam);
                    for (const auto& [mu, c] : kostka) {
                        if (!c.nonnegative())
                            return counterexample(kd(k, d),
                                                  "K^(k) not in N[q,t] at lambda=" +
                                                      lam.to_string() + " mu=" + mu.to_string() +
                                                      ": " + poly_string(c));
                        poly_qt bound = classical.coeff(mu) - c;
                        if (!bound.nonnegative())
                            return counterexample(
                                kd(k, d), "K^(k) exceeds K at lambda=" + lam.to_string() +
                                              " mu=" + mu.to_string());
                    }
                }
                return holds(kd(k, d));
            });
    return tasks;
}

verify_case pieri_case(int k, const partition& lam, int ell, strip_kind kind,
                       const std::string& name) {
    expansion<bigint> prod = pieri(*k_schur_t1(k, lam), ell, kind);
    expansion<bigint> coeffs;
    try {
        coeffs = to_kschur_basis_t1(k, prod);
    } catch (const not_in_subspace&) {
        return counterexample(name, "product leaves the subspace at lambda=" + lam.to_string() +
                                        " ell=" + std::to_string(ell));
    }
    auto expected = pieri_set(k, lam, ell, kind);
    std::map<partition, bigint> got;
    for (const auto& [mu, c] : coeffs.terms()) got.emplace(mu, c);
    for (const auto& mu : expected) {
        auto it = got.find(mu);
        if (it == got.end() || it->second != 1)
            return counterexample(name, "missing unit coefficient at mu=" + mu.to_string() +
                                            " for lambda=" + lam.to_string() +
                                            " ell=" + std::to_string(ell));
        got.erase(it);
    }
    if (!got.empty())
        return counterexample(name, "extra index " + got.begin()->first.to_string() +
                                        " for lambda=" + lam.to_string() +
                                        " ell=" + std::to_string(ell));
    return holds(name);
}

std::vector<task> build_pieri_conjecture(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d, dmax]() {
                for (const auto& lam : k_bounded_partitions(d, k))
                    for (int ell = 0; ell <= std::min(k, dmax - d); ++ell)
                        for (auto kind : {strip_kind::horizontal, strip_kind::vertical}) {
                            verify_case c = pieri_case(k, lam, ell, kind, kd(k, d));
                            if (c.verdict != "HOLDS") return c;
                        }
                return holds(kd(k, d));
            });
    // the worked example: e_2 . s^(4)_{3,2,1}
    tasks.emplace_back("k=4 e2 example", []() {
        verify_case c = pieri_case(4, partition({3, 2, 1}), 2, strip_kind::vertical,
                                   "k=4 e2 example");
        if (c.verdict != "HOLDS") return c;
        auto set = pieri_set(4, partition({3, 2, 1}), 2, strip_kind::vertical);
        std::vector<partition> expected{partition({3, 2, 1, 1, 1}), partition({3, 2, 2, 1}),
                                        partition({3, 3, 2})};
        std::sort(expected.begin(), expected.end(), lex_less);
        if (set != expected)
            return counterexample("k=4 e2 example", "set differs from the published one");
        return holds("k=4 e2 example", "e_2 . s^(4)_{3,2,1} has the published three terms");
    });
    return tasks;
}

std::vector<task> build_omega_t_conjecture(int kmax, int dmax) {
    std::vector<task> tasks;
    for (int k = 1; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d)
            tasks.emplace_back(kd(k, d), [k, d]() {
                std::string cs;
                for (const auto& lam : k_bounded_partitions(d, k)) {
                    expansion<laurent_t> lhs = omega_t(*k_schur(k, lam));
                    partition conj = k_conjugate(lam, k);
                    const expansion<laurent_t>& rhs = *k_schur(k, conj);
                    laurent_t lead = lhs.coeff(conj);
                    if (!lead.is_unit_t_power() || lead.max_exp() > 0)
                        return counterexample(kd(k, d), "omega_t image is not t^-c * s^(k) at " +
                                                            lam.to_string());
                    int c = -lead.max_exp();
                    if (lhs != lead * rhs)
                        return counterexample(kd(k, d),
                                              "omega_t image mismatch at " + lam.to_string());
                    cs += (cs.empty() ? "" : " ") + lam.to_string() + ":c=" + std::to_string(c);
                }
                return holds(kd(k, d), cs);
            });
    return tasks;
}

std::vector<task> build_coproduct_conjecture(int kmax, int dmax) {
    std::vector<task> tasks;
    int k = kmax; // default pins k = 2
    for (int d = 0; d <= dmax; ++d)
        tasks.emplace_back(kd(k, d), [k, d]() {
            for (const auto& lam : k_bounded_partitions(d, k)) {
                const auto& f = *k_schur(k, lam);
                // stage 1: collect s_mu[X] s_rho[Y] coefficients
                std::map<partition, expansion<laurent_t>> left_of_rho;
                for (const auto& [nu, c] : f.terms())
                    for (const auto& [mr, n] : coproduct(nu)) {
                        auto [mu, rho] = mr;
                        auto it = left_of_rho.find(rho);
                        if (it == left_of_rho.end())
                            it = left_of_rho.emplace(rho, expansion<laurent_t>(schur_tag)).first;
                        it->second.add_term(mu, c * laurent_t(n));
                    }
                // stage 2: re-express both legs in the k-Schur basis
                std::map<partition, expansion<laurent_t>> right_of_alpha;
                try {
                    for (const auto& [rho, leg] : left_of_rho)
                        for (const auto& [alpha, c] : to_kschur_basis(k, leg).terms()) {
                            auto it = right_of_alpha.find(alpha);
                            if (it == right_of_alpha.end())
                                it = right_of_alpha.emplace(alpha, expansion<laurent_t>(schur_tag))
                                         .first;
                            it->second.add_term(rho, c);
                        }
                    for (const auto& [alpha, leg] : right_of_alpha)
                        for (const auto& [beta, g] : to_kschur_basis(k, leg).terms())
                            if (!g.nonnegative() || g.min_exp() < 0)
                                return counterexample(
                                    kd(k, d), "coproduct coefficient not in N[t] at lambda=" +
                                                  lam.to_string() + " (" + alpha.to_string() +
                                                  "|" + beta.to_string() + "): " +
                                                  poly_string(g));
                } catch (const not_in_subspace&) {
                    return counterexample(kd(k, d),
                                          "coproduct leg leaves the subspace at lambda=" +
                                              lam.to_string());
                }
            }
            return holds(kd(k, d));
        });
    return tasks;
}

std::vector<task> build_branching_positivity(int kmax, int dmax) {
    std::vector<task> tasks;
    int k_from = kmax; // default 2 -> 3
    int k_to = kmax + 1;
    for (int d = 0; d <= dmax; ++d) {
        std::string name = "k=" + std::to_string(k_from) + "->" + std::to_string(k_to) +
                           " degree=" + std::to_string(d);
        tasks.emplace_back(name, [k_from, k_to, d, name]() {
            for (const auto& lam : k_bounded_partitions(d, k_from)) {
                expansion<laurent_t> coeffs;
                try {
                    coeffs = to_kschur_basis(k_to, *k_schur(k_from, lam));
                } catch (const not_in_subspace&) {
                    return counterexample(name,
                                          "branching leaves the subspace at " + lam.to_string());
                }
                if (!coeffs.coeff(lam).is_one())
                    return counterexample(name, "branching not unitriangular at " +
                                                    lam.to_string());
                for (const auto& [mu, c] : coeffs.terms()) {
                    if (mu != lam && !dominance_lt(lam, mu))
                        return counterexample(name, "branching support below lambda at " +
                                                        lam.to_string());
                    if (!c.nonnegative() || c.min_exp() < 0)
                        return counterexample(name, "branching coefficient not in N[t] at " +
                                                        lam.to_string() + " mu=" +
                                                        mu.to_string() + ": " + poly_string(c));
                }
            }
            return holds(name);
        });
    }
    return tasks;
}

// ---------------------------------------------------------------------------
// registry and runner
// ---------------------------------------------------------------------------

struct check_spec {
    std::string name;
    int default_k;
    int default_degree;
    std::vector<task> (*build)(int, int);
};

const std::vector<check_spec>& registry() {
    static const std::vector<check_spec> checks = {
        {"omega-k-involution", 6, 12, build_omega_k_involution},
        {"morris-vs-vertex", 4, 7, build_morris_vs_vertex},
        {"tables", 4, 6, build_tables},
        {"rectangle-theorem", 3, 5, build_rectangle_theorem},
        {"t1-consistency", 3, 7, build_t1_consistency},
        {"pieri-conjecture", 3, 6, build_pieri_conjecture},
        {"omega-t-conjecture", 3, 6, build_omega_t_conjecture},
        {"coproduct-conjecture", 2, 5, build_coproduct_conjecture},
        {"branching-positivity", 2, 6, build_branching_positivity},
        {"positivity-v", 3, 6, build_positivity_v},
        {"positivity-kqt", 3, 6, build_positivity_kqt},
        {"irreducible-count", 5, 0, build_irreducible_count},
        {"quotient-basis", 4, 6, build_quotient_basis},
    };
    return checks;
}

std::vector<verify_case> run_tasks(std::vector<task> tasks, int jobs) {
    std::vector<verify_case> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                results[i] = tasks[i].second();
            } catch (const std::exception& e) {
                results[i] = fail(tasks[i].first, std::string("exception: ") + e.what());
            }
        }
    };
    int n = std::max(1, jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(results.begin(), results.end(),
              [](const verify_case& a, const verify_case& b) { return a.name < b.name; });
    return results;
}

} // namespace

int verify_report::count(const std::string& verdict) const {
    int n = 0;
    for (const auto& c : cases) n += c.verdict == verdict;
    return n;
}

json verify_report::to_json() const {
    json cs = json::array();
    for (const auto& c : cases) {
        json entry{{"case", c.name}, {"verdict", c.verdict}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        cs.push_back(std::move(entry));
    }
    return json{{"check", check},
                {"cases", std::move(cs)},
                {"summary",
                 json{{"pass", count("PASS")},
                      {"fail", count("FAIL")},
                      {"holds", count("HOLDS")},
                      {"counterexamples", count("COUNTEREXAMPLE")}}}};
}

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = []() {
        std::vector<std::string> out;
        for (const auto& c : registry()) out.push_back(c.name);
        return out;
    }();
    return names;
}

verify_report run_verify(const std::string& check, const verify_options& opts) {
    for (const auto& spec : registry()) {
        if (spec.name != check) continue;
        int k = opts.k > 0 ? opts.k : spec.default_k;
        int d = opts.max_degree >= 0 ? opts.max_degree : spec.default_degree;
        verify_report report;
        report.check = check;
        report.options = opts;
        report.cases = run_tasks(spec.build(k, d), opts.jobs);
        return report;
    }
    throw invalid_input("unknown check '" + check + "'");
}

} // namespace kschur

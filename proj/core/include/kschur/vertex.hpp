#ifndef KSCHUR_VERTEX_HPP
#define KSCHUR_VERTEX_HPP

#include <functional>
#include <memory>

#include "kschur/expansion.hpp"

namespace kschur {

// Hall-Littlewood vertex operator B_ell = sum_i s_{i+ell} (s_i[X(t-1)])^perp
// acting on Schur expansions over Z[t,1/t].  Total for every integer ell; the
// i-sum truncates at the top degree of f.  Raises degree by ell.
expansion<laurent_t> b_ell(int ell, const expansion<laurent_t>& f);

// Jacobi-Trudi style operator B_lam: the product prod_{i<j} (1 - t e_ij)
// expanded into signed composites of B_v applied right-to-left.
expansion<laurent_t> b_lambda(const partition& lam, const expansion<laurent_t>& f);

// H_lam[X;t] = B_{lam_1} ... B_{lam_l} . 1, in the Schur basis.
std::shared_ptr<const expansion<laurent_t>> hall_littlewood(const partition& lam);

// Generalized Schur product indexed by a partition sequence:
// H_S = B_{S_1} H_{(S_2,...)}, H_() = 1.  Empty elements of S are dropped.
std::shared_ptr<const expansion<laurent_t>> h_s(const partition_sequence& s);

// Generalized Kostka polynomials K_{mu;S}(t) for all mu of degree |S|,
// computed by the Morris-type recurrence.  Independent of the vertex
// operator path; serves as its oracle.
std::shared_ptr<const std::map<partition, laurent_t>> morris_kostka(const partition_sequence& s);

// Schur expansion of s_i[X(t-1)], memoized (dominates b_ell runtime).
std::shared_ptr<const expansion<laurent_t>> schur_of_twisted_alphabet(int i);

// Persistent-cache hooks.
void seed_hall_littlewood(const partition& lam, expansion<laurent_t> value);
void visit_hall_littlewood_memo(
    const std::function<void(const partition&, const expansion<laurent_t>&)>& fn);

} // namespace kschur

#endif

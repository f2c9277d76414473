#ifndef KSCHUR_KSCHUR_HPP
#define KSCHUR_KSCHUR_HPP

#include <functional>
#include <memory>

#include "kschur/expansion.hpp"
#include "kschur/vertex.hpp"

namespace kschur {

// ---------------------------------------------------------------------------
// k-split polynomials G^(k) and the projection T-bar
// ---------------------------------------------------------------------------

// G^(k)_lam[X;t] = H_{lam->k}[X;t], in the Schur basis.
std::shared_ptr<const expansion<laurent_t>> k_split_poly(int k, const partition& lam);

// t = 1: product of the Schur functions of the split blocks.
std::shared_ptr<const expansion<bigint>> k_split_poly_t1(int k, const partition& lam);

// Expand f in the G^(k) basis (KSPLIT coefficients); throws not_in_subspace
// when f does not lie in Lambda_t^(k).
expansion<laurent_t> to_g_basis(int k, const expansion<laurent_t>& f);
expansion<bigint> to_g_basis_t1(int k, const expansion<bigint>& f);

// Keep exactly the G-terms whose index has first part j; back in SCHUR.
expansion<laurent_t> t_bar_project(int k, int j, const expansion<laurent_t>& f);
expansion<bigint> t_project_t1(int k, int j, const expansion<bigint>& f);

// ---------------------------------------------------------------------------
// k-Schur functions
// ---------------------------------------------------------------------------

// s^(k)_lam[X;t] = Tbar_{lam_1} B_{lam_1} s^(k)_{lam tail}, in SCHUR basis.
std::shared_ptr<const expansion<laurent_t>> k_schur(int k, const partition& lam);

// Independent t = 1 construction via Schur multiplication and T projection.
std::shared_ptr<const expansion<bigint>> k_schur_t1(int k, const partition& lam);

// Expand f in the k-Schur basis (KSCHUR coefficients).
expansion<laurent_t> to_kschur_basis(int k, const expansion<laurent_t>& f);
expansion<bigint> to_kschur_basis_t1(int k, const expansion<bigint>& f);
expansion<rat_qt> to_kschur_basis_qt(int k, const expansion<rat_qt>& f);

// B_{(l^{k-l+1})} s^(k)_lam = t^c s^(k)_{lam u rect}; returns c, throws
// theorem_violation when the computed expansion is not of that form.
int rectangle_action(int k, int ell, const partition& lam);

// Pieri candidate sets E^(k)_{lam,l} (kind horizontal) and the bar variant
// (kind vertical): strip on lam one way, strip on the k-conjugates the other.
std::vector<partition> pieri_set(int k, const partition& lam, int ell, strip_kind kind);

// Expand in KSCHUR at t=1 and drop every reducible index.
expansion<bigint> quotient_reduce(int k, const expansion<bigint>& f);

// Persistent-cache hooks.
void seed_k_split_poly(int k, const partition& lam, expansion<laurent_t> value);
void seed_k_schur(int k, const partition& lam, expansion<laurent_t> value);
void visit_k_split_memo(
    const std::function<void(int, const partition&, const expansion<laurent_t>&)>& fn);
void visit_k_schur_memo(
    const std::function<void(int, const partition&, const expansion<laurent_t>&)>& fn);

} // namespace kschur

#endif

#ifndef KSCHUR_LR_HPP
#define KSCHUR_LR_HPP

#include <map>
#include <vector>

#include "kschur/bigint.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// Ring-free Schur-basis kernels.  All results are memoized behind
// compute-once tables and safe for concurrent use.

// Littlewood-Richardson coefficient c^rho_{lam,mu}: the number of lattice
// skew tableaux of shape rho/lam and content mu.
bigint lr_coeff(const partition& rho, const partition& lam, const partition& mu);

// Expansion of the skew Schur function s_{lam/mu}: map rho -> c^lam_{mu,rho}.
const std::map<partition, bigint>& skew_expand(const partition& lam, const partition& mu);

// Indices of the horizontal/vertical r-strip extensions of lam.
std::vector<partition> strip_additions(const partition& lam, int r, strip_kind kind);

// Schur expansion of s_lam * s_mu (the LR rule).
const std::map<partition, bigint>& schur_product(const partition& lam, const partition& mu);

// Jacobi-Trudi expansion of s_lam as a signed sum of h_mu (or of e_mu when
// dual is set, using the conjugate index).
const std::map<partition, bigint>& jacobi_trudi_h(const partition& lam);
const std::map<partition, bigint>& jacobi_trudi_e(const partition& lam);

// Schur expansion of h_lam (iterated horizontal Pieri); the coefficients are
// the Kostka numbers K_{mu,lam}.
const std::map<partition, bigint>& homogeneous_in_schur(const partition& lam);
// Schur expansion of e_lam (iterated vertical Pieri).
const std::map<partition, bigint>& elementary_in_schur(const partition& lam);

// Power sum p_n as an integer combination of h_mu (Newton recurrence).
const std::map<partition, bigint>& power_in_h(int n);

// h_n as a rational combination of power sums: map rho -> 1/z_rho.
// Returned as pairs (numerator, denominator).
const std::map<partition, std::pair<bigint, bigint>>& h_in_power(int n);

// z_lambda = prod i^{m_i} m_i!.
bigint z_factor(const partition& lam);

} // namespace kschur

#endif

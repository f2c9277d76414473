#ifndef KSCHUR_MACDONALD_HPP
#define KSCHUR_MACDONALD_HPP

#include <memory>

#include "kschur/expansion.hpp"

namespace kschur {

// Macdonald integral form J_lam[X;q,t] in the Schur basis: orthogonal under
// the q,t scalar product, supported on dominance-smaller indices, and scaled
// so the diagonal coefficient is prod_{s in lam} (1 - q^arm(s) t^(leg(s)+1)).
std::shared_ptr<const expansion<rat_qt>> macdonald_j(const partition& lam);

// Diagonal normalization of condition (iii).
poly_qt macdonald_diag(const partition& lam);

// Modified Macdonald polynomial H_lam[X;q,t] = J_lam[X/(1-t)], with every
// Schur coefficient certified to be a polynomial (the q,t-Kostkas).
expansion<poly_qt> macdonald_h(const partition& lam);

// K^(k)_{mu,lam}(q,t): the k-Schur expansion of H_lam, certified integral.
std::map<partition, poly_qt> kschur_qt_kostka(int k, const partition& lam);

// Gram-Schmidt along an explicit linear extension of dominance (ascending
// positions in `order`); exposed so independence of the chosen extension can
// be verified.
expansion<rat_qt> macdonald_j_with_order(const partition& lam,
                                         const std::vector<partition>& order);

} // namespace kschur

#endif

#pragma once

#include <map>
#include <span>

#include "soclelab/partition.hpp"

namespace soclelab {

using SchurExpansion = std::map<Partition, mpz_class>;

/// Expansion of the product of the Schur functions of mu and nu in the Schur basis,
/// computed by chaining horizontal strips with lattice bookkeeping. When `limit` is given,
/// shapes not contained in it are pruned.
SchurExpansion lr_expand(const Partition& mu, const Partition& nu, const Partition* limit = nullptr);

/// Contents of all Littlewood-Richardson tableaux of shape lambda/mu, i.e. the expansion
/// of the skew Schur function of lambda/mu in the Schur basis.
SchurExpansion lr_skew(const Partition& lambda, const Partition& mu);

/// Littlewood-Richardson coefficient: multiplicity of lambda in mu * nu.
mpz_class lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Brute-force cross-check: counts semistandard fillings of the skew diagram lambda/mu
/// with content nu whose reverse reading word is a lattice word, with no pruning beyond
/// semistandardness. Independent of the production path above.
mpz_class lr_coeff_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Iterated coefficient: multiplicity of lambda in gamma_1 * ... * gamma_r * lambda_prime.
/// An empty gamma list degenerates to equality of lambda and lambda_prime.
mpz_class multi_lr(const Partition& lambda, std::span<const Partition> gammas,
                   const Partition& lambda_prime);

}  // namespace soclelab

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "soclelab/lr.hpp"
#include "soclelab/partition.hpp"

namespace soclelab {

using PartitionPair = std::pair<Partition, Partition>;
using SemisimpleDecomp = std::map<PartitionPair, mpz_class>;

/// Layer k of the socle filtration of the indecomposable injective labeled by
/// (lambda, mu) over r blocks: for each (lambda', mu'), the sum over r-tuples of
/// partitions of total size k of the product of the two iterated coefficients.
SemisimpleDecomp socle_layer_injective(const Partition& lambda, const Partition& mu, int r,
                                       int k);

/// All layers from k = 0 through the last nonempty one.
std::vector<SemisimpleDecomp> socle_layers_injective(const Partition& lambda,
                                                     const Partition& mu, int r);

/// Entry of the one-step branching matrix: sum over single partitions gamma of the
/// product of the two skew multiplicities.
mpz_class branching_matrix_entry(const Partition& lambda, const Partition& mu,
                                 const Partition& lambda_prime, const Partition& mu_prime);

/// Full Jordan-Hoelder multiset of the injective, computed as a row of the r-th power of
/// the branching matrix restricted to sub-pairs. Independent of the per-layer route.
SemisimpleDecomp jh_injective(const Partition& lambda, const Partition& mu, int r);

/// Socle layers of the big injective K over ranks (m, n): sum of injective layers over all
/// (lambda, mu) with |lambda| = m, |mu| = n and two blocks, each weighted by the product of
/// symmetric-group dimensions.
std::vector<SemisimpleDecomp> socle_layers_K(int m, int n);

/// Socle layers of the antisymmetrizer image J inside K: layer i is the pair of columns of
/// heights m-i and n-i with multiplicity i+1.
std::vector<SemisimpleDecomp> socle_layers_J(int m, int n);

}  // namespace soclelab

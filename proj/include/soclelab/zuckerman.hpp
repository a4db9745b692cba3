#pragma once

#include "soclelab/fock.hpp"

namespace soclelab {

/// Shifted (dot) action: conjugate the place permutation by the rho shift.
Weight dot_action(const PermPair& s, const Weight& lambda);

/// Signed sum over all place-permutation pairs. Kills labels with a repeated entry in
/// either block; composing with itself scales by m! n!.
GrothVec dot_antisymmetrize(const GrothVec& v);

/// dot_antisymmetrize normalized to an idempotent.
GrothVec wedge_projector(const GrothVec& v);

}  // namespace soclelab

#pragma once

#include <set>
#include <vector>

#include "soclelab/groth.hpp"

namespace soclelab {

/// Pair of place permutations for the two position blocks; entry k is the image of k.
struct PermPair {
  std::vector<int> even, odd;

  static PermPair identity(int m, int n);
  int sign() const;
};

/// Raising generator indexed by any integer i: moves an a-entry from i+1 to i with
/// coefficient +1 and a b-entry from i to i+1 with coefficient -1, position by position.
GrothVec apply_e(int i, const GrothVec& v);

/// Lowering generator: a-entries i -> i+1 with +1, b-entries i+1 -> i with -1.
GrothVec apply_f(int i, const GrothVec& v);

/// Eigenvalue of the Cartan element h_i on the label.
int weight_h(int i, const BarLabel& label);

/// Place permutation of the label positions (standard basis only).
GrothVec sym_act(const PermPair& s, const GrothVec& v);

/// Signed sum over all place permutations, sending each wedge label into the standard
/// basis model.
GrothVec iota_kac(const GrothVec& v);

/// Pairing contraction of a-position i with b-position j (1-based): keeps terms whose two
/// entries agree and removes the positions.
GrothVec contraction(int i, int j, const GrothVec& v);

/// Indices i with apply_e(i, .) or apply_f(i, .) nonzero on the standard-basis label.
std::set<int> annihilator_support(const BarLabel& label);

}  // namespace soclelab

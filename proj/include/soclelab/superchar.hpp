#pragma once

#include "soclelab/partition.hpp"
#include "soclelab/superpoly.hpp"
#include "soclelab/weights.hpp"

namespace soclelab {

/// Supersymmetric Schur polynomial in (x_1..x_m | y_1..y_n), with y-monomials signed by
/// their degree. Zero when the diagram does not fit in the (m,n) hook (lambda_{m+1} > n).
SuperPoly super_schur(const Partition& lambda, int m, int n);

/// s_{even}(x) * s_{odd}(y) * prod_{i,j} (1 - y_j/x_i) for a dominant weight, as a Laurent
/// polynomial. Blocks may contain negative entries (rational Schur polynomials).
SuperPoly kac_supercharacter(const Weight& lambda, int m, int n);

/// Symmetric in each variable group, and substituting x_m = y_n = t leaves t-free terms only.
bool is_supersymmetric(const SuperPoly& p);

/// Substitutes x_m = y_n = t. Throws std::domain_error if any t-dependence survives;
/// otherwise returns the constant-in-t part over (m-1, n-1) variables.
SuperPoly ds_eval(const SuperPoly& p);
SuperPoly ds_power(SuperPoly p, int k);

/// Substituting x_i = y_j = t instead of the last pair is t-free and yields ds_eval(p).
/// Requires a supersymmetric input.
bool pair_independence_check(const SuperPoly& p, int i, int j);

struct FiltrationReport {
  long kac_checked = 0;
  long schur_checked = 0;
  bool kac_vanishing = true;
  bool schur_stability = true;
  bool ok() const { return kac_vanishing && schur_stability; }
};

/// Evaluation shadow of the tensor filtration: the substitution map kills every Kac
/// polynomial and restricts each supersymmetric Schur polynomial to its (m-1, n-1)
/// counterpart. Checks all partition-pair weights and shapes up to the degree bound.
FiltrationReport tensor_filtration_shadow(int m, int n, int degree_bound);

}  // namespace soclelab

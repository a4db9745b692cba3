#pragma once

#include <vector>

#include "soclelab/fock.hpp"

namespace soclelab {

/// Inclusive integer interval of allowed label entries.
struct Window {
  int lo, hi;
  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

/// Window cardinality cap for kernel computations; SOCLE_LAB_MAX_WINDOW overrides the
/// default of 64.
int max_window_size();

/// Exact basis of the joint kernel of all position-pair contractions on the span of
/// standard-basis labels with entries in the window. With m = 0 or n = 0 there are no
/// contractions and the whole span is returned.
std::vector<GrothVec> socle_T_window(int m, int n, Window w);

/// Splits the window at q into low and high parts, takes the intersection of the kernel
/// above with the span of labels having at least one low entry, and decides whether it is
/// contained in the image of the traceless operators of the low block applied to that
/// span. Vacuously true when the low part is empty.
bool appendix_inclusion_check(int m, int n, Window w, int q);

}  // namespace soclelab

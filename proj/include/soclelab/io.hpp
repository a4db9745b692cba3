#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "soclelab/groth.hpp"
#include "soclelab/socle.hpp"
#include "soclelab/superpoly.hpp"

namespace soclelab {

/// One JSON object per term: {"m":2,"n":1,"basis":"verma","a":[5,3],"b":[2],"coeff":"1"}.
/// A zero vector is a single line carrying "zero":true instead of a term.
void write_groth(std::ostream& os, const GrothVec& v);
GrothVec read_groth(std::istream& is);

/// Single JSON object: {"m":2,"n":1,"terms":[{"x":[1,0],"y":[0],"c":"1"},...]}.
void write_superpoly(std::ostream& os, const SuperPoly& p);
SuperPoly read_superpoly(std::istream& is);

/// Single JSON object with the layer list; multiplicities are decimal strings.
std::string decomp_layers_json(const std::vector<SemisimpleDecomp>& layers);

}  // namespace soclelab

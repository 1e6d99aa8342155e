#pragma once

#include "rblie/lie_algebra.hpp"

#include <string>
#include <vector>

namespace rblie {

// Free nilpotent Lie algebra on `generators` generators of class `nil_class`,
// realized on a Hall-tree basis with structure constants obtained by Hall
// rewriting. Basis labels spell out the bracketing, e.g. "[x1,[x1,x2]]".
// Throws if the resulting dimension would exceed `dim_cap`.
LieAlgebra build_free_nilpotent(int generators, int nil_class, int dim_cap = 512);

// Number of Hall trees of the given degree (necklace / Witt count).
long long witt_dimension(int generators, int degree);

}  // namespace rblie

#ifndef MAXKCUT_EXPORT_HPP
#define MAXKCUT_EXPORT_HPP

#include <string>

#include "maxkcut/model.hpp"

namespace maxkcut {

/// CPLEX-style LP text. The quadratic objective is written literally inside
/// brackets (no trailing "/ 2" rescaling): [ c x * y + d x ^ 2 ] means
/// c*x*y + d*x^2. Throws HasPsdBlock for conic models. Output is
/// deterministic: identical models yield byte-identical text.
std::string export_lp_format(const Model& m);

/// Sparse SDPA (.dat-s). The exported problem is the minimization form
///   min c^T v  s.t.  X = sum_i v_i F_i - F0 >= 0,
/// with c = -linear objective, so the model's maximum equals
/// (objective constant) - (SDPA optimum); the offset is recorded in the
/// leading comment lines. Block structure: one block per PSD block of the
/// model, then one diagonal block holding variable bounds and the linear
/// constraints (equalities as paired inequalities). Throws
/// HasQuadraticObjective / NoPsdBlock when the model does not fit the format.
std::string export_sdpa_format(const Model& m);

} // namespace maxkcut

#endif

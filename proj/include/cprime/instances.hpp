#pragma once

#include <vector>

#include "cprime/module.hpp"

namespace cprime {

/// The four 2x2 matrices over Z_2 with equal columns, under left
/// multiplication by M_2(Z_2).  Elements are listed in the order they appear
/// when generating the module from the all-ones matrix: 0, J, [[1,1],[0,0]],
/// [[0,0],[1,1]].
FiniteModule make_column_module(const RingPtr& m2z2);

/// Entries (row-major) of each element of `make_column_module`.
std::vector<std::vector<Index>> column_module_matrices();

/// Ring element of M_k(Z_n) obtained by reducing an integer matrix entrywise.
Index reduce_integer_matrix(const FiniteRing& base, Index k, const std::vector<long long>& entries);

/// Z_m viewed as a module over Z_n through reduction (requires m | n).
FiniteModule make_reduction_module(const RingPtr& zn, Index m);

/// The cyclic group Z_4 with Z_2 acting by 0 and the identity.  This is not
/// a Z_2-module ((1+1)*1 = 0 but 1*1 + 1*1 = 2); it is built with scalar
/// additivity exempted and reports `is_module() == false`.
FiniteModule make_z4_with_z2_action(const RingPtr& z2);

}  // namespace cprime

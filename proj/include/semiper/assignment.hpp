#pragma once

#include "semiper/matrix.hpp"

namespace semiper {

/// An optimal assignment: the permanent value together with a permutation
/// whose diagonal product reproduces it exactly.
struct AssignmentSolution {
    Element value;
    Permutation assignment;
};

/// Max-plus permanent as an optimal assignment problem: maximize the sum of
/// selected entries, one per row and column, with bottom entries forbidden.
/// Successive maximum-gain augmenting paths with exact rational arithmetic;
/// ties resolved toward the lowest column index. If every permutation hits a
/// bottom entry the value is bottom and the identity witnesses it.
AssignmentSolution per_maxplus(const Matrix& a);

/// Max-min permanent as a bottleneck assignment: the largest threshold t
/// (searched over the finite set of matrix entries) such that a perfect
/// matching exists using only entries >= t.
AssignmentSolution per_maxmin(const Matrix& a);

/// Boolean permanent: 1 iff the bipartite graph of one-entries has a
/// perfect matching.
Element per_boolean(const Matrix& a);

/// Dispatch to the fast path for the matrix's semiring; semirings without
/// one are rejected rather than silently falling back.
Element per_fast(const Matrix& a);

}  // namespace semiper

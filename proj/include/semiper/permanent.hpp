#pragma once

#include <optional>

#include "semiper/matrix.hpp"

namespace semiper {

/// Size caps for the permanent algorithms. Exceeding a cap is a loud,
/// typed refusal (CapExceededError), never silent truncation.
struct PermanentCaps {
    std::size_t enumerate_cap = 10;  // n! enumeration, the reference oracle
    std::size_t subset_dp_cap = 20;  // n * 2^n dynamic program
};

/// Reference oracle: the sum over all n! permutations of the diagonal
/// products. Serial on purpose; every faster algorithm is tested against it.
Element per_enumerate(const Matrix& a, const PermanentCaps& caps = {});

/// Production algorithm: dynamic program over column subsets. After row i the
/// table holds, for each i-subset S of columns, the permanent of the first i
/// rows restricted to S. Subtraction-free, so valid over any commutative
/// semiring. Parallelized over each subset layer.
Element per_subset_dp(const Matrix& a, const PermanentCaps& caps = {});
/// Serial reference implementation of the same recurrence, kept for testing
/// and benchmarking against the parallel kernel.
Element per_subset_dp_serial(const Matrix& a, const PermanentCaps& caps = {});

/// Laplace expansion along rows `alpha`: sum over all column tuples beta of
/// per(A[alpha|beta]) * per(A(alpha|beta)). The result does not depend on
/// alpha. Inner permanents use the subset DP.
Element per_laplace(const Matrix& a, const IndexTuple& alpha, const PermanentCaps& caps = {});

/// Expansion along row i: sum over j of a(i,j) * per(A(i|j)).
Element per_row_expansion(const Matrix& a, std::size_t i, const PermanentCaps& caps = {});

/// Shortcut when every diagonal entry dominates its row (a(i,k) <= a(i,i)
/// for all i, k): the permanent collapses to the diagonal product. The
/// precondition is checked; the error names the first violating (i, k).
Element per_diag_dominant(const Matrix& a);

enum class PerAlgorithm { enumeration, subset_dp, laplace, row_expansion, diag_dominant, fast };

struct PermanentResult {
    Element value;
    PerAlgorithm algorithm;
    std::size_t n;
};

/// Dispatch on the algorithm tag. `alpha` applies to laplace (default (1)),
/// `row` to row_expansion (default 1). `fast` routes through the assignment
/// solvers and rejects semirings without a fast path.
PermanentResult compute_permanent(const Matrix& a, PerAlgorithm alg,
                                  const std::optional<IndexTuple>& alpha = std::nullopt,
                                  std::size_t row = 1, const PermanentCaps& caps = {});

}  // namespace semiper

#pragma once

#include <optional>
#include <tuple>

#include "semiper/permanent.hpp"

namespace semiper {

/// Outcome of the dominance test a(i,i) >= a(j,k) for all i, j, k.
/// When it fails, `violation` holds one (i, j, k) with leq(a(j,k), a(i,i))
/// false.
struct StarWitness {
    bool holds = false;
    std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> violation;
};

/// dominance test over every triple; when it holds, all diagonal entries
/// are necessarily equal (checked).
StarWitness satisfies_star(const Matrix& a);

/// Thrown when an operation requires the dominance condition and it fails.
struct StarViolationError : PreconditionError {
    StarViolationError(const std::string& what, StarWitness w)
        : PreconditionError(what), witness(std::move(w)) {}
    StarWitness witness;
};

/// The permanental adjoint: entry (i, j) is the permanent of the minor that
/// deletes row j and column i. No sign alternation exists over a semiring.
/// The n^2 minor permanents are independent and computed in parallel.
Matrix adj(const Matrix& a, const PermanentCaps& caps = {});
/// Serial reference implementation kept for testing and benchmarking.
Matrix adj_serial(const Matrix& a, const PermanentCaps& caps = {});

/// Under the dominance condition, adj(A) equals A^(n-1); rejects matrices
/// that fail the condition, carrying the witness.
Matrix adj_via_power(const Matrix& a);

/// Under the dominance condition, per(adj(A)); contract: equals
/// per(A)^(n-1).
Element per_adj_star(const Matrix& a, const PermanentCaps& caps = {});

}  // namespace semiper

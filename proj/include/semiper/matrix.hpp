#pragma once

#include <cstddef>
#include <vector>

#include "semiper/semiring.hpp"

namespace semiper {

/// A bijection on {1..n}. All indices and images are 1-based.
class Permutation {
public:
    static Permutation identity(std::size_t n);
    /// images[i-1] is the image of i; must be a bijection on {1..n}.
    static Permutation of_images(std::vector<std::size_t> images);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const;
    const std::vector<std::size_t>& images() const { return images_; }

    Permutation inverse() const;
    /// Disjoint cycle decomposition; each cycle starts at its smallest
    /// member and cycles are ordered by that member. Fixed points included.
    std::vector<std::vector<std::size_t>> cycles() const;

    bool operator==(const Permutation& other) const = default;

private:
    explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {}
    std::vector<std::size_t> images_;
};

/// compose(f, g) maps i to f(g(i)).
Permutation compose(const Permutation& f, const Permutation& g);

/// All n! permutations of {1..n} in lexicographic image order.
std::vector<Permutation> all_permutations(std::size_t n);

/// A strictly increasing tuple of indices in {1..n} (1-based).
class IndexTuple {
public:
    IndexTuple(std::size_t ambient, std::vector<std::size_t> indices);

    std::size_t ambient() const { return ambient_; }
    std::size_t length() const { return indices_.size(); }
    const std::vector<std::size_t>& indices() const { return indices_; }
    /// The increasing tuple of {1..n} members not in this tuple.
    IndexTuple complement() const;

    bool operator==(const IndexTuple& other) const = default;

private:
    std::size_t ambient_;
    std::vector<std::size_t> indices_;
};

/// All C(n, k) increasing k-tuples in {1..n}, lexicographic. 1 <= k <= n-1.
std::vector<IndexTuple> omega(std::size_t k, std::size_t n);

/// A dense matrix over one semiring. Entries are immutable after
/// construction; all operations return new matrices. Public indices are
/// 1-based throughout, matching the conventional notation.
class Matrix {
public:
    Matrix(Semiring ring, std::size_t rows, std::size_t cols, std::vector<Element> entries);
    /// Constant-filled matrix.
    Matrix(Semiring ring, std::size_t rows, std::size_t cols, const Element& fill);
    static Matrix identity(const Semiring& ring, std::size_t n);
    /// Build from element strings, e.g. {{"1", "1/2"}, {"2", "2"}}.
    static Matrix parse(const Semiring& ring, const std::vector<std::vector<std::string>>& rows);

    const Semiring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Element& at(std::size_t i, std::size_t j) const;  // 1-based

    bool operator==(const Matrix& other) const = default;

private:
    Semiring ring_;
    std::size_t rows_, cols_;
    std::vector<Element> entries_;  // row-major
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Element& lambda, const Matrix& a);
Matrix transpose(const Matrix& a);
/// l-fold product of a square matrix; l = 0 yields the identity.
Matrix mat_pow(const Matrix& a, unsigned l);
/// Entrywise canonical order; equivalent to mat_add(a, b) == b.
bool mat_leq(const Matrix& a, const Matrix& b);

/// Submatrix picking rows `alpha` and columns `beta` (same length).
Matrix submatrix_select(const Matrix& a, const IndexTuple& alpha, const IndexTuple& beta);
/// Submatrix deleting rows `alpha` and columns `beta`.
Matrix submatrix_delete(const Matrix& a, const IndexTuple& alpha, const IndexTuple& beta);
/// Delete one row and one column; requires n >= 2.
Matrix minor_matrix(const Matrix& a, std::size_t del_row, std::size_t del_col);
/// Replace row q by a copy of row p (square matrices).
Matrix row_replace(const Matrix& a, std::size_t p, std::size_t q);
Matrix permutation_matrix(const Permutation& sigma, const Semiring& ring);

/// [[a, c], [0, b]] with a zero block bottom-left. a, b square.
Matrix block_triangular(const Matrix& a, const Matrix& c, const Matrix& b);

}  // namespace semiper

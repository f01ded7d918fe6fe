#include "semiper/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace semiper {

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::of_images(std::vector<std::size_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (std::size_t v : images) {
        if (v < 1 || v > images.size() || seen[v - 1])
            throw IndexError("images do not form a bijection on {1..n}");
        seen[v - 1] = true;
    }
    return Permutation(std::move(images));
}

std::size_t Permutation::operator()(std::size_t i) const {
    if (i < 1 || i > images_.size()) throw IndexError("permutation index out of range");
    return images_[i - 1];
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 1; i <= images_.size(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 1; start <= images_.size(); ++start) {
        if (seen[start - 1]) continue;
        std::vector<std::size_t> cycle;
        std::size_t cur = start;
        do {
            seen[cur - 1] = true;
            cycle.push_back(cur);
            cur = images_[cur - 1];
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw IndexError("composing permutations of different sizes");
    std::vector<std::size_t> images(f.size());
    for (std::size_t i = 1; i <= f.size(); ++i) images[i - 1] = f(g(i));
    return Permutation::of_images(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::of_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

IndexTuple::IndexTuple(std::size_t ambient, std::vector<std::size_t> indices)
    : ambient_(ambient), indices_(std::move(indices)) {
    if (indices_.empty() || indices_.size() > ambient_)
        throw IndexError("index tuple length must be in {1..n}");
    std::size_t prev = 0;
    for (std::size_t i : indices_) {
        if (i <= prev || i > ambient_)
            throw IndexError("index tuple must be strictly increasing within {1..n}");
        prev = i;
    }
}

IndexTuple IndexTuple::complement() const {
    std::vector<std::size_t> rest;
    auto it = indices_.begin();
    for (std::size_t i = 1; i <= ambient_; ++i) {
        if (it != indices_.end() && *it == i)
            ++it;
        else
            rest.push_back(i);
    }
    return IndexTuple(ambient_, std::move(rest));
}

std::vector<IndexTuple> omega(std::size_t k, std::size_t n) {
    if (k < 1 || k + 1 > n) throw IndexError("omega(k, n) needs 1 <= k <= n-1");
    std::vector<IndexTuple> out;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        out.emplace_back(n, pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Matrix::Matrix(Semiring ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw ShapeError("matrix needs at least one row and one column");
    if (entries_.size() != rows_ * cols_) throw ShapeError("entry count does not match shape");
    for (const Element& e : entries_)
        if (!ring_.contains(e))
            throw CarrierMismatchError("matrix entry '" + e.str() + "' is not in " + ring_.name());
}

Matrix::Matrix(Semiring ring, std::size_t rows, std::size_t cols, const Element& fill)
    : Matrix(ring, rows, cols, std::vector<Element>(rows * cols, fill)) {}

Matrix Matrix::identity(const Semiring& ring, std::size_t n) {
    std::vector<Element> entries(n * n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = ring.one();
    return Matrix(ring, n, n, std::move(entries));
}

Matrix Matrix::parse(const Semiring& ring, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows.front().empty()) throw ShapeError("matrix needs entries");
    std::vector<Element> entries;
    entries.reserve(rows.size() * rows.front().size());
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) throw ShapeError("ragged matrix rows");
        for (const auto& text : row) entries.push_back(ring.parse(text));
    }
    return Matrix(ring, rows.size(), rows.front().size(), std::move(entries));
}

const Element& Matrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw IndexError("matrix index out of range");
    return entries_[(i - 1) * cols_ + (j - 1)];
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring()) throw ShapeError("matrices live over different semirings");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix shapes differ");
}

void require_square(const Matrix& a, const char* what) {
    if (!a.square()) throw ShapeError(std::string(what) + " needs a square matrix");
}

}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    std::vector<Element> entries;
    entries.reserve(a.rows() * a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            entries.push_back(a.ring().add(a.at(i, j), b.at(i, j)));
    return Matrix(a.ring(), a.rows(), a.cols(), std::move(entries));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring()) throw ShapeError("matrices live over different semirings");
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions do not match");
    const Semiring& s = a.ring();
    std::vector<Element> entries;
    entries.reserve(a.rows() * b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            Element acc = s.zero();
            for (std::size_t k = 1; k <= a.cols(); ++k)
                acc = s.add(acc, s.mul(a.at(i, k), b.at(k, j)));
            entries.push_back(std::move(acc));
        }
    return Matrix(s, a.rows(), b.cols(), std::move(entries));
}

Matrix scalar_mul(const Element& lambda, const Matrix& a) {
    std::vector<Element> entries;
    entries.reserve(a.rows() * a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            entries.push_back(a.ring().mul(lambda, a.at(i, j)));
    return Matrix(a.ring(), a.rows(), a.cols(), std::move(entries));
}

Matrix transpose(const Matrix& a) {
    std::vector<Element> entries;
    entries.reserve(a.rows() * a.cols());
    for (std::size_t j = 1; j <= a.cols(); ++j)
        for (std::size_t i = 1; i <= a.rows(); ++i) entries.push_back(a.at(i, j));
    return Matrix(a.ring(), a.cols(), a.rows(), std::move(entries));
}

Matrix mat_pow(const Matrix& a, unsigned l) {
    require_square(a, "mat_pow");
    if (l == 0) return Matrix::identity(a.ring(), a.rows());
    Matrix acc = a;
    for (unsigned i = 1; i < l; ++i) acc = mat_mul(acc, a);
    return acc;
}

bool mat_leq(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            if (!a.ring().leq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

Matrix submatrix_select(const Matrix& a, const IndexTuple& alpha, const IndexTuple& beta) {
    if (alpha.ambient() != a.rows() || beta.ambient() != a.cols())
        throw IndexError("index tuple ambient size does not match the matrix");
    if (alpha.length() != beta.length()) throw IndexError("row and column tuples differ in length");
    std::vector<Element> entries;
    entries.reserve(alpha.length() * beta.length());
    for (std::size_t u : alpha.indices())
        for (std::size_t v : beta.indices()) entries.push_back(a.at(u, v));
    return Matrix(a.ring(), alpha.length(), beta.length(), std::move(entries));
}

Matrix submatrix_delete(const Matrix& a, const IndexTuple& alpha, const IndexTuple& beta) {
    if (alpha.ambient() != a.rows() || beta.ambient() != a.cols())
        throw IndexError("index tuple ambient size does not match the matrix");
    if (alpha.length() == a.rows() || beta.length() == a.cols())
        throw IndexError("cannot delete every row or every column");
    const IndexTuple keep_rows = alpha.complement();
    const IndexTuple keep_cols = beta.complement();
    std::vector<Element> entries;
    entries.reserve(keep_rows.length() * keep_cols.length());
    for (std::size_t u : keep_rows.indices())
        for (std::size_t v : keep_cols.indices()) entries.push_back(a.at(u, v));
    return Matrix(a.ring(), keep_rows.length(), keep_cols.length(), std::move(entries));
}

Matrix minor_matrix(const Matrix& a, std::size_t del_row, std::size_t del_col) {
    require_square(a, "minor");
    if (a.rows() < 2) throw ShapeError("minor needs n >= 2");
    if (del_row < 1 || del_row > a.rows() || del_col < 1 || del_col > a.cols())
        throw IndexError("minor index out of range");
    return submatrix_delete(a, IndexTuple(a.rows(), {del_row}), IndexTuple(a.cols(), {del_col}));
}

Matrix row_replace(const Matrix& a, std::size_t p, std::size_t q) {
    require_square(a, "row_replace");
    if (p < 1 || p > a.rows() || q < 1 || q > a.rows())
        throw IndexError("row_replace index out of range");
    std::vector<Element> entries;
    entries.reserve(a.rows() * a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        const std::size_t src = (i == q) ? p : i;
        for (std::size_t j = 1; j <= a.cols(); ++j) entries.push_back(a.at(src, j));
    }
    return Matrix(a.ring(), a.rows(), a.cols(), std::move(entries));
}

Matrix permutation_matrix(const Permutation& sigma, const Semiring& ring) {
    const std::size_t n = sigma.size();
    std::vector<Element> entries(n * n, ring.zero());
    for (std::size_t i = 1; i <= n; ++i) entries[(i - 1) * n + (sigma(i) - 1)] = ring.one();
    return Matrix(ring, n, n, std::move(entries));
}

Matrix block_triangular(const Matrix& a, const Matrix& c, const Matrix& b) {
    require_square(a, "block_triangular");
    require_square(b, "block_triangular");
    if (a.ring() != b.ring() || a.ring() != c.ring())
        throw ShapeError("blocks live over different semirings");
    if (c.rows() != a.rows() || c.cols() != b.cols())
        throw ShapeError("off-diagonal block shape does not match");
    const std::size_t n = a.rows(), m = b.rows();
    std::vector<Element> entries;
    entries.reserve((n + m) * (n + m));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) entries.push_back(a.at(i, j));
        for (std::size_t j = 1; j <= m; ++j) entries.push_back(c.at(i, j));
    }
    const Element zero = a.ring().zero();
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) entries.push_back(zero);
        for (std::size_t j = 1; j <= m; ++j) entries.push_back(b.at(i, j));
    }
    return Matrix(a.ring(), n + m, n + m, std::move(entries));
}

}  // namespace semiper

#include "semiper/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "semiper/assignment.hpp"
#include "semiper/parallel.hpp"

namespace semiper {

namespace {

void require_square_per(const Matrix& a) {
    if (!a.square()) throw ShapeError("permanent needs a square matrix");
}

void require_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw CapExceededError("refusing " + std::string(what) + " at n=" + std::to_string(n) +
                                   ": cap is " + std::to_string(cap),
                               n, cap);
}

}  // namespace

Element per_enumerate(const Matrix& a, const PermanentCaps& caps) {
    require_square_per(a);
    require_cap(a.rows(), caps.enumerate_cap, "permutation enumeration");
    const Semiring& s = a.ring();
    const std::size_t n = a.rows();
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), 1);
    Element acc = s.zero();
    do {
        Element term = s.one();
        for (std::size_t i = 1; i <= n; ++i) term = s.mul(term, a.at(i, image[i - 1]));
        acc = s.add(acc, term);
    } while (std::next_permutation(image.begin(), image.end()));
    return acc;
}

Element per_subset_dp_serial(const Matrix& a, const PermanentCaps& caps) {
    require_square_per(a);
    require_cap(a.rows(), caps.subset_dp_cap, "subset dynamic program");
    const Semiring& s = a.ring();
    const std::size_t n = a.rows();
    std::vector<Element> table(std::size_t(1) << n, s.zero());
    table[0] = s.one();
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        const std::size_t row = std::popcount(mask);
        Element acc = s.zero();
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const std::uint32_t bit = rest & (~rest + 1);
            const std::size_t col = std::size_t(std::countr_zero(bit)) + 1;
            acc = s.add(acc, s.mul(a.at(row, col), table[mask ^ bit]));
        }
        table[mask] = std::move(acc);
    }
    return table.back();
}

Element per_subset_dp(const Matrix& a, const PermanentCaps& caps) {
    require_square_per(a);
    require_cap(a.rows(), caps.subset_dp_cap, "subset dynamic program");
    const std::size_t n = a.rows();
    if (n < 10) return per_subset_dp_serial(a, caps);

    const Semiring& s = a.ring();
    // Masks grouped by popcount: within one layer every subset is
    // independent of the others, which makes the layer a parallel for.
    std::vector<std::vector<std::uint32_t>> layers(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t binom = 1;
        for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
        layers[k].reserve(binom);
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask)
        layers[std::popcount(mask)].push_back(mask);

    std::vector<Element> table(std::size_t(1) << n, s.zero());
    table[0] = s.one();
    for (std::size_t row = 1; row <= n; ++row) {
        const std::vector<std::uint32_t>& layer = layers[row];
        parallel_for(layer.size(), [&](std::size_t idx) {
            const std::uint32_t mask = layer[idx];
            Element acc = s.zero();
            for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                const std::uint32_t bit = rest & (~rest + 1);
                const std::size_t col = std::size_t(std::countr_zero(bit)) + 1;
                acc = s.add(acc, s.mul(a.at(row, col), table[mask ^ bit]));
            }
            table[mask] = std::move(acc);
        });
    }
    return table.back();
}

Element per_laplace(const Matrix& a, const IndexTuple& alpha, const PermanentCaps& caps) {
    require_square_per(a);
    const std::size_t n = a.rows();
    if (n < 2) throw ShapeError("Laplace expansion needs n >= 2");
    if (alpha.ambient() != n) throw IndexError("alpha ambient size does not match the matrix");
    const std::size_t k = alpha.length();
    if (k < 1 || k > n - 1) throw IndexError("Laplace expansion needs 1 <= |alpha| <= n-1");
    const Semiring& s = a.ring();
    const std::vector<IndexTuple> betas = omega(k, n);
    return parallel_reduce(s, betas.size(), [&](std::size_t idx) {
        const IndexTuple& beta = betas[idx];
        return s.mul(per_subset_dp_serial(submatrix_select(a, alpha, beta), caps),
                     per_subset_dp_serial(submatrix_delete(a, alpha, beta), caps));
    });
}

Element per_row_expansion(const Matrix& a, std::size_t i, const PermanentCaps& caps) {
    require_square_per(a);
    const std::size_t n = a.rows();
    if (n < 2) throw ShapeError("row expansion needs n >= 2");
    if (i < 1 || i > n) throw IndexError("row index out of range");
    const Semiring& s = a.ring();
    Element acc = s.zero();
    for (std::size_t j = 1; j <= n; ++j)
        acc = s.add(acc, s.mul(a.at(i, j), per_subset_dp_serial(minor_matrix(a, i, j), caps)));
    return acc;
}

Element per_diag_dominant(const Matrix& a) {
    require_square_per(a);
    const Semiring& s = a.ring();
    const std::size_t n = a.rows();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= n; ++k)
            if (!s.leq(a.at(i, k), a.at(i, i)))
                throw PreconditionError("diagonal dominance fails at (i,k)=(" + std::to_string(i) +
                                        "," + std::to_string(k) + "): a(i,k)=" +
                                        a.at(i, k).str() + " is not <= a(i,i)=" + a.at(i, i).str());
    Element acc = s.one();
    for (std::size_t i = 1; i <= n; ++i) acc = s.mul(acc, a.at(i, i));
    return acc;
}

PermanentResult compute_permanent(const Matrix& a, PerAlgorithm alg,
                                  const std::optional<IndexTuple>& alpha, std::size_t row,
                                  const PermanentCaps& caps) {
    switch (alg) {
        case PerAlgorithm::enumeration:
            return {per_enumerate(a, caps), alg, a.rows()};
        case PerAlgorithm::subset_dp:
            return {per_subset_dp(a, caps), alg, a.rows()};
        case PerAlgorithm::laplace: {
            IndexTuple first_row(a.rows(), {1});
            return {per_laplace(a, alpha ? *alpha : first_row, caps), alg, a.rows()};
        }
        case PerAlgorithm::row_expansion:
            return {per_row_expansion(a, row, caps), alg, a.rows()};
        case PerAlgorithm::diag_dominant:
            return {per_diag_dominant(a), alg, a.rows()};
        case PerAlgorithm::fast:
            return {per_fast(a), alg, a.rows()};
    }
    throw Error("unreachable permanent algorithm");
}

}  // namespace semiper

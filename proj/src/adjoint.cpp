#include "semiper/adjoint.hpp"

#include "semiper/parallel.hpp"

namespace semiper {

namespace {

void require_adj_input(const Matrix& a) {
    if (!a.square()) throw ShapeError("adjoint needs a square matrix");
    if (a.rows() < 2) throw ShapeError("adjoint is defined via (n-1)-minors, so n >= 2");
}

std::string star_message(const StarWitness& w) {
    const auto& [i, j, k] = *w.violation;
    return "dominance condition fails: a(" + std::to_string(j) + "," + std::to_string(k) +
           ") is not <= a(" + std::to_string(i) + "," + std::to_string(i) + ")";
}

}  // namespace

StarWitness satisfies_star(const Matrix& a) {
    require_adj_input(a);
    const Semiring& s = a.ring();
    const std::size_t n = a.rows();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                if (!s.leq(a.at(j, k), a.at(i, i))) return {false, {{i, j, k}}};
    // Mutual dominance forces every diagonal entry to coincide.
    for (std::size_t i = 2; i <= n; ++i)
        if (a.at(i, i) != a.at(1, 1))
            throw Error("internal: dominance holds but diagonal entries differ");
    return {true, std::nullopt};
}

Matrix adj_serial(const Matrix& a, const PermanentCaps& caps) {
    require_adj_input(a);
    const std::size_t n = a.rows();
    std::vector<Element> entries;
    entries.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            entries.push_back(per_subset_dp_serial(minor_matrix(a, j, i), caps));
    return Matrix(a.ring(), n, n, std::move(entries));
}

Matrix adj(const Matrix& a, const PermanentCaps& caps) {
    require_adj_input(a);
    const std::size_t n = a.rows();
    std::vector<Element> entries(n * n, a.ring().zero());
    parallel_for(n * n, [&](std::size_t idx) {
        const std::size_t i = idx / n + 1, j = idx % n + 1;
        entries[idx] = per_subset_dp_serial(minor_matrix(a, j, i), caps);
    });
    return Matrix(a.ring(), n, n, std::move(entries));
}

Matrix adj_via_power(const Matrix& a) {
    StarWitness w = satisfies_star(a);
    if (!w.holds) throw StarViolationError(star_message(w), w);
    return mat_pow(a, static_cast<unsigned>(a.rows() - 1));
}

Element per_adj_star(const Matrix& a, const PermanentCaps& caps) {
    StarWitness w = satisfies_star(a);
    if (!w.holds) throw StarViolationError(star_message(w), w);
    return per_subset_dp(adj(a, caps), caps);
}

}  // namespace semiper

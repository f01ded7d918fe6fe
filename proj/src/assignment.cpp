#include "semiper/assignment.hpp"

#include <algorithm>
#include <optional>

namespace semiper {

namespace {

void require_carrier(const Matrix& a, SemiringId id, const char* what) {
    if (!a.square()) throw ShapeError("assignment solver needs a square matrix");
    if (a.ring().id() != id)
        throw CarrierMismatchError(std::string(what) + " does not apply to " + a.ring().name());
}

/// Kuhn's augmenting-path matching on an adjacency list (1-based vertices).
/// Deterministic: rows and candidate columns are scanned in ascending order.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(std::size_t n) : n_(n), adj_(n + 1), match_col_(n + 1, 0) {}

    void add_edge(std::size_t row, std::size_t col) { adj_[row].push_back(col); }

    /// Perfect matching as row -> column images, if one exists.
    std::optional<std::vector<std::size_t>> perfect_matching() {
        std::fill(match_col_.begin(), match_col_.end(), 0);
        for (std::size_t row = 1; row <= n_; ++row) {
            std::vector<bool> visited(n_ + 1, false);
            if (!augment(row, visited)) return std::nullopt;
        }
        std::vector<std::size_t> images(n_);
        for (std::size_t col = 1; col <= n_; ++col)
            if (match_col_[col] != 0) images[match_col_[col] - 1] = col;
        return images;
    }

private:
    bool augment(std::size_t row, std::vector<bool>& visited) {
        for (std::size_t col : adj_[row]) {
            if (visited[col]) continue;
            visited[col] = true;
            if (match_col_[col] == 0 || augment(match_col_[col], visited)) {
                match_col_[col] = row;
                return true;
            }
        }
        return false;
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_col_;
};

}  // namespace

AssignmentSolution per_maxplus(const Matrix& a) {
    require_carrier(a, SemiringId::max_plus, "per_maxplus");
    const std::size_t n = a.rows();
    const auto finite = [&](std::size_t i, std::size_t j) { return !a.at(i, j).is_bottom(); };
    const auto weight = [&](std::size_t i, std::size_t j) -> const Rational& {
        return a.at(i, j).as_rational();
    };

    std::vector<std::size_t> match_row(n + 1, 0), match_col(n + 1, 0);
    for (std::size_t row = 1; row <= n; ++row) {
        // Maximum-gain alternating path from `row` to each column, found by
        // value iteration over the residual graph. No positive residual
        // cycles exist while the partial assignment stays optimal, so n
        // relaxation rounds reach the fixed point.
        std::vector<std::optional<Rational>> gain(n + 1);
        std::vector<std::size_t> prev(n + 1, 0);
        for (std::size_t j = 1; j <= n; ++j)
            if (finite(row, j)) gain[j] = weight(row, j);
        for (std::size_t round = 0; round < n; ++round) {
            bool changed = false;
            for (std::size_t j1 = 1; j1 <= n; ++j1) {
                if (!gain[j1] || match_col[j1] == 0) continue;
                const std::size_t i = match_col[j1];
                for (std::size_t j2 = 1; j2 <= n; ++j2) {
                    if (j2 == j1 || !finite(i, j2)) continue;
                    Rational cand = *gain[j1] - weight(i, j1) + weight(i, j2);
                    if (!gain[j2] || cand > *gain[j2]) {
                        gain[j2] = std::move(cand);
                        prev[j2] = j1;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        std::size_t best = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (match_col[j] != 0 || !gain[j]) continue;
            if (best == 0 || *gain[j] > *gain[best]) best = j;
        }
        if (best == 0) {
            // No bottom-free perfect matching exists, so every permutation
            // sums to bottom and any witness will do.
            return {Element::bottom(), Permutation::identity(n)};
        }
        std::size_t j = best;
        while (prev[j] != 0) {
            const std::size_t pj = prev[j];
            const std::size_t i = match_col[pj];
            match_col[j] = i;
            match_row[i] = j;
            j = pj;
        }
        match_col[j] = row;
        match_row[row] = j;
    }

    Rational total(0);
    std::vector<std::size_t> images(n);
    for (std::size_t i = 1; i <= n; ++i) {
        images[i - 1] = match_row[i];
        total += weight(i, match_row[i]);
    }
    return {Element::of_rational(total), Permutation::of_images(std::move(images))};
}

AssignmentSolution per_maxmin(const Matrix& a) {
    require_carrier(a, SemiringId::fuzzy_maxmin, "per_maxmin");
    const std::size_t n = a.rows();
    std::vector<Rational> values;
    values.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) values.push_back(a.at(i, j).as_rational());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    const auto matching_at = [&](const Rational& t) {
        BipartiteMatcher matcher(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (a.at(i, j).as_rational() >= t) matcher.add_edge(i, j);
        return matcher.perfect_matching();
    };

    // Largest feasible threshold; the smallest entry is always feasible
    // because the full bipartite graph has a perfect matching.
    std::size_t lo = 0, hi = values.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if (matching_at(values[mid]))
            lo = mid;
        else
            hi = mid - 1;
    }
    auto witness = matching_at(values[lo]);
    return {Element::of_rational(values[lo]), Permutation::of_images(std::move(*witness))};
}

Element per_boolean(const Matrix& a) {
    require_carrier(a, SemiringId::boolean, "per_boolean");
    BipartiteMatcher matcher(a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            if (a.at(i, j).as_bool()) matcher.add_edge(i, j);
    return Element::of_bool(matcher.perfect_matching().has_value());
}

Element per_fast(const Matrix& a) {
    switch (a.ring().id()) {
        case SemiringId::max_plus: return per_maxplus(a).value;
        case SemiringId::fuzzy_maxmin: return per_maxmin(a).value;
        case SemiringId::boolean: return per_boolean(a);
        default:
            throw CarrierMismatchError("no fast permanent path for " + a.ring().name() +
                                       "; use the subset DP");
    }
}

}  // namespace semiper

#include "cayley/graph.hpp"

#include <random>

#include "cayley/matrix_space.hpp"

namespace cayley {

namespace {

// Number of C in M_n with C - a invertible and, when b is given, C - b invertible.
std::uint64_t count_neighbors(const MatrixSpace& space, std::span<const Element> a,
                              std::span<const Element> b, unsigned threads) {
    const Field& f = space.field();
    const int n = space.side();
    return space.count_if(threads, [&](std::span<const Element> c) {
        ScratchMatrix s(n);
        if (!kernel::invertible_in_place(f, n, s.load_difference(f, c, a))) return false;
        return b.empty() || kernel::invertible_in_place(f, n, s.load_difference(f, c, b));
    });
}

}  // namespace

bool adjacent(const Matrix& a, const Matrix& b) { return is_invertible(a - b); }

std::uint64_t common_neighbors_bruteforce(const Matrix& a, const Matrix& b, OracleOptions options) {
    a.require_compatible(b);
    const MatrixSpace space(a.field_ptr(), a.size(), options.budget);
    return count_neighbors(space, a.entries(), b.entries(), options.threads);
}

std::uint64_t common_neighbors_by_rank(const Matrix& a, const Matrix& b, OracleOptions options) {
    a.require_compatible(b);
    if (a == b) throw SameVertex("common_neighbors_by_rank needs two distinct vertices");
    return intersection_count_oracle(rank(a - b), a.size(), a.field_ptr(), options);
}

RegularityResult regularity_check(int n, const FieldPtr& field, RegularityOptions mode,
                                  OracleOptions options) {
    const MatrixSpace space(field, n, options.budget);

    std::vector<std::uint64_t> vertices;
    switch (mode.mode) {
        case RegularityMode::single_vertex:
            vertices.push_back(0);
            break;
        case RegularityMode::exhaustive: {
            const auto pairs = checked_pow(field->order(), 2 * static_cast<std::uint64_t>(n) * n);
            options.budget.require(pairs, "exhaustive regularity scan");
            vertices.resize(space.size());
            for (std::uint64_t i = 0; i < space.size(); ++i) vertices[i] = i;
            break;
        }
        case RegularityMode::sampled: {
            std::mt19937_64 rng(mode.seed);
            for (std::uint64_t i = 0; i < std::max<std::uint64_t>(mode.samples, 1); ++i) {
                vertices.push_back(rng() % space.size());
            }
            break;
        }
    }

    RegularityResult result;
    result.uniform = true;
    for (const auto v : vertices) {
        const Matrix vertex = space.at({v});
        const auto degree = count_neighbors(space, vertex.entries(), {}, options.threads);
        if (result.vertices_checked == 0) {
            result.degree = degree;
        } else if (degree != result.degree) {
            result.uniform = false;
        }
        ++result.vertices_checked;
    }
    return result;
}

SrgReport srg_decide(int n, const FieldPtr& field, OracleOptions options) {
    const MatrixSpace space(field, n, options.budget);

    SrgReport report;
    report.n = n;
    report.q = field->order();
    report.field = field->designation();
    report.order = space.size();
    report.degree = intersection_count_oracle(0, n, field, options);
    report.lambda = intersection_count_oracle(n, n, field, options);
    for (int r = 1; r < n; ++r) report.mu_by_rank[r] = intersection_count_oracle(r, n, field, options);

    if (n == 1) {
        report.is_srg = false;
        report.note = "complete graph K_" + std::to_string(report.q) +
                      ": no non-adjacent pairs, not counted as strongly regular";
        return report;
    }

    const std::uint64_t mu = report.mu_by_rank.at(1);
    report.is_srg = true;
    for (const auto& [r, count] : report.mu_by_rank) report.is_srg = report.is_srg && count == mu;

    if (report.is_srg) {
        report.parameters = SrgParameters{report.order, report.degree, report.lambda, mu};
        if (n == 2 && *report.parameters != srg_parameters_2x2(report.q)) {
            throw VerificationFailure("rank-class parameters for n = 2 disagree with the closed form");
        }
        return report;
    }

    // Prefer the E_11 / diag(1,1,0,...,0) pair; fall back to the first rank that differs from mu_1.
    int other = 2;
    if (report.mu_by_rank.at(2) == mu) {
        for (const auto& [r, count] : report.mu_by_rank) {
            if (count != mu) {
                other = r;
                break;
            }
        }
    }
    report.witness = SrgWitness{1,
                                other,
                                mu,
                                report.mu_by_rank.at(other),
                                canonical_rank_matrix(field, n, 1).to_literal(),
                                canonical_rank_matrix(field, n, other).to_literal()};
    return report;
}

}  // namespace cayley

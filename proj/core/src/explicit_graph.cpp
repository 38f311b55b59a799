#include "cayley/explicit_graph.hpp"

#include <bit>

#include "cayley/matrix_space.hpp"

namespace cayley {

CayleyGraph CayleyGraph::build(int n, const FieldPtr& field, OracleOptions options) {
    Budget cap = options.budget;
    cap.max_elements = std::min(cap.max_elements, kMaxVertices);
    const MatrixSpace space(field, n, cap);
    const Field& f = *field;
    const std::uint64_t q = f.order();
    const std::size_t cells = static_cast<std::size_t>(n) * n;

    // Unit group as digit vectors.
    std::vector<Element> units;
    space.for_each(0, space.size(), [&](std::span<const Element> m, std::uint64_t) {
        ScratchMatrix s(n);
        if (kernel::invertible_in_place(f, n, s.load(m))) units.insert(units.end(), m.begin(), m.end());
    });
    const std::size_t unit_count = units.size() / cells;

    CayleyGraph graph(space.size());
    // N(u) = u + GL_n. Rows are disjoint, so workers never share a word.
    parallel_sum(0, space.size(), options.threads, [&](std::uint64_t lo, std::uint64_t hi) {
        space.for_each(lo, hi, [&](std::span<const Element> u, std::uint64_t index) {
            std::uint64_t* bits = graph.row(index);
            for (std::size_t g = 0; g < unit_count; ++g) {
                std::uint64_t target = 0;
                for (std::size_t i = cells; i-- > 0;) {
                    target = target * q + f.add(u[i], units[g * cells + i]).code;
                }
                bits[target / 64] |= std::uint64_t{1} << (target % 64);
            }
        });
        return std::uint64_t{0};
    });
    return graph;
}

std::uint64_t CayleyGraph::degree(std::uint64_t v) const noexcept {
    std::uint64_t d = 0;
    const auto* r = row(v);
    for (std::uint64_t w = 0; w < words_; ++w) d += static_cast<std::uint64_t>(std::popcount(r[w]));
    return d;
}

std::uint64_t CayleyGraph::edge_count() const noexcept {
    std::uint64_t twice = 0;
    for (std::uint64_t v = 0; v < vertices_; ++v) twice += degree(v);
    return twice / 2;
}

std::uint64_t CayleyGraph::common_neighbors(std::uint64_t u, std::uint64_t v) const noexcept {
    std::uint64_t c = 0;
    const auto* a = row(u);
    const auto* b = row(v);
    for (std::uint64_t w = 0; w < words_; ++w) c += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
    return c;
}

PairwiseSrgResult CayleyGraph::pairwise_srg() const {
    PairwiseSrgResult result;
    result.regular = true;
    result.degree = vertices_ > 0 ? degree(0) : 0;
    for (std::uint64_t v = 1; v < vertices_; ++v) result.regular = result.regular && degree(v) == result.degree;

    bool lambda_uniform = true, mu_uniform = true;
    bool seen_adjacent = false, seen_nonadjacent = false;
    std::uint64_t lambda = 0, mu = 0;
    for (std::uint64_t u = 0; u < vertices_; ++u) {
        for (std::uint64_t v = u + 1; v < vertices_; ++v) {
            const auto c = common_neighbors(u, v);
            if (adjacent(u, v)) {
                if (!seen_adjacent) lambda = c;
                lambda_uniform = lambda_uniform && c == lambda;
                seen_adjacent = true;
            } else {
                if (!seen_nonadjacent) mu = c;
                mu_uniform = mu_uniform && c == mu;
                seen_nonadjacent = true;
            }
        }
    }
    if (seen_adjacent && lambda_uniform) result.lambda = lambda;
    if (seen_nonadjacent && mu_uniform) result.mu = mu;

    if (!seen_nonadjacent) {
        result.note = "complete graph: no non-adjacent pairs";
    } else if (!seen_adjacent) {
        result.note = "empty graph: no adjacent pairs";
    }
    result.is_srg = result.regular && seen_adjacent && seen_nonadjacent && result.lambda && result.mu;
    return result;
}

}  // namespace cayley

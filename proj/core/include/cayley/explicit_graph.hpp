#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/budget.hpp"
#include "cayley/finite_field.hpp"

namespace cayley {

/// Verdict of the pair-by-pair strong regularity test.
struct PairwiseSrgResult {
    bool regular = false;
    std::uint64_t degree = 0;
    std::optional<std::uint64_t> lambda;  ///< set when every adjacent pair agrees
    std::optional<std::uint64_t> mu;      ///< set when every non-adjacent pair agrees
    bool is_srg = false;
    std::string note;
};

/// Cay(M_n(F), GL_n(F)) materialized as one adjacency bit set per vertex,
/// vertices numbered by MatrixIndex. Memory is v^2 bits.
class CayleyGraph {
public:
    static constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 16;

    /// Throws BudgetExceeded when q^(n^2) exceeds the budget or kMaxVertices.
    static CayleyGraph build(int n, const FieldPtr& field, OracleOptions options = {});

    [[nodiscard]] std::uint64_t vertex_count() const noexcept { return vertices_; }
    [[nodiscard]] std::uint64_t edge_count() const noexcept;
    [[nodiscard]] std::uint64_t degree(std::uint64_t v) const noexcept;
    [[nodiscard]] bool adjacent(std::uint64_t u, std::uint64_t v) const noexcept {
        return (row(u)[v / 64] >> (v % 64)) & 1U;
    }
    [[nodiscard]] std::uint64_t common_neighbors(std::uint64_t u, std::uint64_t v) const noexcept;

    /// Examines every unordered vertex pair. Complete graphs are not counted
    /// as strongly regular.
    [[nodiscard]] PairwiseSrgResult pairwise_srg() const;

private:
    explicit CayleyGraph(std::uint64_t vertices)
        : vertices_(vertices), words_((vertices + 63) / 64), bits_(vertices * words_, 0) {}

    [[nodiscard]] const std::uint64_t* row(std::uint64_t v) const noexcept { return bits_.data() + v * words_; }
    [[nodiscard]] std::uint64_t* row(std::uint64_t v) noexcept { return bits_.data() + v * words_; }

    std::uint64_t vertices_;
    std::uint64_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace cayley

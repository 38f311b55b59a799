#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cayley/census.hpp"
#include "cayley/matrix.hpp"

namespace cayley {

/// Edge relation of Cay(M_n(F), GL_n(F)): a - b invertible.
[[nodiscard]] bool adjacent(const Matrix& a, const Matrix& b);

/// |N(a) ∩ N(b)| by scanning every vertex of M_n.
[[nodiscard]] std::uint64_t common_neighbors_bruteforce(const Matrix& a, const Matrix& b,
                                                        OracleOptions options = {});

/// |N(a) ∩ N(b)| through the rank class of a - b: the count of
/// (diag(I_r, 0) + GL_n) ∩ GL_n with r = rank(a - b). Throws SameVertex when a == b.
[[nodiscard]] std::uint64_t common_neighbors_by_rank(const Matrix& a, const Matrix& b,
                                                     OracleOptions options = {});

enum class RegularityMode {
    single_vertex,  ///< one scan; translation makes every vertex look alike
    exhaustive,     ///< every vertex
    sampled,        ///< `samples` seeded random vertices
};

struct RegularityOptions {
    RegularityMode mode = RegularityMode::single_vertex;
    std::uint64_t seed = 0;
    std::uint64_t samples = 16;
};

struct RegularityResult {
    std::uint64_t degree = 0;  ///< degree of the first vertex checked
    bool uniform = false;      ///< every checked vertex had that degree
    std::uint64_t vertices_checked = 0;
};

/// Exhaustive mode charges q^(2n^2) against the budget.
[[nodiscard]] RegularityResult regularity_check(int n, const FieldPtr& field, RegularityOptions mode = {},
                                                OracleOptions options = {});

/// Two rank classes of non-adjacent pairs whose common-neighbor counts differ.
struct SrgWitness {
    int rank_a = 0;
    int rank_b = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
    /// Representatives compared against the zero vertex: diag(I_rank_a, 0), diag(I_rank_b, 0).
    std::string matrix_a;
    std::string matrix_b;
};

struct SrgReport {
    int n = 0;
    std::uint64_t q = 0;
    std::string field;  ///< designation, e.g. "2^2"
    std::uint64_t order = 0;
    std::uint64_t degree = 0;
    std::uint64_t lambda = 0;
    std::map<int, std::uint64_t> mu_by_rank;  ///< r in [1, n-1]
    bool is_srg = false;
    std::optional<SrgParameters> parameters;
    std::optional<SrgWitness> witness;
    /// Set for degenerate verdicts (complete graph).
    std::string note;
};

/// Decides strong regularity through rank classes: lambda is the rank-n
/// count, mu_r the rank-r count for r = 1..n-1. Strongly regular iff all mu_r
/// coincide. n = 1 is the complete graph K_q, reported as not strongly
/// regular. For n = 2 the parameters are cross-checked against
/// srg_parameters_2x2 (VerificationFailure on disagreement).
[[nodiscard]] SrgReport srg_decide(int n, const FieldPtr& field, OracleOptions options = {});

}  // namespace cayley

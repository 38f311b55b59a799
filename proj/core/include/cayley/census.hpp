#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/budget.hpp"
#include "cayley/finite_field.hpp"

namespace cayley {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod { formula, oracle };

[[nodiscard]] std::string to_string(CountMethod method);

/// One count of |(diag(I_r, 0) + GL_n) ∩ GL_n| over GF(q), with its provenance.
struct CensusRecord {
    int n = 0;
    std::uint64_t q = 0;
    int rank = 0;
    CountMethod method = CountMethod::formula;
    BigInt count;
};

// Closed forms. All arithmetic is exact; q only needs to be >= 2 unless noted.

/// |GL_n(GF(q))| = prod_{k=1..n} (q^n - q^(k-1)). Requires n >= 1 and q a prime power.
[[nodiscard]] BigInt gl_order(int n, std::uint64_t q);

/// Number e_n of linear derangements in M_n(GF(q)), from
/// e_n = e_{n-1} (q^n - 1) q^(n-1) + (-1)^n q^(n(n-1)/2) with e_0 = 1.
[[nodiscard]] BigInt derangement_count(int n, std::uint64_t q);

/// |(E_11 + GL_n) ∩ GL_n| = (q^n - q^(n-1) - 1) prod_{k=1..n-1} (q^n - q^k), n >= 1.
[[nodiscard]] BigInt rank_one_intersection(int n, std::uint64_t q);

/// |(diag(1,1,0,...,0) + GL_n) ∩ GL_n|
///   = (q^2n - q^(2n-1) - q^(2n-2) + q^(2n-3) + q^(n-1) - q^(n+1) + q) prod_{k=2..n-1} (q^n - q^k),
/// n >= 2.
[[nodiscard]] BigInt rank_two_intersection(int n, std::uint64_t q);

/// Closed form for rank r when one is known (r = 0, 1, 2 or n), else nullopt.
[[nodiscard]] std::optional<BigInt> intersection_formula(int r, int n, std::uint64_t q);

/// Counts M in M_n with M and M - diag(I_r, 0) both invertible, by full
/// enumeration. r = 0 gives |GL_n|, r = n gives e_n.
[[nodiscard]] std::uint64_t intersection_count_oracle(int r, int n, const FieldPtr& field,
                                                      OracleOptions options = {});

/// Counts linear derangements by enumerating M_n.
[[nodiscard]] std::uint64_t derangement_oracle(int n, const FieldPtr& field, OracleOptions options = {});

/// The rank-2 intersection split by the rank of a 2x2 leading block:
/// invertible block, zero block, rank-one block.
struct RankTwoCases {
    BigInt invertible_block;
    BigInt zero_block;
    BigInt rank_one_block;

    [[nodiscard]] BigInt total() const { return invertible_block + zero_block + rank_one_block; }
    friend bool operator==(const RankTwoCases&, const RankTwoCases&) = default;
};

/// Per-case closed forms, n >= 3. With P = prod_{k=2..n-1} (q^n - q^k):
///   invertible: e_2 q^(2n-4) P
///   zero:       (q^(n-2) - 1)(q^(n-2) - q) P
///   rank one:   [(q^2 - 1)(q^2 - q) - e_2 - 1] q^(n-2) (q^(n-2) - 1) P
[[nodiscard]] RankTwoCases rank_two_cases_formula(int n, std::uint64_t q);

/// Which matrix's leading 2x2 block classifies a counted M.
enum class LeadingBlockOf {
    inverse,  ///< the block of M^-1; this is the split the closed forms describe
    matrix,   ///< the block of M itself; same total, different split once q > 2
};

/// Enumerates M_n (n >= 3) and splits the rank-2 intersection by leading-block rank.
[[nodiscard]] RankTwoCases rank_two_cases_oracle(int n, const FieldPtr& field, OracleOptions options = {},
                                                 LeadingBlockOf basis = LeadingBlockOf::inverse);

/// (v, k, lambda, mu) of a strongly regular graph.
struct SrgParameters {
    BigInt v;
    BigInt k;
    BigInt lambda;
    BigInt mu;

    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters of the 2x2 unitary Cayley graph over GF(q):
/// (q^4, q^4 - q^3 - q^2 + q, q^4 - 2q^3 - q^2 + 3q, q^4 - 2q^3 + q).
[[nodiscard]] SrgParameters srg_parameters_2x2(std::uint64_t q);

[[nodiscard]] bool is_prime_power(std::uint64_t q) noexcept;

}  // namespace cayley

#include "cayley/census.hpp"

#include <array>

#include "cayley/matrix_space.hpp"

namespace cayley {

namespace {

BigInt power(std::uint64_t q, long e) {
    if (e < 0) throw InvalidArgument("negative exponent");
    return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
}

void require_q(std::uint64_t q) {
    if (q < 2) throw InvalidArgument("field order must be at least 2, got " + std::to_string(q));
}

void require_n(int n, int min) {
    if (n < min) {
        throw InvalidArgument("matrix side must be at least " + std::to_string(min) + ", got " +
                              std::to_string(n));
    }
}

// prod_{k=from..to} (q^n - q^k); 1 when the range is empty.
BigInt column_product(int n, std::uint64_t q, int from, int to) {
    BigInt product = 1;
    const BigInt qn = power(q, n);
    for (int k = from; k <= to; ++k) product *= qn - power(q, k);
    return product;
}

}  // namespace

std::string to_string(CountMethod method) {
    return method == CountMethod::formula ? "formula" : "oracle";
}

bool is_prime_power(std::uint64_t q) noexcept {
    if (q < 2) return false;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

BigInt gl_order(int n, std::uint64_t q) {
    require_n(n, 1);
    if (!is_prime_power(q)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return column_product(n, q, 0, n - 1);
}

BigInt derangement_count(int n, std::uint64_t q) {
    require_n(n, 0);
    require_q(q);
    BigInt e = 1;
    for (int m = 1; m <= n; ++m) {
        const BigInt sign_term = power(q, static_cast<long>(m) * (m - 1) / 2);
        e = e * (power(q, m) - 1) * power(q, m - 1) + (m % 2 == 0 ? sign_term : BigInt(-sign_term));
    }
    return e;
}

BigInt rank_one_intersection(int n, std::uint64_t q) {
    require_n(n, 1);
    require_q(q);
    return (power(q, n) - power(q, n - 1) - 1) * column_product(n, q, 1, n - 1);
}

BigInt rank_two_intersection(int n, std::uint64_t q) {
    require_n(n, 2);
    require_q(q);
    const BigInt leading = power(q, 2 * n) - power(q, 2 * n - 1) - power(q, 2 * n - 2) +
                           power(q, 2 * n - 3) + power(q, n - 1) - power(q, n + 1) + BigInt(q);
    return leading * column_product(n, q, 2, n - 1);
}

std::optional<BigInt> intersection_formula(int r, int n, std::uint64_t q) {
    require_n(n, 1);
    if (r < 0 || r > n) {
        throw InvalidArgument("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
    }
    if (r == 0) return gl_order(n, q);
    if (r == n) return derangement_count(n, q);
    if (r == 1) return rank_one_intersection(n, q);
    if (r == 2) return rank_two_intersection(n, q);
    return std::nullopt;
}

std::uint64_t intersection_count_oracle(int r, int n, const FieldPtr& field, OracleOptions options) {
    if (r < 0 || r > n) {
        throw InvalidArgument("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
    }
    const MatrixSpace space(field, n, options.budget);
    const Field& f = *field;
    return space.count_if(options.threads, [&f, n, r](std::span<const Element> m) {
        ScratchMatrix s(n);
        if (!kernel::invertible_in_place(f, n, s.load(m))) return false;
        auto shifted = s.load(m);
        for (int i = 0; i < r; ++i) shifted[i * n + i] = f.sub(shifted[i * n + i], Field::one());
        return kernel::invertible_in_place(f, n, shifted);
    });
}

std::uint64_t derangement_oracle(int n, const FieldPtr& field, OracleOptions options) {
    // M and M - I both invertible is exactly the derangement predicate.
    return intersection_count_oracle(n, n, field, options);
}

RankTwoCases rank_two_cases_formula(int n, std::uint64_t q) {
    require_n(n, 3);
    require_q(q);
    const BigInt product = column_product(n, q, 2, n - 1);
    const BigInt e2 = derangement_count(2, q);
    const BigInt qq = q;
    const BigInt m1 = (qq * qq - 1) * (qq * qq - qq);
    return {
        e2 * power(q, 2 * n - 4) * product,
        (power(q, n - 2) - 1) * (power(q, n - 2) - qq) * product,
        (m1 - e2 - 1) * power(q, n - 2) * (power(q, n - 2) - 1) * product,
    };
}

RankTwoCases rank_two_cases_oracle(int n, const FieldPtr& field, OracleOptions options,
                                   LeadingBlockOf basis) {
    require_n(n, 3);
    const MatrixSpace space(field, n, options.budget);
    const Field& f = *field;

    const auto by_block_rank = space.tally<3>(options.threads, [&](std::span<const Element> m) {
        ScratchMatrix s(n);
        std::array<Element, MatrixSpace::kMaxSide * MatrixSpace::kMaxSide> inv{};
        const std::span<Element> inv_view(inv.data(), m.size());
        if (!kernel::inverse_into(f, n, s.load(m), inv_view)) return -1;
        auto shifted = s.load(m);
        for (int i = 0; i < 2; ++i) shifted[i * n + i] = f.sub(shifted[i * n + i], Field::one());
        if (!kernel::invertible_in_place(f, n, shifted)) return -1;

        const std::span<const Element> source =
            basis == LeadingBlockOf::inverse ? std::span<const Element>(inv_view) : m;
        std::array<Element, 4> block{source[0], source[1], source[n], source[n + 1]};
        return kernel::rank_in_place(f, 2, block);
    });
    return {by_block_rank[2], by_block_rank[0], by_block_rank[1]};
}

SrgParameters srg_parameters_2x2(std::uint64_t q) {
    if (!is_prime_power(q)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    const BigInt x = q;
    const BigInt x2 = x * x, x3 = x2 * x, x4 = x3 * x;
    return {x4, x4 - x3 - x2 + x, x4 - 2 * x3 - x2 + 3 * x, x4 - 2 * x3 + x};
}

}  // namespace cayley

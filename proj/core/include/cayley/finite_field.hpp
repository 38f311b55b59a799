#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/budget.hpp"

namespace cayley {

/// A field element, identified by its code in [0, q). The code lists the
/// coefficients of the element's polynomial as base-p digits, constant term
/// first. Code 0 is zero and code 1 is one in every field.
struct Element {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(Element, Element) = default;
};

/// GF(p^k). Immutable once built; share it through FieldPtr.
///
/// Arithmetic does not range-check its operands: elements must come from
/// `element()`, `elements()` or earlier arithmetic on the same field. For
/// q <= 256 every operation is a table lookup.
class Field {
public:
    static constexpr std::uint32_t kTableLimit = 256;

    /// Builds GF(p^k). For k > 1 the modulus is the lexicographically smallest
    /// monic irreducible of degree k, coefficients compared from the top down.
    /// Throws NotPrime, InvalidDegree or BudgetExceeded (q over the budget).
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t k, Budget budget = {});

    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return k_; }
    [[nodiscard]] std::uint32_t order() const noexcept { return q_; }

    /// Modulus coefficients, constant term first, k + 1 entries. Empty for prime fields.
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// "p" for prime fields, "p^k" otherwise.
    [[nodiscard]] std::string designation() const;
    /// Human-readable modulus such as "x^2+x+1"; empty for prime fields.
    [[nodiscard]] std::string modulus_string() const;

    [[nodiscard]] static constexpr Element zero() noexcept { return {0}; }
    [[nodiscard]] static constexpr Element one() noexcept { return {1}; }

    /// Checked conversion from a code. Throws InvalidArgument when code >= q.
    [[nodiscard]] Element element(std::uint64_t code) const;
    [[nodiscard]] bool contains(Element a) const noexcept { return a.code < q_; }

    /// All q elements in ascending code order.
    [[nodiscard]] std::vector<Element> elements() const;

    [[nodiscard]] Element add(Element a, Element b) const noexcept {
        if (tabulated()) return {add_[index(a, b)]};
        if (k_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p_)};
        return slow_add(a, b);
    }
    [[nodiscard]] Element sub(Element a, Element b) const noexcept {
        if (tabulated()) return {sub_[index(a, b)]};
        if (k_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.code} + p_ - b.code) % p_)};
        return slow_add(a, slow_neg(b));
    }
    [[nodiscard]] Element neg(Element a) const noexcept {
        if (tabulated()) return {neg_[a.code]};
        if (k_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
        return slow_neg(a);
    }
    [[nodiscard]] Element mul(Element a, Element b) const noexcept {
        if (tabulated()) return {mul_[index(a, b)]};
        if (k_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.code} * b.code) % p_)};
        return slow_mul(a, b);
    }
    /// Multiplicative inverse. Throws SingularError for zero.
    [[nodiscard]] Element inv(Element a) const;

    /// Fields compare equal when characteristic, degree and modulus agree.
    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

private:
    Field(std::uint32_t p, std::uint32_t k, std::uint32_t q, std::vector<std::uint32_t> modulus);

    [[nodiscard]] bool tabulated() const noexcept { return !mul_.empty(); }
    [[nodiscard]] std::size_t index(Element a, Element b) const noexcept {
        return std::size_t{a.code} * q_ + b.code;
    }

    Element slow_add(Element a, Element b) const noexcept;
    Element slow_neg(Element a) const noexcept;
    Element slow_mul(Element a, Element b) const noexcept;
    Element slow_inv(Element a) const noexcept;

    void build_tables();

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;

    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> sub_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(std::uint32_t p, std::uint32_t k, Budget budget = {}) {
    return Field::make(p, k, budget);
}

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Trial division by every monic polynomial of degree <= deg/2.
/// `poly` lists coefficients constant term first. Throws NotMonic when the
/// leading coefficient is not 1, NotPrime for composite p, InvalidDegree for
/// constant polynomials.
[[nodiscard]] bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Parses "p^k" or a bare prime power "q" (e.g. "2^2", "4", "5").
[[nodiscard]] FieldPtr parse_field(std::string_view designation, Budget budget = {});

}  // namespace cayley

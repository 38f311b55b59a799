#include "cayley/finite_field.hpp"

#include <charconv>
#include <utility>

namespace cayley {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly digits(std::uint64_t code, std::uint32_t p, std::uint32_t k) {
    Poly d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
    std::uint64_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return static_cast<std::uint32_t>(code);
}

std::uint32_t parse_uint(std::string_view s, std::string_view designation) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidArgument("malformed field designation '" + std::string(designation) + "'");
    }
    return value;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    if (poly.size() < 2) throw InvalidDegree("irreducibility needs a polynomial of degree >= 1");
    if (poly.back() != 1) throw NotMonic("polynomial is not monic");
    for (auto c : poly) {
        if (c >= p) throw InvalidArgument("coefficient out of range for GF(" + std::to_string(p) + ")");
    }

    const Poly f(poly.begin(), poly.end());
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Every monic divisor of degree d: d free lower coefficients.
        const auto count = checked_pow(p, d).value();
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g = digits(t, p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(std::uint32_t p, std::uint32_t k, std::uint32_t q, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(q), modulus_(std::move(modulus)) {}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t k, Budget budget) {
    if (!is_prime(p)) throw NotPrime("characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidDegree("field degree must be at least 1");
    const auto q = checked_pow(p, k);
    budget.require(q, "field GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
    if (*q > (std::uint64_t{1} << 31)) {
        throw InvalidArgument("field order " + std::to_string(*q) + " exceeds 2^31");
    }

    Poly modulus;
    if (k > 1) {
        // Monic candidates in lexicographic order (top coefficient first) are
        // exactly the lower-coefficient codes in ascending numeric order.
        for (std::uint64_t t = 0; t < *q; ++t) {
            Poly candidate = digits(t, p, k);
            candidate.push_back(1);
            if (is_irreducible(candidate, p)) {
                modulus = std::move(candidate);
                break;
            }
        }
    }

    std::shared_ptr<Field> field(new Field(p, k, static_cast<std::uint32_t>(*q), std::move(modulus)));
    if (field->q_ <= kTableLimit) field->build_tables();
    return field;
}

void Field::build_tables() {
    const std::size_t q = q_;
    add_.resize(q * q);
    sub_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q);
    for (std::uint32_t a = 0; a < q_; ++a) {
        neg_[a] = static_cast<std::uint8_t>(slow_neg({a}).code);
        for (std::uint32_t b = 0; b < q_; ++b) {
            const std::size_t i = a * q + b;
            add_[i] = static_cast<std::uint8_t>(slow_add({a}, {b}).code);
            sub_[i] = static_cast<std::uint8_t>(slow_add({a}, slow_neg({b})).code);
            mul_[i] = static_cast<std::uint8_t>(slow_mul({a}, {b}).code);
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a) {
        for (std::uint32_t b = 1; b < q_; ++b) {
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
        }
    }
}

Element Field::slow_add(Element a, Element b) const noexcept {
    if (k_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p_)};
    std::uint64_t x = a.code, y = b.code, code = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        code += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return {static_cast<std::uint32_t>(code)};
}

Element Field::slow_neg(Element a) const noexcept {
    if (k_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
    std::uint64_t x = a.code, code = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint64_t d = x % p_;
        code += (d == 0 ? 0 : p_ - d) * place;
        x /= p_;
        place *= p_;
    }
    return {static_cast<std::uint32_t>(code)};
}

Element Field::slow_mul(Element a, Element b) const noexcept {
    if (k_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.code} * b.code) % p_)};
    const Poly x = digits(a.code, p_, k_);
    const Poly y = digits(b.code, p_, k_);
    Poly product(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        for (std::uint32_t j = 0; j < k_; ++j) {
            product[i + j] =
                static_cast<std::uint32_t>((product[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
        }
    }
    return {encode(poly_mod(std::move(product), modulus_, p_), p_)};
}

Element Field::slow_inv(Element a) const noexcept {
    // a^(q-2) by square-and-multiply.
    Element result = one();
    Element base = a;
    for (std::uint64_t e = q_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

Element Field::inv(Element a) const {
    if (a.code == 0) throw SingularError("inverse of zero in GF(" + designation() + ")");
    if (tabulated()) return {inv_[a.code]};
    return slow_inv(a);
}

Element Field::element(std::uint64_t code) const {
    if (code >= q_) {
        throw InvalidArgument("element code " + std::to_string(code) + " out of range for GF(" +
                              designation() + ")");
    }
    return {static_cast<std::uint32_t>(code)};
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i].code = i;
    return out;
}

std::string Field::designation() const {
    if (k_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(k_);
}

std::string Field::modulus_string() const {
    std::string out;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        const auto c = modulus_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

FieldPtr parse_field(std::string_view designation, Budget budget) {
    const auto caret = designation.find('^');
    if (caret != std::string_view::npos) {
        const auto p = parse_uint(designation.substr(0, caret), designation);
        const auto k = parse_uint(designation.substr(caret + 1), designation);
        return Field::make(p, k, budget);
    }
    const auto q = parse_uint(designation, designation);
    if (q < 2) throw NotPrime("field order " + std::to_string(q) + " is not a prime power");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0;
    for (std::uint32_t rest = q; rest > 1; rest /= p) {
        if (rest % p != 0) {
            throw NotPrime("field order " + std::to_string(q) + " is not a prime power");
        }
        ++k;
    }
    return Field::make(p, k, budget);
}

}  // namespace cayley

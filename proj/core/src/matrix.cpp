#include "cayley/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace cayley {

namespace {

std::size_t area(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }

void require_size(int n) {
    if (n < 1) throw InvalidArgument("matrix side must be at least 1, got " + std::to_string(n));
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(strip(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// Row-major scratch copy for the elimination kernels.
std::vector<Element> scratch(const Matrix& a) { return {a.entries().begin(), a.entries().end()}; }

void swap_rows(std::span<Element> a, int n, int r1, int r2) {
    if (r1 == r2) return;
    std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(r1) * n,
                     a.begin() + static_cast<std::ptrdiff_t>(r1 + 1) * n,
                     a.begin() + static_cast<std::ptrdiff_t>(r2) * n);
}

void swap_columns(std::span<Element> a, int n, int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < n; ++i) std::swap(a[i * n + c1], a[i * n + c2]);
}

// row[dst] += factor * row[src]
void add_row_multiple(const Field& f, std::span<Element> a, int n, int dst, int src, Element factor) {
    for (int j = 0; j < n; ++j) {
        a[dst * n + j] = f.add(a[dst * n + j], f.mul(factor, a[src * n + j]));
    }
}

// col[dst] += factor * col[src]
void add_column_multiple(const Field& f, std::span<Element> a, int n, int dst, int src,
                         Element factor) {
    for (int i = 0; i < n; ++i) {
        a[i * n + dst] = f.add(a[i * n + dst], f.mul(factor, a[i * n + src]));
    }
}

void scale_row(const Field& f, std::span<Element> a, int n, int row, Element factor) {
    for (int j = 0; j < n; ++j) a[row * n + j] = f.mul(factor, a[row * n + j]);
}

}  // namespace

namespace kernel {

int rank_in_place(const Field& f, int n, std::span<Element> a) noexcept {
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pivot = r;
        while (pivot < n && a[pivot * n + c].code == 0) ++pivot;
        if (pivot == n) continue;
        swap_rows(a, n, r, pivot);
        const Element pinv = f.inv(a[r * n + c]);
        for (int i = r + 1; i < n; ++i) {
            const Element x = a[i * n + c];
            if (x.code == 0) continue;
            const Element factor = f.neg(f.mul(x, pinv));
            for (int j = c; j < n; ++j) {
                a[i * n + j] = f.add(a[i * n + j], f.mul(factor, a[r * n + j]));
            }
        }
        ++r;
    }
    return r;
}

bool invertible_in_place(const Field& f, int n, std::span<Element> a) noexcept {
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        while (pivot < n && a[pivot * n + c].code == 0) ++pivot;
        if (pivot == n) return false;
        swap_rows(a, n, c, pivot);
        const Element pinv = f.inv(a[c * n + c]);
        for (int i = c + 1; i < n; ++i) {
            const Element x = a[i * n + c];
            if (x.code == 0) continue;
            const Element factor = f.neg(f.mul(x, pinv));
            for (int j = c + 1; j < n; ++j) {
                a[i * n + j] = f.add(a[i * n + j], f.mul(factor, a[c * n + j]));
            }
        }
    }
    return true;
}

Element determinant_in_place(const Field& f, int n, std::span<Element> a) noexcept {
    Element det = Field::one();
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        while (pivot < n && a[pivot * n + c].code == 0) ++pivot;
        if (pivot == n) return Field::zero();
        if (pivot != c) {
            swap_rows(a, n, c, pivot);
            det = f.neg(det);
        }
        const Element p = a[c * n + c];
        det = f.mul(det, p);
        const Element pinv = f.inv(p);
        for (int i = c + 1; i < n; ++i) {
            const Element x = a[i * n + c];
            if (x.code == 0) continue;
            const Element factor = f.neg(f.mul(x, pinv));
            for (int j = c + 1; j < n; ++j) {
                a[i * n + j] = f.add(a[i * n + j], f.mul(factor, a[c * n + j]));
            }
        }
    }
    return det;
}

bool inverse_into(const Field& f, int n, std::span<Element> a, std::span<Element> out) noexcept {
    std::fill(out.begin(), out.end(), Field::zero());
    for (int i = 0; i < n; ++i) out[i * n + i] = Field::one();
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        while (pivot < n && a[pivot * n + c].code == 0) ++pivot;
        if (pivot == n) return false;
        swap_rows(a, n, c, pivot);
        swap_rows(out, n, c, pivot);
        const Element pinv = f.inv(a[c * n + c]);
        scale_row(f, a, n, c, pinv);
        scale_row(f, out, n, c, pinv);
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i * n + c].code == 0) continue;
            const Element factor = f.neg(a[i * n + c]);
            add_row_multiple(f, a, n, i, c, factor);
            add_row_multiple(f, out, n, i, c, factor);
        }
    }
    return true;
}

}  // namespace kernel

Matrix::Matrix(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
    if (!field_) throw InvalidArgument("matrix requires a field");
    require_size(n);
    entries_.assign(area(n), Field::zero());
}

Matrix::Matrix(FieldPtr field, int n, std::vector<Element> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
    if (!field_) throw InvalidArgument("matrix requires a field");
    require_size(n);
    if (entries_.size() != area(n)) {
        throw InvalidArgument("expected " + std::to_string(area(n)) + " entries, got " +
                              std::to_string(entries_.size()));
    }
    for (auto e : entries_) {
        if (!field_->contains(e)) {
            throw InvalidArgument("entry code " + std::to_string(e.code) + " outside GF(" +
                                  field_->designation() + ")");
        }
    }
}

Matrix Matrix::identity(FieldPtr field, int n) { return canonical_rank_matrix(std::move(field), n, n); }

Matrix Matrix::unit(FieldPtr field, int n, int i, int j) {
    Matrix m(std::move(field), n);
    if (i < 0 || i >= n || j < 0 || j >= n) throw InvalidArgument("matrix unit position out of range");
    m.entries_[static_cast<std::size_t>(i) * n + j] = Field::one();
    return m;
}

Matrix Matrix::from_literal(FieldPtr field, std::string_view literal) {
    if (!field) throw InvalidArgument("matrix requires a field");
    const auto rows = split(literal, ';');
    const int n = static_cast<int>(rows.size());
    std::vector<Element> entries;
    entries.reserve(area(n));
    for (const auto row : rows) {
        const auto cells = split(row, ',');
        if (static_cast<int>(cells.size()) != n) {
            throw InvalidArgument("matrix literal '" + std::string(literal) + "' is not square");
        }
        for (const auto cell : cells) {
            std::uint64_t code = 0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), code);
            if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
                throw InvalidArgument("bad matrix entry '" + std::string(cell) + "'");
            }
            entries.push_back(field->element(code));
        }
    }
    return Matrix(std::move(field), n, std::move(entries));
}

void Matrix::set(int i, int j, Element value) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InvalidArgument("matrix position out of range");
    if (!field_->contains(value)) throw InvalidArgument("entry outside the matrix field");
    entries_[static_cast<std::size_t>(i) * n_ + j] = value;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) t.entries_[static_cast<std::size_t>(j) * n_ + i] = (*this)(i, j);
    }
    return t;
}

std::string Matrix::to_literal() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i > 0) out += ';';
        for (int j = 0; j < n_; ++j) {
            if (j > 0) out += ',';
            out += std::to_string((*this)(i, j).code);
        }
    }
    return out;
}

void Matrix::require_compatible(const Matrix& other) const {
    if (n_ != other.n_) {
        throw Mismatch("matrix sizes differ: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
    if (field_ != other.field_ && !(*field_ == *other.field_)) {
        throw Mismatch("matrices over different fields: GF(" + field_->designation() + ") vs GF(" +
                       other.field_->designation() + ")");
    }
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_compatible(b);
    const Field& f = a.field();
    std::vector<Element> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.entries()[i], b.entries()[i]);
    return Matrix(a.field_ptr(), a.size(), std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_compatible(b);
    const Field& f = a.field();
    std::vector<Element> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.entries()[i], b.entries()[i]);
    return Matrix(a.field_ptr(), a.size(), std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_compatible(b);
    const Field& f = a.field();
    const int n = a.size();
    std::vector<Element> out(area(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Element sum = Field::zero();
            for (int k = 0; k < n; ++k) sum = f.add(sum, f.mul(a(i, k), b(k, j)));
            out[static_cast<std::size_t>(i) * n + j] = sum;
        }
    }
    return Matrix(a.field_ptr(), n, std::move(out));
}

Matrix scalar_mul(Element c, const Matrix& a) {
    const Field& f = a.field();
    if (!f.contains(c)) throw Mismatch("scalar outside the matrix field");
    std::vector<Element> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(c, a.entries()[i]);
    return Matrix(a.field_ptr(), a.size(), std::move(out));
}

Matrix canonical_rank_matrix(FieldPtr field, int n, int r) {
    if (r < 0 || r > n) {
        throw InvalidArgument("rank " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
    }
    Matrix m(std::move(field), n);
    for (int i = 0; i < r; ++i) m.set(i, i, Field::one());
    return m;
}

int rank(const Matrix& a) {
    auto s = scratch(a);
    return kernel::rank_in_place(a.field(), a.size(), s);
}

Element determinant(const Matrix& a) {
    auto s = scratch(a);
    return kernel::determinant_in_place(a.field(), a.size(), s);
}

bool is_invertible(const Matrix& a) { return rank(a) == a.size(); }

bool is_invertible_by_determinant(const Matrix& a) { return determinant(a) != Field::zero(); }

Matrix inverse(const Matrix& a) {
    auto m = scratch(a);
    std::vector<Element> inv(m.size());
    if (!kernel::inverse_into(a.field(), a.size(), m, inv)) throw SingularError("matrix is singular");
    return Matrix(a.field_ptr(), a.size(), std::move(inv));
}

RankFactorization rank_factorize(const Matrix& a) {
    const Field& f = a.field();
    const int n = a.size();
    auto m = scratch(a);
    const Matrix id = Matrix::identity(a.field_ptr(), n);
    std::vector<Element> p(id.entries().begin(), id.entries().end());
    std::vector<Element> q = p;

    int r = 0;
    for (; r < n; ++r) {
        // First nonzero of the trailing block, scanning columns left to right
        // and each column top to bottom.
        int pr = -1, pc = -1;
        for (int c = r; c < n && pr < 0; ++c) {
            for (int i = r; i < n; ++i) {
                if (m[i * n + c].code != 0) {
                    pr = i;
                    pc = c;
                    break;
                }
            }
        }
        if (pr < 0) break;

        swap_rows(m, n, r, pr);
        swap_rows(p, n, r, pr);
        swap_columns(m, n, r, pc);
        swap_columns(q, n, r, pc);

        const Element pinv = f.inv(m[r * n + r]);
        scale_row(f, m, n, r, pinv);
        scale_row(f, p, n, r, pinv);

        for (int i = 0; i < n; ++i) {
            if (i == r || m[i * n + r].code == 0) continue;
            const Element factor = f.neg(m[i * n + r]);
            add_row_multiple(f, m, n, i, r, factor);
            add_row_multiple(f, p, n, i, r, factor);
        }
        // Column r is now e_r, so clearing row r to the right touches no other row.
        for (int j = r + 1; j < n; ++j) {
            if (m[r * n + j].code == 0) continue;
            const Element factor = f.neg(m[r * n + j]);
            add_column_multiple(f, m, n, j, r, factor);
            add_column_multiple(f, q, n, j, r, factor);
        }
    }
    return {Matrix(a.field_ptr(), n, std::move(p)), Matrix(a.field_ptr(), n, std::move(q)), r};
}

bool is_linear_derangement(const Matrix& a) {
    return is_invertible(a) && is_invertible(a - Matrix::identity(a.field_ptr(), a.size()));
}

bool has_singular_unit_shift(const Matrix& a) {
    return is_invertible(a) && !is_invertible(a + Matrix::unit(a.field_ptr(), a.size(), 0, 0));
}

bool unit_shift_column_criterion(const Matrix& a) {
    const Field& f = a.field();
    const int n = a.size();

    // (v, a_2, ..., a_n) with v = e_1.
    Matrix replaced = a;
    for (int i = 0; i < n; ++i) replaced.set(i, 0, i == 0 ? Field::one() : Field::zero());
    if (determinant(replaced) == Field::zero()) return false;

    // span(a_2..a_n) contains a_1 + v iff appending it leaves the rank unchanged.
    // Column 0 holds the candidate (or zero), the rest are a_2..a_n.
    Matrix rest = a;
    Matrix extended = a;
    for (int i = 0; i < n; ++i) {
        rest.set(i, 0, Field::zero());
        extended.set(i, 0, i == 0 ? f.add(a(0, 0), Field::one()) : a(i, 0));
    }
    return rank(rest) == rank(extended);
}

MatrixIndex matrix_to_index(const Matrix& a) {
    const std::uint64_t q = a.field().order();
    std::uint64_t value = 0;
    const auto entries = a.entries();
    for (std::size_t i = entries.size(); i-- > 0;) value = value * q + entries[i].code;
    return {value};
}

Matrix index_to_matrix(MatrixIndex index, FieldPtr field, int n) {
    if (!field) throw InvalidArgument("matrix requires a field");
    require_size(n);
    const std::uint64_t q = field->order();
    const auto total = checked_pow(q, area(n));
    if (total && index.value >= *total) {
        throw InvalidArgument("matrix index " + std::to_string(index.value) + " out of range [0, " +
                              std::to_string(*total) + ")");
    }
    std::vector<Element> entries(area(n));
    std::uint64_t v = index.value;
    for (auto& e : entries) {
        e.code = static_cast<std::uint32_t>(v % q);
        v /= q;
    }
    return Matrix(std::move(field), n, std::move(entries));
}

}  // namespace cayley

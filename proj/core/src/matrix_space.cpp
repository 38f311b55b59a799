#include "cayley/matrix_space.hpp"

#include <utility>

namespace cayley {

MatrixSpace::MatrixSpace(FieldPtr field, int n, Budget budget) : field_(std::move(field)), n_(n) {
    if (!field_) throw InvalidArgument("matrix space requires a field");
    if (n < 1) throw InvalidArgument("matrix side must be at least 1, got " + std::to_string(n));
    q_ = field_->order();
    const auto required = checked_pow(q_, static_cast<std::uint64_t>(n) * n);
    budget.require(required, "enumerating M_" + std::to_string(n) + "(GF(" + field_->designation() + "))");
    if (n > kMaxSide) throw InvalidArgument("matrix side above " + std::to_string(kMaxSide));
    size_ = *required;
}

}  // namespace cayley

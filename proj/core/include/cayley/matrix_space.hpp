#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <span>
#include <thread>
#include <vector>

#include "cayley/matrix.hpp"

namespace cayley {

/// Runs `chunk(lo, hi)` over [begin, end) split into contiguous chunks, one
/// per worker, and adds the returned tallies slot by slot. Results depend
/// only on the range, never on `threads`.
template <std::size_t Slots, class ChunkFn>
std::array<std::uint64_t, Slots> parallel_tally(std::uint64_t begin, std::uint64_t end, unsigned threads,
                                                ChunkFn chunk) {
    std::array<std::uint64_t, Slots> sum{};
    if (end <= begin) return sum;
    const std::uint64_t total = end - begin;
    const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, total);
    if (workers == 1) return chunk(begin, end);

    std::vector<std::array<std::uint64_t, Slots>> partial(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t lo = begin + total * w / workers;
            const std::uint64_t hi = begin + total * (w + 1) / workers;
            pool.emplace_back([&partial, &chunk, w, lo, hi] { partial[w] = chunk(lo, hi); });
        }
    }
    for (const auto& p : partial) {
        for (std::size_t i = 0; i < Slots; ++i) sum[i] += p[i];
    }
    return sum;
}

template <class ChunkFn>
std::uint64_t parallel_sum(std::uint64_t begin, std::uint64_t end, unsigned threads, ChunkFn chunk) {
    return parallel_tally<1>(begin, end, threads, [&chunk](std::uint64_t lo, std::uint64_t hi) {
        return std::array<std::uint64_t, 1>{chunk(lo, hi)};
    })[0];
}

/// std::thread::hardware_concurrency with a floor of 1.
[[nodiscard]] inline unsigned default_thread_count() noexcept {
    return std::max(1u, std::thread::hardware_concurrency());
}

/// All of M_n(GF(q)), enumerated in MatrixIndex order.
class MatrixSpace {
public:
    /// Largest side the odometer keeps on the stack; any space within a
    /// 64-bit budget is far smaller.
    static constexpr int kMaxSide = 8;

    /// Throws BudgetExceeded when q^(n^2) is over the budget.
    MatrixSpace(FieldPtr field, int n, Budget budget = {});

    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
    [[nodiscard]] int side() const noexcept { return n_; }
    [[nodiscard]] const Field& field() const noexcept { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }

    [[nodiscard]] Matrix at(MatrixIndex index) const { return index_to_matrix(index, field_, n_); }

    /// Calls fn(entries, index) for every index in [lo, hi), with `entries`
    /// the row-major codes of that matrix. The span is only valid during the call.
    template <class Fn>
    void for_each(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        hi = std::min(hi, size_);
        if (lo >= hi) return;
        const std::size_t cells = static_cast<std::size_t>(n_) * n_;
        std::array<Element, kMaxSide * kMaxSide> buf{};
        std::uint64_t v = lo;
        for (std::size_t i = 0; i < cells; ++i) {
            buf[i].code = static_cast<std::uint32_t>(v % q_);
            v /= q_;
        }
        const std::span<const Element> view(buf.data(), cells);
        for (std::uint64_t index = lo;;) {
            fn(view, index);
            if (++index == hi) break;
            for (std::size_t i = 0; i < cells; ++i) {
                if (++buf[i].code < q_) break;
                buf[i].code = 0;
            }
        }
    }

    /// Tallies classify(entries) over the whole space in parallel. classify
    /// returns a slot in [0, Slots) or -1 to skip the matrix.
    template <std::size_t Slots, class Classify>
    std::array<std::uint64_t, Slots> tally(unsigned threads, Classify classify) const {
        return parallel_tally<Slots>(0, size_, threads, [&](std::uint64_t lo, std::uint64_t hi) {
            std::array<std::uint64_t, Slots> local{};
            for_each(lo, hi, [&](std::span<const Element> m, std::uint64_t) {
                const int slot = classify(m);
                if (slot >= 0) ++local[static_cast<std::size_t>(slot)];
            });
            return local;
        });
    }

    /// Counts matrices in the whole space satisfying pred(entries), in parallel.
    template <class Pred>
    std::uint64_t count_if(unsigned threads, Pred pred) const {
        return parallel_sum(0, size_, threads, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t local = 0;
            for_each(lo, hi, [&](std::span<const Element> m, std::uint64_t) {
                if (pred(m)) ++local;
            });
            return local;
        });
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Matrix;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const MatrixSpace* space, std::uint64_t index) : space_(space), index_(index) {}

        Matrix operator*() const { return space_->at({index_}); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++index_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const MatrixSpace* space_ = nullptr;
        std::uint64_t index_ = 0;
    };

    [[nodiscard]] iterator begin() const { return {this, 0}; }
    [[nodiscard]] iterator end() const { return {this, size_}; }

private:
    FieldPtr field_;
    int n_;
    std::uint32_t q_;
    std::uint64_t size_;
};

/// Owns a stack copy of an n*n matrix for the destructive kernels.
class ScratchMatrix {
public:
    explicit ScratchMatrix(int n) : n_(n) {}

    std::span<Element> load(std::span<const Element> src) {
        std::copy(src.begin(), src.end(), buf_.begin());
        return {buf_.data(), src.size()};
    }
    /// Loads src - shift.
    std::span<Element> load_difference(const Field& f, std::span<const Element> src,
                                       std::span<const Element> shift) {
        for (std::size_t i = 0; i < src.size(); ++i) buf_[i] = f.sub(src[i], shift[i]);
        return {buf_.data(), src.size()};
    }
    [[nodiscard]] int side() const noexcept { return n_; }

private:
    int n_;
    std::array<Element, MatrixSpace::kMaxSide * MatrixSpace::kMaxSide> buf_{};
};

}  // namespace cayley

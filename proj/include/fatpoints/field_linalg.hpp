#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Exact dense linear algebra over a fixed odd prime field.  Everything here
// is plain Gaussian elimination with first-nonzero pivoting; matrices in this
// project stay small (a few hundred rows/cols) and determinism matters more
// than speed.

namespace fatpoints {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL; // 2^31 - 1

class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return std::uint32_t(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : std::uint32_t(a + p_ - b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : std::uint32_t(p_ - a); }
    std::uint32_t inv(std::uint32_t a) const;          // a != 0
    std::uint32_t from_int(long long v) const;         // reduce into [0, p)

  private:
    std::uint64_t p_;
};

// Dense row-major matrix over a prime field.  Immutable after construction
// by convention: rank/kernel_basis work on internal copies.
class PrimeMatrix {
  public:
    PrimeMatrix(PrimeField f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { a_[r * cols_ + c] = v; }

    const std::uint32_t* row(std::size_t r) const { return a_.data() + r * cols_; }
    std::uint32_t* row(std::size_t r) { return a_.data() + r * cols_; }

  private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

std::size_t rank(const PrimeMatrix& m);

// Basis of {v : m v = 0}, one vector per non-pivot column, pivot-normalized
// from the reduced echelon form so the result is deterministic.
std::vector<std::vector<std::uint32_t>> kernel_basis(const PrimeMatrix& m);

// Vertical concatenation.  cols_if_empty names the column count when the
// list is empty; all matrices must agree on cols (and field).
PrimeMatrix stack(const std::vector<PrimeMatrix>& ms, long long cols_if_empty = -1);

// Incremental row-echelon accumulator: used to test membership of vectors in
// a growing row span (minimal-generator and syzygy selection).
class RowSpan {
  public:
    RowSpan(PrimeField f, std::size_t cols) : field_(f), cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    // Reduces v against the span; returns true (and absorbs the residual)
    // if v was independent of the current span.
    bool absorb(std::vector<std::uint32_t> v);

    // True iff v lies in the current row span.
    bool contains(std::vector<std::uint32_t> v) const;

  private:
    void reduce(std::vector<std::uint32_t>& v) const;

    PrimeField field_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_; // echelon rows, pivot col order
    std::vector<std::size_t> pivots_;
};

} // namespace fatpoints

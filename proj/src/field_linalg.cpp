#include "fatpoints/field_linalg.hpp"

#include <stdexcept>

namespace fatpoints {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Reduced row echelon form in place; returns the pivot column of each
// echelon row.  First nonzero entry is the pivot.
std::vector<std::size_t> rref(PrimeMatrix& m) {
    const PrimeField& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = c; j < m.cols(); ++j) {
                std::uint32_t t = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, t);
            }
        const std::uint32_t piv_inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m.set(r, j, F.mul(m.at(r, j), piv_inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const std::uint32_t f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p <= 3 || p >= (1ULL << 31))
        throw std::invalid_argument("PrimeField: p must be an odd prime in (3, 2^31)");
    if (!is_prime(p))
        throw std::invalid_argument("PrimeField: p is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField::inv(0)");
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = (long long)p_, new_r = (long long)a;
    while (new_r != 0) {
        const long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += (long long)p_;
    return std::uint32_t(t);
}

std::uint32_t PrimeField::from_int(long long v) const {
    long long m = v % (long long)p_;
    if (m < 0) m += (long long)p_;
    return std::uint32_t(m);
}

std::size_t rank(const PrimeMatrix& m) {
    PrimeMatrix work = m;
    return rref(work).size();
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const PrimeMatrix& m) {
    const PrimeField& F = m.field();
    PrimeMatrix work = m;
    const std::vector<std::size_t> pivots = rref(work);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(work.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

PrimeMatrix stack(const std::vector<PrimeMatrix>& ms, long long cols_if_empty) {
    if (ms.empty()) {
        if (cols_if_empty < 0)
            throw std::invalid_argument("stack: empty list needs a declared column count");
        return PrimeMatrix(PrimeField(), 0, std::size_t(cols_if_empty));
    }
    const std::size_t cols = ms.front().cols();
    std::size_t total_rows = 0;
    for (const auto& m : ms) {
        if (m.cols() != cols) throw std::invalid_argument("stack: column counts differ");
        if (m.field().p() != ms.front().field().p())
            throw std::invalid_argument("stack: fields differ");
        total_rows += m.rows();
    }
    PrimeMatrix out(ms.front().field(), total_rows, cols);
    std::size_t r = 0;
    for (const auto& m : ms)
        for (std::size_t i = 0; i < m.rows(); ++i, ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out.set(r, c, m.at(i, c));
    return out;
}

void RowSpan::reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint32_t f = v[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = pivots_[i]; j < cols_; ++j)
            v[j] = field_.sub(v[j], field_.mul(f, rows_[i][j]));
    }
}

bool RowSpan::absorb(std::vector<std::uint32_t> v) {
    if (v.size() != cols_) throw std::invalid_argument("RowSpan::absorb: size mismatch");
    reduce(v);
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) { piv = j; break; }
    if (piv == cols_) return false;
    const std::uint32_t inv = field_.inv(v[piv]);
    for (std::size_t j = piv; j < cols_; ++j) v[j] = field_.mul(v[j], inv);
    // keep rows sorted by pivot so reduce stays one-pass
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

bool RowSpan::contains(std::vector<std::uint32_t> v) const {
    if (v.size() != cols_) throw std::invalid_argument("RowSpan::contains: size mismatch");
    reduce(v);
    for (std::uint32_t x : v)
        if (x != 0) return false;
    return true;
}

} // namespace fatpoints

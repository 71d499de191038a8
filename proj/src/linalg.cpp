#include "canonical24/linalg.hpp"

#include <utility>

namespace canonical24 {

namespace {

void divide_content(IntegerVector& v)
{
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<IntegerVector> integer_rows(const RationalMatrix& m)
{
    std::vector<IntegerVector> out;
    out.reserve(m.size());
    for (const auto& row : m)
        out.push_back(primitive_integer_vector(row));
    return out;
}

}  // namespace

IntegerVector primitive_integer_vector(const std::vector<Rational>& v)
{
    Integer den = 1;
    for (const auto& x : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(Integer(x.get_num() * (den / x.get_den())));
    divide_content(out);
    return out;
}

std::size_t bareiss_rank(const RationalMatrix& m)
{
    std::vector<IntegerVector> a = integer_rows(m);
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

RationalMatrix transpose(const RationalMatrix& m)
{
    if (m.empty())
        return {};
    RationalMatrix t(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

std::size_t bareiss_rank_transposed(const RationalMatrix& m)
{
    return bareiss_rank(transpose(m));
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t columns)
{
    RationalMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[row], a[p]);
        const Rational inv = 1 / a[row][col];
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < columns; ++c)
                a[r][c] -= f * a[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(columns);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            v[pivot_cols[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool IncrementalEchelon::add(const std::vector<Rational>& v)
{
    return add(primitive_integer_vector(v));
}

bool IncrementalEchelon::add(IntegerVector v)
{
    if (v.size() != length_)
        throw DomainError("IncrementalEchelon::add: length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p] == 0)
            continue;
        const IntegerVector& row = rows_[k];
        Integer g;
        mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
        const Integer scale_v = row[p] / g;
        const Integer scale_row = v[p] / g;
        for (std::size_t c = 0; c < length_; ++c) {
            if (row[c] == 0) {
                if (v[c] != 0)
                    v[c] *= scale_v;
                continue;
            }
            v[c] = scale_v * v[c] - scale_row * row[c];
        }
        divide_content(v);
    }
    std::size_t pivot = 0;
    while (pivot < length_ && v[pivot] == 0)
        ++pivot;
    if (pivot == length_)
        return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace canonical24

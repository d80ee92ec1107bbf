/**
 * Dense bit-packed matrices over GF(2).
 */
#ifndef ANTIPODAL_GF2_HPP
#define ANTIPODAL_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace antipodal {

class GF2Matrix
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    GF2Matrix() = default;

    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + word_bits - 1) / word_bits), words_(rows * stride_, 0)
    {}

    static GF2Matrix identity(std::size_t n)
    {
        GF2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const
    {
        check(r, c);
        return (words_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value = true)
    {
        check(r, c);
        Word& w = words_[r * stride_ + c / word_bits];
        const Word bit = Word{1} << (c % word_bits);
        if (value) w |= bit; else w &= ~bit;
    }

    void flip(std::size_t r, std::size_t c)
    {
        check(r, c);
        words_[r * stride_ + c / word_bits] ^= Word{1} << (c % word_bits);
    }

    std::size_t row_weight(std::size_t r) const
    {
        std::size_t n = 0;
        for (std::size_t w = 0; w < stride_; ++w) n += static_cast<std::size_t>(std::popcount(words_[r * stride_ + w]));
        return n;
    }

    std::size_t column_weight(std::size_t c) const
    {
        std::size_t n = 0;
        for (std::size_t r = 0; r < rows_; ++r) n += get(r, c);
        return n;
    }

    bool is_zero() const noexcept
    {
        for (Word w : words_) if (w) return false;
        return true;
    }

    /// Product over GF(2).
    friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("GF2Matrix: inner dimensions differ");
        GF2Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a.get(r, k))
                    for (std::size_t w = 0; w < b.stride_; ++w)
                        out.words_[r * out.stride_ + w] ^= b.words_[k * b.stride_ + w];
        return out;
    }

    GF2Matrix transposed() const
    {
        GF2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r);
        return t;
    }

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    friend std::size_t gf2_rank(const GF2Matrix& m);

    void check(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("GF2Matrix: index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> words_;
};

/**
 * Rank over GF(2) by forward elimination on packed rows.
 *
 * Rows are reduced one at a time against the pivot rows found so far,
 * keyed by their first nonzero column; a row that survives reduction
 * becomes a new pivot. Each pivot's leading column is zero in every later
 * pivot, so the survivors are linearly independent.
 */
inline std::size_t gf2_rank(const GF2Matrix& m)
{
    using Word = GF2Matrix::Word;
    const std::size_t stride = m.stride_;
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of_col(m.cols_, npos);
    std::vector<Word> pivots;
    pivots.reserve(std::min(m.rows_, m.cols_) * stride);
    std::vector<Word> row(stride);
    std::size_t rank = 0;

    for (std::size_t r = 0; r < m.rows_ && rank < m.cols_; ++r)
    {
        std::copy_n(m.words_.begin() + static_cast<std::ptrdiff_t>(r * stride), stride, row.begin());
        std::size_t w = 0;
        while (true)
        {
            while (w < stride && row[w] == 0) ++w;
            if (w == stride) break;
            const std::size_t lead = w * GF2Matrix::word_bits + static_cast<std::size_t>(std::countr_zero(row[w]));
            const std::size_t p = pivot_of_col[lead];
            if (p == npos)
            {
                pivot_of_col[lead] = rank++;
                pivots.insert(pivots.end(), row.begin(), row.end());
                break;
            }
            // Pivot rows are zero below their lead word, so start there.
            const Word* prow = pivots.data() + p * stride;
            for (std::size_t i = w; i < stride; ++i) row[i] ^= prow[i];
        }
    }
    return rank;
}

} // namespace antipodal

#endif // ANTIPODAL_GF2_HPP

// Exact linear algebra over GF(2) on word-packed rows.
//
// Everything here works on ground sets of at most 64 columns; the intended
// scale is much smaller (exhaustive walks are guarded at dimension 24 and
// partition scans at 20 columns). Values are immutable in practice: all
// operations return fresh objects.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "splitmat/errors.hpp"

namespace splitmat {

inline constexpr std::size_t kMaxColumns = 64;
inline constexpr std::size_t kDefaultEnumerationGuard = 24;
inline constexpr std::size_t kPartitionGuard = 20;

inline constexpr std::uint64_t mask_upto(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// A vector over GF(2), coordinates 0..size()-1 packed into one machine word.
class GF2Vector {
public:
    GF2Vector() = default;

    explicit GF2Vector(std::size_t length, std::uint64_t bits = 0)
        : length_(checked(length)), bits_(bits & mask_upto(length)) {}

    static GF2Vector unit(std::size_t length, std::size_t index) {
        GF2Vector v(length);
        v.set(index, true);
        return v;
    }

    std::size_t size() const noexcept { return length_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool is_zero() const noexcept { return bits_ == 0; }
    std::size_t weight() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

    bool operator[](std::size_t i) const { return (bits_ >> i) & 1u; }

    void set(std::size_t i, bool value) {
        if (i >= length_) throw Error("coordinate index out of range");
        if (value)
            bits_ |= std::uint64_t{1} << i;
        else
            bits_ &= ~(std::uint64_t{1} << i);
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    GF2Vector& operator^=(const GF2Vector& rhs) {
        if (rhs.length_ != length_) throw Error("vector length mismatch");
        bits_ ^= rhs.bits_;
        return *this;
    }

    friend GF2Vector operator^(GF2Vector lhs, const GF2Vector& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

private:
    static std::size_t checked(std::size_t length) {
        if (length > kMaxColumns) throw GroundTooLarge("max-columns", kMaxColumns, length);
        return length;
    }

    std::size_t length_ = 0;
    std::uint64_t bits_ = 0;
};

// Dense bit matrix over GF(2); rows are packed words, all of width cols().
class GF2Matrix {
public:
    GF2Matrix() = default;

    GF2Matrix(std::size_t rows, std::size_t cols) : cols_(checked_cols(cols)), rows_(rows, 0) {
        checked_rows(rows);
    }

    GF2Matrix(std::size_t cols, std::vector<std::uint64_t> row_bits)
        : cols_(checked_cols(cols)), rows_(std::move(row_bits)) {
        checked_rows(rows_.size());
        for (auto& r : rows_) r &= mask_upto(cols_);
    }

    static GF2Matrix from_rows(const std::vector<GF2Vector>& rows) {
        if (rows.empty()) return GF2Matrix();
        GF2Matrix m(0, rows.front().size());
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    static GF2Matrix from_strings(const std::vector<std::string>& rows) {
        if (rows.empty()) return GF2Matrix();
        GF2Matrix m(0, rows.front().size());
        for (const auto& s : rows) {
            if (s.size() != m.cols()) throw Error("ragged rows in matrix literal");
            std::uint64_t bits = 0;
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (s[j] == '1')
                    bits |= std::uint64_t{1} << j;
                else if (s[j] != '0')
                    throw Error("matrix literal characters must be 0 or 1");
            }
            m.rows_.push_back(bits);
        }
        return m;
    }

    static GF2Matrix identity(std::size_t n) {
        GF2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
        return m;
    }

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (rows_.at(r) >> c) & 1u; }

    void set(std::size_t r, std::size_t c, bool value) {
        if (c >= cols_) throw Error("column index out of range");
        if (value)
            rows_.at(r) |= std::uint64_t{1} << c;
        else
            rows_.at(r) &= ~(std::uint64_t{1} << c);
    }

    std::uint64_t row_bits(std::size_t r) const { return rows_.at(r); }
    GF2Vector row(std::size_t r) const { return GF2Vector(cols_, rows_.at(r)); }
    const std::vector<std::uint64_t>& all_row_bits() const noexcept { return rows_; }

    // Column c read across the rows, packed by row index.
    std::uint64_t column_bits(std::size_t c) const {
        if (c >= cols_) throw Error("column index out of range");
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            out |= ((rows_[i] >> c) & 1u) << i;
        return out;
    }

    void append_row(std::uint64_t bits) {
        checked_rows(rows_.size() + 1);
        rows_.push_back(bits & mask_upto(cols_));
    }

    void append_row(const GF2Vector& v) {
        if (v.size() != cols_) throw Error("row length must equal matrix width");
        append_row(v.bits());
    }

    // Matrix * vector; the result has one coordinate per row.
    GF2Vector mul(const GF2Vector& v) const {
        if (v.size() != cols_) throw Error("vector length must equal matrix width");
        GF2Vector out(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (std::popcount(rows_[i] & v.bits()) & 1) out.set(i, true);
        return out;
    }

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    static std::size_t checked_cols(std::size_t cols) {
        if (cols > kMaxColumns) throw GroundTooLarge("max-columns", kMaxColumns, cols);
        return cols;
    }
    static void checked_rows(std::size_t rows) {
        if (rows > kMaxColumns) throw GroundTooLarge("max-rows", kMaxColumns, rows);
    }

    std::size_t cols_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Reduced row echelon form with zero rows dropped. Unique for a given row
// space, so it doubles as the canonical form used for equality tests.
inline GF2Matrix rref(const GF2Matrix& m) {
    std::vector<std::uint64_t> rows = m.all_row_bits();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = lead;
        while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != lead && (rows[i] & bit)) rows[i] ^= rows[lead];
        ++lead;
    }
    rows.resize(lead);
    return GF2Matrix(m.cols(), std::move(rows));
}

inline std::size_t rank(const GF2Matrix& m) { return rref(m).rows(); }

// Basis of { v : m v = 0 }, one vector per free column, free columns ascending.
inline std::vector<GF2Vector> null_space_basis(const GF2Matrix& m) {
    const GF2Matrix r = rref(m);
    std::vector<std::size_t> pivot_col(r.rows());
    std::uint64_t pivot_mask = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        pivot_col[i] = static_cast<std::size_t>(std::countr_zero(r.row_bits(i)));
        pivot_mask |= std::uint64_t{1} << pivot_col[i];
    }
    std::vector<GF2Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if ((pivot_mask >> f) & 1u) continue;
        std::uint64_t bits = std::uint64_t{1} << f;
        for (std::size_t i = 0; i < r.rows(); ++i)
            if ((r.row_bits(i) >> f) & 1u) bits |= std::uint64_t{1} << pivot_col[i];
        basis.emplace_back(m.cols(), bits);
    }
    return basis;
}

// Visits every vector of the span exactly once, zero first, then in Gray-code
// order over coefficient masks (the order is documented, not contractual).
template <typename Fn>
inline void for_each_in_span(std::size_t length, const std::vector<GF2Vector>& basis, Fn&& fn,
                             std::size_t guard = kDefaultEnumerationGuard) {
    if (basis.size() > guard) throw DimensionExceeded(guard, basis.size());
    for (const auto& b : basis)
        if (b.size() != length) throw Error("basis vector length mismatch");
    if (rank(GF2Matrix::from_rows(basis)) != basis.size())
        throw Error("span enumeration requires an independent basis");

    GF2Vector v(length);
    fn(static_cast<const GF2Vector&>(v));
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t k = 1; k < total; ++k) {
        v ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
        fn(static_cast<const GF2Vector&>(v));
    }
}

inline std::vector<GF2Vector> enumerate_space(std::size_t length, const std::vector<GF2Vector>& basis,
                                              std::size_t guard = kDefaultEnumerationGuard) {
    std::vector<GF2Vector> out;
    out.reserve(std::size_t{1} << std::min<std::size_t>(basis.size(), 20));
    for_each_in_span(length, basis, [&](const GF2Vector& v) { out.push_back(v); }, guard);
    return out;
}

// Supports of nonzero span vectors that are minimal under set inclusion,
// returned as column masks sorted ascending. Over GF(2) a support determines
// its vector, so no deduplication is needed.
inline std::vector<std::uint64_t> minimal_supports(std::size_t length, const std::vector<GF2Vector>& basis,
                                                   std::size_t guard = kDefaultEnumerationGuard) {
    std::vector<std::uint64_t> all;
    for_each_in_span(
        length, basis,
        [&](const GF2Vector& v) {
            if (!v.is_zero()) all.push_back(v.bits());
        },
        guard);
    std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint64_t> minimal;
    for (const std::uint64_t cand : all) {
        bool dominated = false;
        for (const std::uint64_t kept : minimal)
            if ((cand & kept) == kept) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(cand);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

// rank of every column subset, indexed by subset mask. One depth-first pass
// with an undo stack costs O(2^cols * rank) instead of a fresh elimination
// per mask.
inline std::vector<std::uint8_t> subset_rank_table(const GF2Matrix& m,
                                                   std::size_t guard = kPartitionGuard) {
    const std::size_t n = m.cols();
    if (n > guard) throw GroundTooLarge("partition-scan", guard, n);

    std::vector<std::uint64_t> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = m.column_bits(j);

    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    std::array<std::uint64_t, 64> slot{};

    auto go = [&](auto&& self, std::size_t i, std::uint64_t mask, std::uint8_t rnk) -> void {
        if (i == n) {
            table[mask] = rnk;
            return;
        }
        self(self, i + 1, mask, rnk);
        std::uint64_t v = col[i];
        int lead = -1;
        while (v != 0) {
            lead = 63 - std::countl_zero(v);
            if (slot[static_cast<std::size_t>(lead)] == 0) break;
            v ^= slot[static_cast<std::size_t>(lead)];
        }
        if (v == 0) {
            self(self, i + 1, mask | (std::uint64_t{1} << i), rnk);
        } else {
            slot[static_cast<std::size_t>(lead)] = v;
            self(self, i + 1, mask | (std::uint64_t{1} << i), static_cast<std::uint8_t>(rnk + 1));
            slot[static_cast<std::size_t>(lead)] = 0;
        }
    };
    go(go, 0, 0, 0);
    return table;
}

}  // namespace splitmat

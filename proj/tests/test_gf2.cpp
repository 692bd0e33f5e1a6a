#include <set>

#include "doctest.h"
#include "splitmat/gf2.hpp"

using namespace splitmat;

namespace {

// Small deterministic generator (kept independent of the library's one).
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

GF2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    GF2Matrix m(0, cols);
    for (std::size_t r = 0; r < rows; ++r) m.append_row(rng.next() & mask_upto(cols));
    return m;
}

// Is v in the row space of m? Plain elimination, independent of rref().
bool in_row_space(const GF2Matrix& m, std::uint64_t v) {
    std::vector<std::uint64_t> rows = m.all_row_bits();
    for (std::size_t col = 0; col < m.cols(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] & bit) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        const std::uint64_t prow = rows[pivot];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (auto& r : rows)
            if (r & bit) r ^= prow;
        if (v & bit) v ^= prow;
    }
    return v == 0;
}

}  // namespace

TEST_CASE("rref canonicalizes the stated examples") {
    CHECK(rref(GF2Matrix::from_strings({"110", "101"})) == GF2Matrix::from_strings({"101", "011"}));

    const GF2Matrix zeros = rref(GF2Matrix::from_strings({"00", "00"}));
    CHECK(zeros.rows() == 0);
    CHECK(zeros.cols() == 2);

    CHECK(rref(GF2Matrix::from_strings({"101", "011", "110"})) ==
          GF2Matrix::from_strings({"101", "011"}));
}

TEST_CASE("rref is idempotent and preserves the row space") {
    Rng rng{7};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng.next() % 12;
        const std::size_t cols = 1 + rng.next() % 12;
        const GF2Matrix m = random_matrix(rng, rows, cols);
        const GF2Matrix r = rref(m);
        CHECK(rref(r) == r);
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(in_row_space(r, m.row_bits(i)));
        for (std::size_t i = 0; i < r.rows(); ++i) CHECK(in_row_space(m, r.row_bits(i)));
    }
}

TEST_CASE("rank on the stated examples") {
    CHECK(rank(GF2Matrix::identity(3)) == 3);
    CHECK(rank(GF2Matrix(2, 4)) == 0);
    CHECK(rank(GF2Matrix::from_strings({"101", "011", "110"})) == 2);
}

TEST_CASE("null space basis on the stated examples") {
    const auto basis = null_space_basis(GF2Matrix::from_strings({"101", "011"}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == GF2Vector(3, 0b111));

    CHECK(null_space_basis(GF2Matrix::identity(2)).empty());

    const auto wide = null_space_basis(GF2Matrix::from_strings({"1111"}));
    REQUIRE(wide.size() == 3);
    CHECK(wide[0] == GF2Vector(4, 0b0011));
    CHECK(wide[1] == GF2Vector(4, 0b0101));
    CHECK(wide[2] == GF2Vector(4, 0b1001));
}

TEST_CASE("rank plus nullity equals the number of columns") {
    Rng rng{11};
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng.next() % 12;
        const std::size_t cols = 1 + rng.next() % 12;
        const GF2Matrix m = random_matrix(rng, rows, cols);
        CHECK(rank(m) + null_space_basis(m).size() == cols);
    }
}

TEST_CASE("enumerate_space yields the whole span exactly once, zero first") {
    const auto tiny = enumerate_space(3, {GF2Vector(3, 0b111)});
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0].is_zero());
    CHECK(tiny[1] == GF2Vector(3, 0b111));

    const auto just_zero = enumerate_space(2, {});
    REQUIRE(just_zero.size() == 1);
    CHECK(just_zero[0] == GF2Vector(2));

    const auto plane = enumerate_space(2, {GF2Vector(2, 0b01), GF2Vector(2, 0b10)});
    std::set<std::uint64_t> seen;
    for (const auto& v : plane) seen.insert(v.bits());
    CHECK(seen == std::set<std::uint64_t>{0, 1, 2, 3});
    CHECK(plane.size() == 4);
}

TEST_CASE("enumerate_space output is annihilated by the source matrix") {
    Rng rng{23};
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + rng.next() % 8;
        const std::size_t cols = 1 + rng.next() % 10;
        const GF2Matrix m = random_matrix(rng, rows, cols);
        std::size_t count = 0;
        for_each_in_span(cols, null_space_basis(m), [&](const GF2Vector& v) {
            CHECK(m.mul(v).is_zero());
            ++count;
        });
        CHECK(count == (std::size_t{1} << null_space_basis(m).size()));
    }
}

TEST_CASE("enumerate_space rejects dimensions beyond the guard") {
    std::vector<GF2Vector> big;
    for (std::size_t i = 0; i < 25; ++i) big.push_back(GF2Vector::unit(30, i));
    CHECK_THROWS_AS(for_each_in_span(30, big, [](const GF2Vector&) {}), DimensionExceeded);
    // A tighter explicit guard also trips.
    std::vector<GF2Vector> small = {GF2Vector::unit(4, 0), GF2Vector::unit(4, 1)};
    CHECK_THROWS_AS(for_each_in_span(4, small, [](const GF2Vector&) {}, 1), DimensionExceeded);
}

TEST_CASE("minimal_supports on the stated examples") {
    CHECK(minimal_supports(3, {GF2Vector(3, 0b111)}) == std::vector<std::uint64_t>{0b111});
    CHECK(minimal_supports(3, {}).empty());

    // Independent oracle: enumerate the span by explicit coefficient
    // recursion and filter minimal supports by a double loop.
    const std::vector<GF2Vector> basis = {GF2Vector(3, 0b011), GF2Vector(3, 0b110)};
    std::vector<std::uint64_t> span;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            std::uint64_t v = 0;
            if (c0) v ^= basis[0].bits();
            if (c1) v ^= basis[1].bits();
            if (v) span.push_back(v);
        }
    std::vector<std::uint64_t> expected;
    for (const auto u : span) {
        bool minimal = true;
        for (const auto w : span)
            if (w != u && (u & w) == w) minimal = false;
        if (minimal) expected.push_back(u);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(minimal_supports(3, basis) == expected);
    CHECK(expected == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
}

TEST_CASE("minimal_supports output is always an antichain") {
    Rng rng{41};
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + rng.next() % 6;
        const std::size_t cols = 2 + rng.next() % 9;
        const auto basis = null_space_basis(random_matrix(rng, rows, cols));
        const auto mins = minimal_supports(cols, basis);
        for (std::size_t i = 0; i < mins.size(); ++i)
            for (std::size_t j = 0; j < mins.size(); ++j)
                if (i != j) CHECK((mins[i] & mins[j]) != mins[j]);
    }
}

TEST_CASE("subset_rank_table agrees with per-subset elimination") {
    Rng rng{59};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng.next() % 6;
        const std::size_t cols = 1 + rng.next() % 8;
        const GF2Matrix m = random_matrix(rng, rows, cols);
        const auto table = subset_rank_table(m);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cols); ++mask) {
            GF2Matrix restricted(0, cols);
            for (std::size_t r = 0; r < rows; ++r) restricted.append_row(m.row_bits(r) & mask);
            CHECK(table[mask] == rank(restricted));
        }
    }
    CHECK_THROWS_AS(subset_rank_table(GF2Matrix(2, 24)), GroundTooLarge);
}

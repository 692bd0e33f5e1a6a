// Binary matroids as immutable values over a labeled ground set.
//
// The identity of a BinaryMatroid is its cycle space: two values are equal
// iff their ground lists agree and the canonical forms (RREF) of their row
// spaces agree. Circuits are minimal supports of the null space of the
// representation, cocircuits minimal supports of the row space.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitmat/gf2.hpp"

namespace splitmat {

using ElementMask = std::uint64_t;

inline std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return labels;
}

class BinaryMatroid {
public:
    BinaryMatroid() = default;

    BinaryMatroid(std::vector<std::string> ground, GF2Matrix rep)
        : ground_(std::move(ground)), rep_(std::move(rep)) {
        if (rep_.cols() != ground_.size())
            throw Error("representation width must equal ground set size");
        for (std::size_t i = 0; i < ground_.size(); ++i) {
            const auto& label = ground_[i];
            if (label.empty()) throw Error("element labels must be nonempty");
            for (char c : label)
                if (c <= ' ' || c > '~') throw Error("element label '" + label + "' must be printable, no spaces");
            if (!index_.emplace(label, i).second) throw Error("duplicate element label '" + label + "'");
        }
    }

    static BinaryMatroid with_default_labels(GF2Matrix rep) {
        auto labels = default_labels(rep.cols());
        return BinaryMatroid(std::move(labels), std::move(rep));
    }

    std::size_t size() const noexcept { return ground_.size(); }
    const std::vector<std::string>& ground() const noexcept { return ground_; }
    const GF2Matrix& rep() const noexcept { return rep_; }
    const std::string& label(std::size_t i) const { return ground_.at(i); }
    ElementMask full_mask() const noexcept { return mask_upto(ground_.size()); }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw UnknownLabel(label);
        return it->second;
    }

    ElementMask element_mask(const std::string& label) const {
        return ElementMask{1} << index_of(label);
    }

    ElementMask mask_of(const std::vector<std::string>& labels) const {
        ElementMask m = 0;
        for (const auto& l : labels) m |= element_mask(l);
        return m;
    }

    // Members of a mask, in ground (column) order.
    std::vector<std::string> labels_of(ElementMask mask) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < ground_.size(); ++i)
            if ((mask >> i) & 1u) out.push_back(ground_[i]);
        return out;
    }

    std::string set_text(ElementMask mask) const {
        std::string out = "{";
        bool first = true;
        for (std::size_t i = 0; i < ground_.size(); ++i)
            if ((mask >> i) & 1u) {
                if (!first) out += ",";
                out += ground_[i];
                first = false;
            }
        return out + "}";
    }

    std::size_t rank() const { return rank_of(full_mask()); }

    // Rank of the column submatrix picked out by the mask.
    std::size_t rank_of(ElementMask a) const {
        a &= full_mask();
        std::array<std::uint64_t, 64> slot{};
        std::size_t count = 0;
        for (std::size_t i = 0; i < rep_.rows(); ++i) {
            std::uint64_t v = rep_.row_bits(i) & a;
            while (v != 0) {
                const std::size_t lead = static_cast<std::size_t>(63 - std::countl_zero(v));
                if (slot[lead] == 0) {
                    slot[lead] = v;
                    ++count;
                    break;
                }
                v ^= slot[lead];
            }
        }
        return count;
    }

    std::size_t rank_of(const std::vector<std::string>& labels) const { return rank_of(mask_of(labels)); }

    std::vector<ElementMask> circuit_masks(std::size_t guard = kDefaultEnumerationGuard) const {
        return minimal_supports(size(), null_space_basis(rep_), guard);
    }

    std::vector<ElementMask> cocircuit_masks(std::size_t guard = kDefaultEnumerationGuard) const {
        const GF2Matrix canon = rref(rep_);
        std::vector<GF2Vector> basis;
        basis.reserve(canon.rows());
        for (std::size_t i = 0; i < canon.rows(); ++i) basis.push_back(canon.row(i));
        return minimal_supports(size(), basis, guard);
    }

    std::vector<std::vector<std::string>> circuits(std::size_t guard = kDefaultEnumerationGuard) const {
        return to_label_sets(circuit_masks(guard));
    }

    std::vector<std::vector<std::string>> cocircuits(std::size_t guard = kDefaultEnumerationGuard) const {
        return to_label_sets(cocircuit_masks(guard));
    }

    ElementMask loop_mask() const {
        ElementMask loops = 0;
        for (std::size_t j = 0; j < size(); ++j)
            if (rep_.column_bits(j) == 0) loops |= ElementMask{1} << j;
        return loops;
    }

    // e is a coloop iff dropping it lowers the rank, i.e. e lies in every basis.
    ElementMask coloop_mask() const {
        const std::size_t r = rank();
        ElementMask coloops = 0;
        for (std::size_t j = 0; j < size(); ++j)
            if (rank_of(full_mask() & ~(ElementMask{1} << j)) + 1 == r) coloops |= ElementMask{1} << j;
        return coloops;
    }

    bool is_parallel_pair(const std::string& x, const std::string& y) const {
        const auto [ix, iy] = distinct_indices(x, y);
        const std::uint64_t cx = rep_.column_bits(ix);
        return cx != 0 && cx == rep_.column_bits(iy);
    }

    // {x,y} is a cocircuit of M iff x,y are parallel in the dual, i.e. the
    // corresponding columns of a cycle-space basis matrix agree and are nonzero.
    bool is_series_pair(const std::string& x, const std::string& y) const {
        const auto [ix, iy] = distinct_indices(x, y);
        const GF2Matrix dual_rep = GF2Matrix::from_rows(null_space_basis(rep_));
        if (dual_rep.cols() != size()) return false;  // trivial cycle space: no cocircuit {x,y}
        const std::uint64_t cx = dual_rep.column_bits(ix);
        return cx != 0 && cx == dual_rep.column_bits(iy);
    }

    // Partition of the ground set under "e ~ f iff e = f or a circuit contains
    // both", sorted by smallest member index. Loops and coloops are singletons.
    std::vector<ElementMask> components(std::size_t guard = kDefaultEnumerationGuard) const {
        const std::size_t n = size();
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const ElementMask c : circuit_masks(guard)) {
            const std::size_t head = static_cast<std::size_t>(std::countr_zero(c));
            for (std::uint64_t b = c; b != 0; b &= b - 1)
                parent[find(static_cast<std::size_t>(std::countr_zero(b)))] = find(head);
        }
        std::map<std::size_t, ElementMask> classes;
        for (std::size_t i = 0; i < n; ++i) classes[find(i)] |= ElementMask{1} << i;
        std::vector<ElementMask> out;
        out.reserve(classes.size());
        for (const auto& [root, mask] : classes) out.push_back(mask);
        std::sort(out.begin(), out.end(), [](ElementMask a, ElementMask b) {
            return std::countr_zero(a) < std::countr_zero(b);
        });
        return out;
    }

    // Single-element matroids report false by convention.
    bool is_connected(std::size_t guard = kDefaultEnumerationGuard) const {
        return size() >= 2 && components(guard).size() == 1;
    }

    std::optional<std::size_t> girth(std::size_t guard = kDefaultEnumerationGuard) const {
        return min_weight(circuit_masks(guard));
    }

    std::optional<std::size_t> cogirth(std::size_t guard = kDefaultEnumerationGuard) const {
        return min_weight(cocircuit_masks(guard));
    }

    // lambda(side) = r(side) + r(complement) - r(M) + 1.
    std::size_t connectivity_order(ElementMask side) const {
        side &= full_mask();
        if (side == 0 || side == full_mask())
            throw EmptySide("connectivity order needs a proper nonempty side");
        return rank_of(side) + rank_of(full_mask() & ~side) - rank() + 1;
    }

    // min over proper partitions (X,Y) of lambda(X) subject to
    // min(|X|,|Y|) >= lambda(X); nullopt if no partition qualifies (such a
    // matroid is n-connected for every n).
    std::optional<std::size_t> tutte_connectivity() const { return connectivity_impl(false); }

    // Same with min(r(X), r(Y)) >= lambda(X).
    std::optional<std::size_t> vertical_connectivity() const { return connectivity_impl(true); }

    bool is_n_connected(std::size_t n) const {
        if (n < 2) throw Error("n-connectivity requires n >= 2");
        const auto t = tutte_connectivity();
        return !t || *t >= n;
    }

    bool is_vertically_n_connected(std::size_t n) const {
        if (n < 2) throw Error("vertical n-connectivity requires n >= 2");
        const auto t = vertical_connectivity();
        return !t || *t >= n;
    }

    GF2Matrix canonical_rep() const { return rref(rep_); }

    // Structural digest: size, rank, canonical rows. Labels are not included.
    std::string digest() const {
        const GF2Matrix canon = rref(rep_);
        std::string out = "n" + std::to_string(size()) + "r" + std::to_string(canon.rows()) + ":";
        for (std::size_t i = 0; i < canon.rows(); ++i) {
            if (i) out += ".";
            for (std::size_t j = 0; j < canon.cols(); ++j) out += canon.get(i, j) ? '1' : '0';
        }
        return out;
    }

    friend bool operator==(const BinaryMatroid& a, const BinaryMatroid& b) {
        return a.ground_ == b.ground_ && rref(a.rep_) == rref(b.rep_);
    }

private:
    std::pair<std::size_t, std::size_t> distinct_indices(const std::string& x, const std::string& y) const {
        if (x == y) throw IdenticalElements(x);
        return {index_of(x), index_of(y)};
    }

    static std::optional<std::size_t> min_weight(const std::vector<ElementMask>& masks) {
        std::optional<std::size_t> best;
        for (const ElementMask m : masks) {
            const auto w = static_cast<std::size_t>(std::popcount(m));
            if (!best || w < *best) best = w;
        }
        return best;
    }

    std::optional<std::size_t> connectivity_impl(bool vertical) const {
        const std::size_t n = size();
        if (n > kPartitionGuard) throw GroundTooLarge("partition-scan", kPartitionGuard, n);
        if (n < 2) return std::nullopt;
        const auto table = subset_rank_table(rep_);
        const ElementMask full = full_mask();
        const std::size_t r = table[full];
        std::optional<std::size_t> best;
        for (ElementMask side = 1; side < full; ++side) {
            const std::size_t rx = table[side];
            const std::size_t ry = table[full & ~side];
            const std::size_t lambda = rx + ry - r + 1;
            const std::size_t cap =
                vertical ? std::min(rx, ry)
                         : std::min<std::size_t>(static_cast<std::size_t>(std::popcount(side)),
                                                 n - static_cast<std::size_t>(std::popcount(side)));
            if (lambda <= cap && (!best || lambda < *best)) best = lambda;
        }
        return best;
    }

    std::vector<std::vector<std::string>> to_label_sets(const std::vector<ElementMask>& masks) const {
        std::vector<std::vector<std::string>> out;
        out.reserve(masks.size());
        for (const ElementMask m : masks) out.push_back(labels_of(m));
        return out;
    }

    std::vector<std::string> ground_;
    GF2Matrix rep_;
    std::map<std::string, std::size_t> index_;
};

inline BinaryMatroid dual(const BinaryMatroid& m) {
    auto basis = null_space_basis(m.rep());
    GF2Matrix rep(m.size(), std::vector<std::uint64_t>{});
    for (const auto& v : basis) rep.append_row(v);
    return BinaryMatroid(m.ground(), std::move(rep));
}

inline BinaryMatroid deletion(const BinaryMatroid& m, ElementMask dropped) {
    dropped &= m.full_mask();
    std::vector<std::string> labels;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!((dropped >> i) & 1u)) {
            kept.push_back(i);
            labels.push_back(m.label(i));
        }
    GF2Matrix rep(m.rep().rows(), kept.size());
    for (std::size_t r = 0; r < m.rep().rows(); ++r)
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (m.rep().get(r, kept[j])) rep.set(r, j, true);
    return BinaryMatroid(std::move(labels), std::move(rep));
}

inline BinaryMatroid deletion(const BinaryMatroid& m, const std::vector<std::string>& labels) {
    return deletion(m, m.mask_of(labels));
}

inline BinaryMatroid contraction(const BinaryMatroid& m, ElementMask contracted) {
    return dual(deletion(dual(m), contracted));
}

inline BinaryMatroid contraction(const BinaryMatroid& m, const std::vector<std::string>& labels) {
    return contraction(m, m.mask_of(labels));
}

// Block-diagonal sum; label sets must be disjoint.
inline BinaryMatroid direct_sum(const BinaryMatroid& a, const BinaryMatroid& b) {
    std::vector<std::string> labels = a.ground();
    labels.insert(labels.end(), b.ground().begin(), b.ground().end());
    GF2Matrix rep(a.rep().rows() + b.rep().rows(), a.size() + b.size());
    for (std::size_t r = 0; r < a.rep().rows(); ++r)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.rep().get(r, j)) rep.set(r, j, true);
    for (std::size_t r = 0; r < b.rep().rows(); ++r)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b.rep().get(r, j)) rep.set(a.rep().rows() + r, a.size() + j, true);
    return BinaryMatroid(std::move(labels), std::move(rep));
}

}  // namespace splitmat

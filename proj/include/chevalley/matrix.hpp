#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ring.hpp"

namespace chevalley {

// Square sparse matrix over one RingHandle. Entries are kept sorted by
// (row, col) with no explicit zeros, so equality is entry-list equality
// and the canonical key can be used as a hash for group enumeration.
// The convention throughout is M[row=target][col=source]: matrices act on
// column vectors, so (M*N) means "apply N first".
class SparseMatrix {
  public:
    struct Entry {
        std::uint32_t row, col;
        RingValue value;
        bool operator==(const Entry& o) const {
            return row == o.row && col == o.col && value == o.value;
        }
    };

    SparseMatrix(std::size_t dim, RingHandle ring)
        : dim_(dim), ring_(std::move(ring)) {}

    static SparseMatrix zero(std::size_t dim, const RingHandle& ring) {
        return SparseMatrix(dim, ring);
    }

    static SparseMatrix identity(std::size_t dim, const RingHandle& ring) {
        SparseMatrix m(dim, ring);
        RingValue one = RingValue::one(ring);
        m.entries_.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i)
            m.entries_.push_back({static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(i), one});
        return m;
    }

    static SparseMatrix from_triplets(std::size_t dim, const RingHandle& ring,
                                      std::vector<Entry> triplets) {
        SparseMatrix m(dim, ring);
        std::sort(triplets.begin(), triplets.end(), [](const Entry& a, const Entry& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        });
        for (auto& e : triplets) {
            if (e.row >= dim || e.col >= dim) throw DimMismatch("entry outside matrix");
            if (e.value.ring() != ring) throw RingMismatch("entry ring differs from matrix ring");
            if (!m.entries_.empty() && m.entries_.back().row == e.row &&
                m.entries_.back().col == e.col)
                throw std::invalid_argument("duplicate entry position");
            if (!e.value.is_zero()) m.entries_.push_back(std::move(e));
        }
        return m;
    }

    std::size_t dim() const { return dim_; }
    const RingHandle& ring() const { return ring_; }
    const std::vector<Entry>& entries() const { return entries_; }

    RingValue at(std::size_t r, std::size_t c) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), std::pair(r, c),
            [](const Entry& e, const std::pair<std::size_t, std::size_t>& k) {
                return std::pair<std::size_t, std::size_t>(e.row, e.col) < k;
            });
        if (it != entries_.end() && it->row == r && it->col == c) return it->value;
        return RingValue::zero(ring_);
    }

    bool operator==(const SparseMatrix& o) const {
        return dim_ == o.dim_ && ring_ == o.ring_ && entries_ == o.entries_;
    }
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

    SparseMatrix operator+(const SparseMatrix& o) const {
        check_compatible(o);
        SparseMatrix m(dim_, ring_);
        std::size_t i = 0, j = 0;
        while (i < entries_.size() || j < o.entries_.size()) {
            if (j == o.entries_.size() ||
                (i < entries_.size() && key(entries_[i]) < key(o.entries_[j]))) {
                m.entries_.push_back(entries_[i++]);
            } else if (i == entries_.size() || key(o.entries_[j]) < key(entries_[i])) {
                m.entries_.push_back(o.entries_[j++]);
            } else {
                RingValue s = entries_[i].value + o.entries_[j].value;
                if (!s.is_zero())
                    m.entries_.push_back({entries_[i].row, entries_[i].col, std::move(s)});
                ++i; ++j;
            }
        }
        return m;
    }

    SparseMatrix operator-() const {
        SparseMatrix m(dim_, ring_);
        m.entries_.reserve(entries_.size());
        for (const auto& e : entries_) m.entries_.push_back({e.row, e.col, -e.value});
        return m;
    }

    SparseMatrix operator-(const SparseMatrix& o) const { return *this + (-o); }

    SparseMatrix operator*(const SparseMatrix& o) const {
        check_compatible(o);
        // row offsets of the right factor for row-by-row accumulation
        std::vector<std::size_t> start(dim_ + 1, o.entries_.size());
        for (std::size_t k = o.entries_.size(); k-- > 0;) start[o.entries_[k].row] = k;
        for (std::size_t r = dim_; r-- > 0;)
            if (start[r] > start[r + 1]) start[r] = start[r + 1];
        std::map<std::pair<std::uint32_t, std::uint32_t>, RingValue> acc;
        for (const auto& a : entries_) {
            for (std::size_t k = start[a.col]; k < start[a.col + 1]; ++k) {
                const auto& b = o.entries_[k];
                RingValue prod = a.value * b.value;
                if (prod.is_zero()) continue;
                auto key2 = std::pair(a.row, b.col);
                auto it = acc.find(key2);
                if (it == acc.end()) acc.emplace(key2, std::move(prod));
                else it->second = it->second + prod;
            }
        }
        SparseMatrix m(dim_, ring_);
        for (auto& [rc, v] : acc)
            if (!v.is_zero()) m.entries_.push_back({rc.first, rc.second, std::move(v)});
        return m;
    }

    SparseMatrix scalar_mul(const RingValue& c) const {
        if (c.ring() != ring_) throw RingMismatch("scalar ring differs from matrix ring");
        SparseMatrix m(dim_, ring_);
        for (const auto& e : entries_) {
            RingValue v = c * e.value;
            if (!v.is_zero()) m.entries_.push_back({e.row, e.col, std::move(v)});
        }
        return m;
    }

    SparseMatrix transpose() const {
        SparseMatrix m(dim_, ring_);
        m.entries_ = entries_;
        for (auto& e : m.entries_) std::swap(e.row, e.col);
        std::sort(m.entries_.begin(), m.entries_.end(), [](const Entry& a, const Entry& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        });
        return m;
    }

    bool is_zero() const { return entries_.empty(); }

    bool is_identity() const {
        if (entries_.size() != dim_) return false;
        for (const auto& e : entries_)
            if (e.row != e.col || !e.value.is_one()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (const auto& e : entries_)
            if (e.row != e.col) return false;
        return true;
    }

    bool is_strictly_upper() const {
        for (const auto& e : entries_)
            if (e.row >= e.col) return false;
        return true;
    }

    bool is_strictly_lower() const {
        for (const auto& e : entries_)
            if (e.row <= e.col) return false;
        return true;
    }

    bool is_upper_unitriangular() const {
        std::size_t diag = 0;
        for (const auto& e : entries_) {
            if (e.row > e.col) return false;
            if (e.row == e.col) {
                if (!e.value.is_one()) return false;
                ++diag;
            }
        }
        return diag == dim_;
    }

    bool is_lower_unitriangular() const {
        std::size_t diag = 0;
        for (const auto& e : entries_) {
            if (e.row < e.col) return false;
            if (e.row == e.col) {
                if (!e.value.is_one()) return false;
                ++diag;
            }
        }
        return diag == dim_;
    }

    // Exactly one nonzero per row and per column.
    bool is_monomial() const {
        if (entries_.size() != dim_) return false;
        std::vector<bool> row_seen(dim_, false), col_seen(dim_, false);
        for (const auto& e : entries_) {
            if (row_seen[e.row] || col_seen[e.col]) return false;
            row_seen[e.row] = col_seen[e.col] = true;
        }
        return true;
    }

    // Entry-wise image under the canonical morphism Z -> R; only valid on
    // matrices over the integers. Entries may vanish in the target ring.
    SparseMatrix map_ring(const RingHandle& target) const {
        if (ring_.kind() != RingKind::Integers)
            throw RingMismatch("map_ring expects an integer matrix");
        SparseMatrix m(dim_, target);
        for (const auto& e : entries_) {
            RingValue v = RingValue::from_int(target, e.value.integer_value());
            if (!v.is_zero()) m.entries_.push_back({e.row, e.col, std::move(v)});
        }
        return m;
    }

    // Stable string form, usable as a hash key during group enumeration.
    std::string canonical_key() const {
        std::string s = std::to_string(dim_);
        s += '|';
        for (const auto& e : entries_) {
            s += std::to_string(e.row);
            s += ',';
            s += std::to_string(e.col);
            s += ':';
            s += e.value.to_string();
            s += ';';
        }
        return s;
    }

  private:
    static std::pair<std::uint32_t, std::uint32_t> key(const Entry& e) {
        return {e.row, e.col};
    }

    void check_compatible(const SparseMatrix& o) const {
        if (dim_ != o.dim_) throw DimMismatch("matrix dimensions differ");
        if (ring_ != o.ring_) throw RingMismatch("matrix rings differ");
    }

    std::size_t dim_;
    RingHandle ring_;
    std::vector<Entry> entries_;
};

// id + c*M, the one-parameter unipotent element shape used everywhere.
inline SparseMatrix identity_plus(const RingValue& c, const SparseMatrix& M) {
    return SparseMatrix::identity(M.dim(), M.ring()) + M.scalar_mul(c);
}

inline SparseMatrix commutator(const SparseMatrix& A, const SparseMatrix& B) {
    return A * B - B * A;
}

} // namespace chevalley

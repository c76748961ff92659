#pragma once

#include <map>

#include "avh/rational.hpp"

namespace avh {

/// Incremental reduced row echelon form over the rationals, with rows
/// keyed by an ordered coordinate type. Pivots are the smallest
/// coordinates under Less, rows are kept fully interreduced with pivot
/// coefficient 1, so the stored basis is canonical for the span.
template <class Key, class Less>
class EchelonBasis {
public:
    using Vec = std::map<Key, Rational, Less>;

    /// Residual of v modulo the current span.
    Vec reduce(Vec v) const {
        for (const auto& [pivot, row] : rows_) {
            auto it = v.find(pivot);
            if (it == v.end()) continue;
            Rational c = it->second;
            axpy(v, -c, row);
        }
        return v;
    }

    /// Adds v to the span. Returns true when the rank grew.
    bool insert(const Vec& v) {
        Vec r = reduce(v);
        if (r.empty()) return false;
        const Key pivot = r.begin()->first;
        Rational lead = r.begin()->second;
        for (auto& [k, c] : r) c /= lead;
        // eliminate the new pivot from existing rows
        for (auto& [p, row] : rows_) {
            auto it = row.find(pivot);
            if (it == row.end()) continue;
            Rational c = it->second;
            axpy(row, -c, r);
        }
        rows_.emplace(pivot, std::move(r));
        coords_ = entry_count(rows_);
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }

    size_t rank() const { return rows_.size(); }

    /// Total number of stored coordinates, for work accounting.
    size_t coord_count() const { return coords_; }

    const std::map<Key, Vec, Less>& rows() const { return rows_; }

    static void axpy(Vec& x, const Rational& a, const Vec& y) {
        if (is_zero(a)) return;
        for (const auto& [k, c] : y) {
            auto [it, inserted] = x.emplace(k, a * c);
            if (!inserted) {
                it->second += a * c;
                if (is_zero(it->second)) x.erase(it);
            }
        }
    }

private:
    static size_t entry_count(const std::map<Key, Vec, Less>& rows) {
        size_t n = 0;
        for (const auto& [p, row] : rows) n += row.size();
        return n;
    }

    std::map<Key, Vec, Less> rows_;
    size_t coords_ = 0;
};

} // namespace avh

#pragma once

#include <map>
#include <vector>

#include "gvmforge/rational.hpp"

namespace gvmforge {

/// Sparse homogeneous linear system over the rationals. Rows are sparse
/// (column -> coefficient) maps; elimination is exact with a fixed pivoting
/// order (columns ascending, rows in insertion order), so results are
/// deterministic.
class LinearSystem {
public:
    explicit LinearSystem(int ncols) : ncols_(ncols) {}

    void add_row(std::map<int, Rational> row) {
        if (!row.empty()) rows_.push_back(std::move(row));
    }

    /// Basis of the nullspace {x : A x = 0}, one dense vector per free
    /// column of the reduced row echelon form, ascending by free column.
    std::vector<std::vector<Rational>> nullspace_basis() const {
        // forward elimination: pivot rows keyed by leading column
        std::map<int, std::map<int, Rational>> pivots;
        for (const auto& input : rows_) {
            std::map<int, Rational> row = input;
            while (!row.empty()) {
                int lead = row.begin()->first;
                auto it = pivots.find(lead);
                if (it == pivots.end()) {
                    Rational inv = Rational(1) / row.begin()->second;
                    for (auto& [c, v] : row) v *= inv;
                    pivots.emplace(lead, std::move(row));
                    break;
                }
                reduce(row, it->second, row.begin()->second);
            }
        }
        // back substitution to reduced echelon form, descending pivot order
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto& row = it->second;
            for (auto jt = std::next(pivots.find(it->first)); jt != pivots.end(); ++jt) {
                auto entry = row.find(jt->first);
                if (entry != row.end()) reduce(row, jt->second, entry->second);
            }
        }
        // one basis vector per free column
        std::vector<std::vector<Rational>> basis;
        for (int f = 0; f < ncols_; ++f) {
            if (pivots.count(f)) continue;
            std::vector<Rational> x(static_cast<size_t>(ncols_), Rational(0));
            x[static_cast<size_t>(f)] = Rational(1);
            for (const auto& [p, row] : pivots) {
                auto entry = row.find(f);
                if (entry != row.end()) x[static_cast<size_t>(p)] = -entry->second;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

    int ncols() const { return ncols_; }
    size_t nrows() const { return rows_.size(); }

private:
    static void reduce(std::map<int, Rational>& row, const std::map<int, Rational>& pivot, Rational factor) {
        for (const auto& [c, v] : pivot) {
            auto it = row.find(c);
            if (it == row.end()) {
                row.emplace(c, -(factor * v));
            } else {
                it->second -= factor * v;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }

    int ncols_;
    std::vector<std::map<int, Rational>> rows_;
};

}  // namespace gvmforge

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "persimod/error.hpp"

namespace persimod {

// Sparse matrix over any entry type with is_zero()/+/* (field elements or
// polynomials). Zero entries are never stored.
template <class T>
class SparseMatrix {
public:
    using Index = std::pair<int, int>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw Error(Errc::bad_argument, "negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, T v) {
        check(i, j);
        if (v.is_zero())
            entries_.erase({i, j});
        else
            entries_.insert_or_assign({i, j}, std::move(v));
    }

    // Zero of T when absent.
    T get(int i, int j) const {
        check(i, j);
        auto it = entries_.find({i, j});
        return it == entries_.end() ? T() : it->second;
    }

    const T* find(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? nullptr : &it->second;
    }

    const std::map<Index, T>& entries() const { return entries_; }

    size_t nnz() const { return entries_.size(); }

    bool is_zero_matrix() const { return entries_.empty(); }

    SparseMatrix transposed() const {
        SparseMatrix r(cols_, rows_);
        for (const auto& [ij, v] : entries_) r.entries_.emplace(Index{ij.second, ij.first}, v);
        return r;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) throw Error(Errc::bad_argument, "matrix shape mismatch in product");
        SparseMatrix r(a.rows_, b.cols_);
        // rows of b, for cache of the inner loop
        std::map<int, std::map<int, const T*>> b_rows;
        for (const auto& [ij, v] : b.entries_) b_rows[ij.first][ij.second] = &v;
        std::map<typename SparseMatrix::Index, T> acc;
        for (const auto& [ij, va] : a.entries_) {
            auto rit = b_rows.find(ij.second);
            if (rit == b_rows.end()) continue;
            for (const auto& [k, vb] : rit->second) {
                Index at{ij.first, k};
                auto [it, fresh] = acc.emplace(at, va * (*vb));
                if (!fresh) it->second = it->second + va * (*vb);
            }
        }
        for (auto& [ij, v] : acc)
            if (!v.is_zero()) r.entries_.emplace(ij, std::move(v));
        return r;
    }

    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::map<Index, T> entries_;

    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw Error(Errc::bad_argument, "matrix index out of bounds");
    }
};

// Rank by Gaussian elimination; requires entries of a field type (inverse()).
template <class K>
int field_rank(const SparseMatrix<K>& m) {
    std::vector<std::map<int, K>> cols(m.cols());
    for (const auto& [ij, v] : m.entries()) cols[ij.second].emplace(ij.first, v);
    std::map<int, int> pivot_col_of_row;
    int rank = 0;
    for (int j = 0; j < m.cols(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int r = col.begin()->first;
            auto it = pivot_col_of_row.find(r);
            if (it == pivot_col_of_row.end()) break;
            const auto& pcol = cols[it->second];
            K factor = col.begin()->second * pcol.begin()->second.inverse();
            for (const auto& [i, v] : pcol) {
                auto [cit, fresh] = col.emplace(i, K());
                cit->second = fresh ? -(factor * v) : cit->second - factor * v;
                if (cit->second.is_zero()) col.erase(cit);
            }
        }
        if (!col.empty()) {
            pivot_col_of_row.emplace(col.begin()->first, j);
            ++rank;
        }
    }
    return rank;
}

}  // namespace persimod

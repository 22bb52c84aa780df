#pragma once

#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include "persimod/polynomial.hpp"
#include "persimod/sparse_matrix.hpp"

namespace persimod {

// Invariant factors of a matrix over K[t]: monic, each dividing the next,
// units normalized to 1. rank = number of nonzero factors.
template <class K>
struct SnfResult {
    std::vector<Polynomial<K>> divisors;
    int rank = 0;

    // Exponents of the non-unit divisors (torsion of the cokernel), in
    // chain order. Requires every non-unit divisor to be a monomial, which
    // holds for homogeneous graded matrices.
    std::vector<int> torsion_exponents() const {
        std::vector<int> out;
        for (const auto& d : divisors) {
            if (d.is_unit()) continue;
            if (!d.is_monomial())
                throw Error(Errc::internal, "non-monomial invariant factor in graded matrix");
            out.push_back(d.degree());
        }
        return out;
    }
};

namespace detail {

template <class K>
class SnfEngine {
    using Poly = Polynomial<K>;
    // (degree, fill estimate, row, col); min-heap, lazily invalidated
    using Cand = std::tuple<int, int, int, int>;

public:
    explicit SnfEngine(const SparseMatrix<Poly>& m)
        : rows_(m.rows()), col_rows_(m.cols()) {
        for (const auto& [ij, v] : m.entries()) {
            rows_[ij.first].emplace(ij.second, v);
            col_rows_[ij.second].insert(ij.first);
        }
        for (const auto& [ij, v] : m.entries()) push_candidate(ij.first, ij.second);
    }

    SnfResult<K> run() {
        std::vector<Poly> pivots;
        while (true) {
            auto cand = pop_valid();
            if (!cand) break;
            auto [r0, c0] = *cand;
            if (isolate(r0, c0)) {
                pivots.push_back(rows_[r0].begin()->second);
                rows_[r0].clear();
                col_rows_[c0].clear();
            }
            // otherwise smaller-degree entries were produced; repick globally
        }
        return finish(std::move(pivots));
    }

private:
    std::vector<std::map<int, Poly>> rows_;
    std::vector<std::set<int>> col_rows_;
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap_;

    void push_candidate(int r, int c) {
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) return;
        int fill = (int)rows_[r].size() + (int)col_rows_[c].size();
        heap_.emplace(it->second.degree(), fill, r, c);
    }

    std::optional<std::pair<int, int>> pop_valid() {
        while (!heap_.empty()) {
            auto [deg, fill, r, c] = heap_.top();
            heap_.pop();
            auto it = rows_[r].find(c);
            if (it == rows_[r].end() || it->second.degree() != deg) continue;
            return std::pair{r, c};
        }
        return std::nullopt;
    }

    void set_entry(int r, int c, Poly v) {
        if (v.is_zero()) {
            rows_[r].erase(c);
            col_rows_[c].erase(r);
        } else {
            rows_[r].insert_or_assign(c, std::move(v));
            col_rows_[c].insert(r);
            push_candidate(r, c);
        }
    }

    // row_r -= q * row_r0
    void row_subtract(int r, int r0, const Poly& q) {
        for (const auto& [c, v] : rows_[r0]) {
            Poly nv = [&] {
                auto it = rows_[r].find(c);
                return it == rows_[r].end() ? -(q * v) : it->second - q * v;
            }();
            set_entry(r, c, std::move(nv));
        }
    }

    // col_c -= q * col_c0
    void col_subtract(int c, int c0, const Poly& q) {
        std::vector<int> rs(col_rows_[c0].begin(), col_rows_[c0].end());
        for (int r : rs) {
            const Poly& v = rows_[r].at(c0);
            Poly nv = [&] {
                auto it = rows_[r].find(c);
                return it == rows_[r].end() ? -(q * v) : it->second - q * v;
            }();
            set_entry(r, c, std::move(nv));
        }
    }

    // Tries to clear the pivot's column and row by Euclidean steps. Returns
    // true when (r0, c0) ends isolated; false leaves smaller-degree
    // remainders for the outer loop to pick up.
    bool isolate(int r0, int c0) {
        const Poly pivot = rows_[r0].at(c0);
        bool clean = true;
        std::vector<int> col(col_rows_[c0].begin(), col_rows_[c0].end());
        for (int r : col) {
            if (r == r0) continue;
            auto [q, rem] = Poly::divmod(rows_[r].at(c0), pivot);
            if (!q.is_zero()) row_subtract(r, r0, q);
            if (!rem.is_zero()) clean = false;
        }
        if (!clean) return false;
        std::vector<std::pair<int, Poly>> row(rows_[r0].begin(), rows_[r0].end());
        for (const auto& [c, v] : row) {
            if (c == c0) continue;
            auto [q, rem] = Poly::divmod(v, pivot);
            if (!q.is_zero()) col_subtract(c, c0, q);
            if (!rem.is_zero()) clean = false;
        }
        return clean;
    }

    static SnfResult<K> finish(std::vector<Poly> pivots) {
        SnfResult<K> res;
        for (auto& p : pivots) res.divisors.push_back(p.monic());
        res.rank = (int)res.divisors.size();
        bool all_monomial = true;
        for (const auto& d : res.divisors)
            if (!d.is_monomial()) all_monomial = false;
        auto& d = res.divisors;
        std::sort(d.begin(), d.end(), [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
        if (all_monomial) return res;  // sorted monomials already form a chain
        // pairwise gcd/lcm refinement until the divisibility chain holds
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i + 1 < d.size(); ++i) {
                for (size_t j = i + 1; j < d.size(); ++j) {
                    if (d[i].divides(d[j])) continue;
                    Poly g = poly_gcd(d[i], d[j]);
                    Poly l = Poly::divmod(d[i] * d[j], g).first.monic();
                    d[i] = std::move(g);
                    d[j] = std::move(l);
                    changed = true;
                }
            }
            if (changed) std::sort(d.begin(), d.end(), [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
        }
        return res;
    }
};

}  // namespace detail

template <class K>
SnfResult<K> smith_normal_form(const SparseMatrix<Polynomial<K>>& m) {
    detail::SnfEngine<K> engine(m);
    return engine.run();
}

}  // namespace persimod

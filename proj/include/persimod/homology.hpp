#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "persimod/complex.hpp"
#include "persimod/snf.hpp"

namespace persimod {

// Decomposition of one homology module: free summands R (recorded by birth
// degree, death = infinity) and torsion summands R/(t^l) (birth, lifetime l).
struct PersistenceModule {
    std::vector<int> free;
    std::vector<std::pair<int, int>> torsion;

    void canonicalize() {
        std::sort(free.begin(), free.end());
        std::sort(torsion.begin(), torsion.end());
    }

    // (free rank, sorted lifetimes): what survives forgetting the grading.
    std::pair<int, std::vector<int>> iso_type() const {
        std::vector<int> ls;
        for (const auto& [b, l] : torsion) ls.push_back(l);
        std::sort(ls.begin(), ls.end());
        return {(int)free.size(), std::move(ls)};
    }

    // Dimension over K of the degree-k slice, i.e. the Betti number at step k.
    int betti_at(int k) const {
        int dim = 0;
        for (int b : free)
            if (b <= k) ++dim;
        for (const auto& [b, l] : torsion)
            if (b <= k && k < b + l) ++dim;
        return dim;
    }

    bool operator==(const PersistenceModule& o) const { return free == o.free && torsion == o.torsion; }

    // "R{0} + R/t^3{0} + R/t{0} + R/t{1}" (birth degree in braces); "0" if trivial.
    std::string str() const {
        std::string out;
        auto sep = [&] { if (!out.empty()) out += " + "; };
        for (const auto& [b, l] : torsion) {
            sep();
            out += l == 1 ? "R/t" : "R/t^" + std::to_string(l);
            out += "{" + std::to_string(b) + "}";
        }
        for (int b : free) {
            sep();
            out += "R{" + std::to_string(b) + "}";
        }
        return out.empty() ? "0" : out;
    }
};

// One bar of the dimension-n pairing: creator column of the n-boundary
// (generator index in C_n), and the C_{n+1} column that kills it, if any.
struct Pair {
    int creator;
    std::optional<int> killer;
};

namespace detail {

// Column reduction of one graded boundary matrix over K, with rows and
// columns taken in (generator degree, index) order. Returns, per original
// column index: the original row index of its pivot after reduction, or -1
// for columns that reduce to zero.
template <class K>
class GradedReduction {
public:
    GradedReduction(const SparseMatrix<Polynomial<K>>& m, const std::vector<int>& row_degrees,
                    const std::vector<int>& col_degrees) {
        row_pos_ = positions(row_degrees);
        col_order_ = by_degree(col_degrees);
        pivot_of_col_.assign(col_degrees.size(), -1);
        std::vector<std::map<int, K>> cols(m.cols());  // keyed by row position
        for (const auto& [ij, v] : m.entries()) {
            if (!v.is_monomial()) throw Error(Errc::grading, "boundary entry is not a monomial");
            cols[ij.second].emplace(row_pos_[ij.first], v.leading_coeff());
        }
        std::map<int, int> col_with_low;  // pivot row position -> column
        for (int j : col_order_) {
            auto& col = cols[j];
            while (!col.empty()) {
                int low = col.rbegin()->first;
                auto it = col_with_low.find(low);
                if (it == col_with_low.end()) break;
                const auto& other = cols[it->second];
                K factor = col.rbegin()->second * other.rbegin()->second.inverse();
                for (const auto& [i, v] : other) {
                    auto [cit, fresh] = col.emplace(i, K());
                    cit->second = fresh ? -(factor * v) : cit->second - factor * v;
                    if (cit->second.is_zero()) col.erase(cit);
                }
            }
            if (!col.empty()) {
                int low = col.rbegin()->first;
                col_with_low.emplace(low, j);
                pivot_of_col_[j] = row_of_pos_.at(low);
            }
        }
    }

    // -1 when the column reduced to zero
    int pivot_row(int col) const { return pivot_of_col_[col]; }

private:
    std::vector<int> row_pos_;
    std::map<int, int> row_of_pos_;
    std::vector<int> col_order_;
    std::vector<int> pivot_of_col_;

    static std::vector<int> by_degree(const std::vector<int>& degrees) {
        std::vector<int> order(degrees.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degrees[a] < degrees[b]; });
        return order;
    }

    std::vector<int> positions(const std::vector<int>& degrees) {
        auto order = by_degree(degrees);
        std::vector<int> pos(degrees.size());
        for (size_t p = 0; p < order.size(); ++p) {
            pos[order[p]] = (int)p;
            row_of_pos_.emplace((int)p, order[p]);
        }
        return pos;
    }
};

}  // namespace detail

// Persistence pairing in dimension n: reduces the n-th boundary to find which
// n-generators create cycles, then the (n+1)-st to find which cycles die.
// Pairs are valid because a pivot row of the reduced (n+1)-boundary always
// belongs to a zero column of the reduced n-boundary.
template <class K>
std::vector<Pair> graded_reduce(const PersistenceComplex<K>& c, int n) {
    if (n < 0 || n > c.top() || c.size(n) == 0) return {};
    std::vector<char> creator(c.size(n), 1);
    if (n >= 1) {
        detail::GradedReduction<K> red(c.boundary(n), c.degrees(n - 1), c.degrees(n));
        for (int j = 0; j < c.size(n); ++j)
            if (red.pivot_row(j) >= 0) creator[j] = 0;
    }
    std::vector<Pair> pairs;
    std::map<int, int> killer_of;
    if (n + 1 <= c.top() && c.size(n + 1) > 0) {
        detail::GradedReduction<K> red(c.boundary(n + 1), c.degrees(n), c.degrees(n + 1));
        for (int j = 0; j < c.size(n + 1); ++j) {
            int i = red.pivot_row(j);
            if (i < 0) continue;
            if (!creator[i]) throw Error(Errc::internal, "pairing hit a non-cycle generator");
            killer_of.emplace(i, j);
        }
    }
    for (int i = 0; i < c.size(n); ++i) {
        if (!creator[i]) continue;
        auto it = killer_of.find(i);
        pairs.push_back(Pair{i, it == killer_of.end() ? std::nullopt : std::optional<int>(it->second)});
    }
    return pairs;
}

template <class K>
PersistenceModule persistent_homology(const PersistenceComplex<K>& c, int n) {
    PersistenceModule mod;
    for (const auto& p : graded_reduce(c, n)) {
        int birth = c.degree(n, p.creator);
        if (!p.killer) {
            mod.free.push_back(birth);
            continue;
        }
        int lifetime = c.degree(n + 1, *p.killer) - birth;
        if (lifetime > 0) mod.torsion.emplace_back(birth, lifetime);
    }
    mod.canonicalize();
    return mod;
}

// Same module through Smith normal form: free rank from the two boundary
// ranks, torsion from the invariant factors of the (n+1)-st boundary (valid
// since the cycle submodule is a direct summand of the chain module). Births
// are not recoverable this way, so they are set to 0; compare via iso_type().
template <class K>
PersistenceModule persistent_homology_snf(const PersistenceComplex<K>& c, int n) {
    PersistenceModule mod;
    if (n < 0 || n > c.top() || c.size(n) == 0) return mod;
    auto down = smith_normal_form(c.boundary(n));
    auto up = smith_normal_form(c.boundary(n + 1));
    int free_rank = c.size(n) - down.rank - up.rank;
    if (free_rank < 0) throw Error(Errc::internal, "negative free rank");
    mod.free.assign(free_rank, 0);
    for (int l : up.torsion_exponents()) mod.torsion.emplace_back(0, l);
    mod.canonicalize();
    return mod;
}

// Cohomology of the dualized complex. Births are reported in the reflected
// grading (max generator degree minus degree); the isomorphism type matches
// H^n = Hom(H_n, R)_free + Ext(H_(n-1), R)_torsion by universal coefficients.
template <class K>
PersistenceModule persistent_cohomology(const PersistenceComplex<K>& c, int n) {
    if (n < 0 || n > c.top()) return {};
    return persistent_homology(dualize(c), c.top() - n);
}

template <class K>
PersistenceModule persistent_cohomology_snf(const PersistenceComplex<K>& c, int n) {
    if (n < 0 || n > c.top()) return {};
    return persistent_homology_snf(dualize(c), c.top() - n);
}

}  // namespace persimod

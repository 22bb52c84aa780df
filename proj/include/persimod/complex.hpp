#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "persimod/error.hpp"
#include "persimod/field.hpp"
#include "persimod/filtration.hpp"
#include "persimod/polynomial.hpp"
#include "persimod/sparse_matrix.hpp"

namespace persimod {

// Chain complex of free graded K[t]-modules. boundary(n) has shape
// size(n-1) x size(n); every nonzero entry is a monomial whose exponent is
// the source generator degree minus the target generator degree.
template <class K>
class PersistenceComplex {
public:
    using Field = typename K::Field;
    using Poly = Polynomial<K>;

    PersistenceComplex(Field field, std::vector<std::vector<int>> degrees,
                       std::vector<SparseMatrix<Poly>> boundaries)
        : field_(std::move(field)), degrees_(std::move(degrees)), boundaries_(std::move(boundaries)) {
        if (boundaries_.size() != degrees_.size())
            throw Error(Errc::internal, "boundary count does not match degree count");
        if (!degrees_.empty()) boundaries_[0] = SparseMatrix<Poly>(0, (int)degrees_[0].size());
    }

    const Field& field() const { return field_; }
    int top() const { return (int)degrees_.size() - 1; }
    int size(int n) const { return n < 0 || n > top() ? 0 : (int)degrees_[n].size(); }
    int degree(int n, int i) const { return degrees_[n][i]; }
    const std::vector<int>& degrees(int n) const {
        static const std::vector<int> none;
        return n < 0 || n > top() ? none : degrees_[n];
    }

    SparseMatrix<Poly> boundary(int n) const {
        if (n >= 1 && n <= top()) return boundaries_[n];
        if (n <= 0) return SparseMatrix<Poly>(0, size(0));
        return SparseMatrix<Poly>(size(n - 1), 0);
    }

    int max_generator_degree() const {
        int m = 0;
        for (const auto& ds : degrees_)
            for (int d : ds) m = std::max(m, d);
        return m;
    }

    // Homogeneity of every entry, then exact dd = 0.
    void check() const {
        for (int n = 1; n <= top(); ++n) {
            for (const auto& [ij, v] : boundaries_[n].entries()) {
                int want = degrees_[n][ij.second] - degrees_[n - 1][ij.first];
                if (!v.is_monomial() || v.degree() != want)
                    throw Error(Errc::grading, "entry (" + std::to_string(ij.first) + "," +
                                                   std::to_string(ij.second) + ") of boundary " + std::to_string(n) +
                                                   " is not t^" + std::to_string(want));
            }
        }
        for (int n = 1; n + 1 <= top(); ++n)
            if (!(boundaries_[n] * boundaries_[n + 1]).is_zero_matrix())
                throw Error(Errc::boundary_square, "boundary composite " + std::to_string(n) + "." +
                                                       std::to_string(n + 1) + " is nonzero");
    }

    // Entrywise t := 1, giving the boundary matrices of the final snapshot.
    std::vector<SparseMatrix<K>> at_t_one() const {
        std::vector<SparseMatrix<K>> out;
        for (int n = 0; n <= top(); ++n) {
            auto b = boundary(n);
            SparseMatrix<K> m(b.rows(), b.cols());
            for (const auto& [ij, v] : b.entries()) m.set(ij.first, ij.second, v.evaluate_at_one());
            out.push_back(std::move(m));
        }
        return out;
    }

private:
    Field field_;
    std::vector<std::vector<int>> degrees_;
    std::vector<SparseMatrix<Poly>> boundaries_;
};

namespace detail {

// Simplices of one dimension in matrix order: birth, then declaration.
inline std::vector<const Simplex*> ordered_simplices(const Filtration& f, int d) {
    std::vector<const Simplex*> out;
    for (const auto& s : f.simplices(d)) out.push_back(&s);
    std::stable_sort(out.begin(), out.end(), [](const Simplex* a, const Simplex* b) { return a->birth < b->birth; });
    return out;
}

}  // namespace detail

// Boundary of sigma: sum over removed vertex positions i of
// (-1)^i t^(deg sigma - deg tau) tau.
template <class K>
PersistenceComplex<K> build_persistence_complex(const Filtration& f, const typename K::Field& field) {
    using Poly = Polynomial<K>;
    std::vector<std::vector<int>> degrees;
    std::vector<SparseMatrix<Poly>> boundaries;
    std::vector<std::map<std::vector<int>, int>> index;
    for (int d = 0; d <= f.max_dim(); ++d) {
        auto order = detail::ordered_simplices(f, d);
        std::map<std::vector<int>, int> idx;
        std::vector<int> degs;
        for (const auto* s : order) {
            idx.emplace(s->vertices, (int)degs.size());
            degs.push_back(s->birth);
        }
        index.push_back(std::move(idx));
        degrees.push_back(std::move(degs));
        SparseMatrix<Poly> bnd(d == 0 ? 0 : (int)degrees[d - 1].size(), (int)degrees[d].size());
        if (d > 0) {
            for (const auto* s : order) {
                int col = index[d].at(s->vertices);
                std::vector<int> facet(s->vertices.size() - 1);
                for (size_t skip = 0; skip < s->vertices.size(); ++skip) {
                    for (size_t i = 0, j = 0; i < s->vertices.size(); ++i)
                        if (i != skip) facet[j++] = s->vertices[i];
                    int row = index[d - 1].at(facet);
                    int exp = s->birth - f.birth_of(facet);
                    K coeff = skip % 2 == 0 ? field.one() : -field.one();
                    bnd.set(row, col, Poly::monomial(coeff, exp));
                }
            }
        }
        boundaries.push_back(std::move(bnd));
    }
    PersistenceComplex<K> c(field, std::move(degrees), std::move(boundaries));
    c.check();
    return c;
}

// Wraps a plain complex over K into the graded complex over K[t]: each entry
// [b',b] becomes [b',b] t^(deg b' - deg b). plain_boundaries[n] is the K-valued
// boundary for n >= 1; index 0 is ignored.
template <class K>
PersistenceComplex<K> load_filtered_complex(const std::vector<std::vector<int>>& degrees,
                                            const std::vector<SparseMatrix<K>>& plain_boundaries,
                                            const typename K::Field& field) {
    using Poly = Polynomial<K>;
    if (plain_boundaries.size() != degrees.size())
        throw Error(Errc::bad_argument, "boundary count does not match degree count");
    for (const auto& ds : degrees)
        for (int d : ds)
            if (d < 0) throw Error(Errc::bad_argument, "negative generator degree");
    int top = (int)degrees.size() - 1;
    for (int n = 1; n + 1 <= top; ++n)
        if (!(plain_boundaries[n] * plain_boundaries[n + 1]).is_zero_matrix())
            throw Error(Errc::boundary_square,
                        "boundary composite " + std::to_string(n) + "." + std::to_string(n + 1) + " is nonzero");
    std::vector<SparseMatrix<Poly>> scaled;
    for (int n = 0; n <= top; ++n) {
        int rows = n == 0 ? 0 : (int)degrees[n - 1].size();
        int cols = (int)degrees[n].size();
        SparseMatrix<Poly> m(rows, cols);
        if (n >= 1) {
            if (plain_boundaries[n].rows() != rows || plain_boundaries[n].cols() != cols)
                throw Error(Errc::bad_argument, "boundary " + std::to_string(n) + " has the wrong shape");
            for (const auto& [ij, v] : plain_boundaries[n].entries()) {
                int exp = degrees[n][ij.second] - degrees[n - 1][ij.first];
                if (exp < 0)
                    throw Error(Errc::grading, "entry (" + std::to_string(ij.first) + "," +
                                                   std::to_string(ij.second) + ") of boundary " + std::to_string(n) +
                                                   " maps a degree-" + std::to_string(degrees[n][ij.second]) +
                                                   " generator onto a later one");
                m.set(ij.first, ij.second, Poly::monomial(v, exp));
            }
        }
        scaled.push_back(std::move(m));
    }
    PersistenceComplex<K> c(field, degrees, std::move(scaled));
    c.check();
    return c;
}

// Plain chain complex over K (one boundary matrix per degree, index 0 empty).
template <class K>
struct SnapshotComplex {
    std::vector<int> sizes;
    std::vector<SparseMatrix<K>> boundaries;

    int top() const { return (int)sizes.size() - 1; }
    int size(int n) const { return n < 0 || n > top() ? 0 : sizes[n]; }
    SparseMatrix<K> boundary(int n) const {
        if (n >= 1 && n <= top()) return boundaries[n];
        if (n <= 0) return SparseMatrix<K>(0, size(0));
        return SparseMatrix<K>(size(n - 1), 0);
    }
    long euler_characteristic() const {
        long chi = 0;
        for (int n = 0; n <= top(); ++n) chi += (n % 2 == 0 ? 1 : -1) * (long)sizes[n];
        return chi;
    }
};

// Subcomplex of simplices with birth <= k, over K with the same sign
// convention and the same relative generator order as the graded complex.
template <class K>
SnapshotComplex<K> snapshot_complex(const Filtration& f, int k, const typename K::Field& field) {
    if (k < 0 || k > f.last_step())
        throw Error(Errc::bad_argument, "step " + std::to_string(k) + " outside 0.." + std::to_string(f.last_step()));
    SnapshotComplex<K> out;
    std::vector<std::map<std::vector<int>, int>> index;
    for (int d = 0; d <= f.max_dim(); ++d) {
        auto order = detail::ordered_simplices(f, d);
        std::map<std::vector<int>, int> idx;
        for (const auto* s : order)
            if (s->birth <= k) idx.emplace(s->vertices, (int)idx.size());
        int sz = (int)idx.size();
        if (sz == 0 && d > 0) break;
        SparseMatrix<K> bnd(d == 0 ? 0 : out.sizes[d - 1], sz);
        if (d > 0) {
            for (const auto& [verts, col] : idx) {
                std::vector<int> facet(verts.size() - 1);
                for (size_t skip = 0; skip < verts.size(); ++skip) {
                    for (size_t i = 0, j = 0; i < verts.size(); ++i)
                        if (i != skip) facet[j++] = verts[i];
                    bnd.set(index[d - 1].at(facet), col, skip % 2 == 0 ? field.one() : -field.one());
                }
            }
        }
        index.push_back(std::move(idx));
        out.sizes.push_back(sz);
        out.boundaries.push_back(std::move(bnd));
    }
    return out;
}

// Cochain complex reindexed as a chain complex: degree m holds the dual of
// chain degree top-m, boundaries are transposes, and generator degrees are
// reflected through the maximum degree so the grading stays nonnegative.
template <class K>
PersistenceComplex<K> dualize(const PersistenceComplex<K>& c) {
    using Poly = Polynomial<K>;
    int top = c.top();
    if (top < 0) return c;
    int n0 = c.max_generator_degree();
    std::vector<std::vector<int>> degrees;
    std::vector<SparseMatrix<Poly>> boundaries;
    for (int m = 0; m <= top; ++m) {
        std::vector<int> ds;
        for (int d : c.degrees(top - m)) ds.push_back(n0 - d);
        degrees.push_back(std::move(ds));
        boundaries.push_back(m == 0 ? SparseMatrix<Poly>(0, (int)degrees[0].size())
                                    : c.boundary(top - m + 1).transposed());
    }
    PersistenceComplex<K> dual(c.field(), std::move(degrees), std::move(boundaries));
    dual.check();
    return dual;
}

// Text format: "gens n: d0 d1 ..." blocks declaring generator degrees per
// chain degree, then "boundary n:" blocks of "row col value" triples with
// field-scalar values. '#' starts a comment.
template <class K>
PersistenceComplex<K> parse_generic_complex(const std::string& text, const typename K::Field& field) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::map<int, std::vector<int>> gens;
    std::map<int, std::vector<std::tuple<int, int, K, int>>> triples;  // n -> (row, col, value, line)
    int current_boundary = -1;
    auto parse_block_index = [&](std::string tok) {
        if (!tok.empty() && tok.back() == ':') tok.pop_back();
        int n = 0;
        if (!detail::parse_int(tok, n) || n < 0)
            throw Error(Errc::syntax, "bad chain degree '" + tok + "'", lineno);
        return n;
    };
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        if (toks[0] == "gens") {
            if (toks.size() < 2) throw Error(Errc::syntax, "expected 'gens n: d0 d1 ...'", lineno);
            int n = parse_block_index(toks[1]);
            if (gens.count(n)) throw Error(Errc::syntax, "duplicate 'gens " + std::to_string(n) + "' block", lineno);
            std::vector<int> ds;
            for (size_t i = 2; i < toks.size(); ++i) {
                int d = 0;
                if (!detail::parse_int(toks[i], d) || d < 0)
                    throw Error(Errc::syntax, "bad generator degree '" + toks[i] + "'", lineno);
                ds.push_back(d);
            }
            gens.emplace(n, std::move(ds));
            current_boundary = -1;
        } else if (toks[0] == "boundary") {
            if (toks.size() != 2) throw Error(Errc::syntax, "expected 'boundary n:'", lineno);
            current_boundary = parse_block_index(toks[1]);
            if (current_boundary < 1)
                throw Error(Errc::syntax, "boundary blocks start at degree 1", lineno);
            triples[current_boundary];
        } else {
            if (current_boundary < 0)
                throw Error(Errc::syntax, "entry outside a 'boundary n:' block", lineno);
            int r = 0, cidx = 0;
            if (toks.size() != 3 || !detail::parse_int(toks[0], r) || !detail::parse_int(toks[1], cidx))
                throw Error(Errc::syntax, "expected 'row col value'", lineno);
            K v;
            try {
                v = field.parse(toks[2]);
            } catch (const Error& e) {
                throw Error(e.code(), e.what(), lineno);
            }
            triples[current_boundary].emplace_back(r, cidx, v, lineno);
        }
    }
    if (gens.empty()) throw Error(Errc::syntax, "no 'gens' blocks", 0);
    int top = gens.rbegin()->first;
    for (const auto& [n, _] : triples)
        if (n > top) throw Error(Errc::syntax, "boundary " + std::to_string(n) + " has no generator block", 0);
    std::vector<std::vector<int>> degrees(top + 1);
    for (auto& [n, ds] : gens) degrees[n] = std::move(ds);
    std::vector<SparseMatrix<K>> plain;
    for (int n = 0; n <= top; ++n) {
        int rows = n == 0 ? 0 : (int)degrees[n - 1].size();
        int cols = (int)degrees[n].size();
        SparseMatrix<K> m(rows, cols);
        if (auto it = triples.find(n); it != triples.end()) {
            for (const auto& [r, cidx, v, ln] : it->second) {
                if (r < 0 || r >= rows || cidx < 0 || cidx >= cols)
                    throw Error(Errc::syntax, "entry (" + std::to_string(r) + "," + std::to_string(cidx) +
                                                  ") outside boundary " + std::to_string(n) + " of shape " +
                                                  std::to_string(rows) + "x" + std::to_string(cols),
                                ln);
                m.set(r, cidx, v);
            }
        }
        plain.push_back(std::move(m));
    }
    return load_filtered_complex<K>(degrees, plain, field);
}

}  // namespace persimod

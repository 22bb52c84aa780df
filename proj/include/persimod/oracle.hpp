#pragma once

#include <set>
#include <vector>

#include "persimod/complex.hpp"
#include "persimod/filtration.hpp"
#include "persimod/module_power.hpp"
#include "persimod/perm_group.hpp"
#include "persimod/snf.hpp"

namespace persimod {

inline constexpr long kDefaultOracleCap = 20000;  // generators of an oracle presentation

// Module presented as the cokernel of rels: R^gens / column span.
template <class K>
struct PresentationMatrix {
    int gens = 0;
    SparseMatrix<Polynomial<K>> rels{0, 0};
};

// Free generators first, then one generator per torsion summand with its
// relation a_i e_(r+i).
template <class K>
PresentationMatrix<K> present(const ModuleDescriptor<K>& m, long cap = kDefaultOracleCap) {
    auto as = detail::flat_torsion(m);
    if (!m.free_rank.fits_slong_p() || m.free_rank.get_si() + (long)as.size() > cap)
        throw Error(Errc::cap_exceeded, "presentation too large");
    const int r = (int)m.free_rank.get_si();
    const int s = (int)as.size();
    PresentationMatrix<K> p;
    p.gens = r + s;
    p.rels = SparseMatrix<Polynomial<K>>(r + s, s);
    for (int i = 0; i < s; ++i) p.rels.set(r + i, i, as[i]);
    return p;
}

// Descriptor of the cokernel via Smith normal form.
template <class K>
ModuleDescriptor<K> descriptor_of(const PresentationMatrix<K>& p) {
    auto snf = smith_normal_form(p.rels);
    ModuleDescriptor<K> out;
    out.free_rank = p.gens - snf.rank;
    if (out.free_rank < 0) throw Error(Errc::internal, "presentation rank exceeds generator count");
    for (const auto& d : snf.divisors)
        if (!d.is_unit()) out.torsion.emplace_back(d, 1);
    out.canonicalize();
    return out;
}

// Tensor product of cokernels: generators e_i x e_j indexed i*gens(b)+j,
// relations [A x I | I x B].
template <class K>
PresentationMatrix<K> oracle_tensor(const PresentationMatrix<K>& a, const PresentationMatrix<K>& b,
                                    long cap = kDefaultOracleCap) {
    if ((long)a.gens * b.gens > cap) throw Error(Errc::cap_exceeded, "tensor presentation too large");
    std::vector<std::vector<std::pair<int, Polynomial<K>>>> acols(a.rels.cols()), bcols(b.rels.cols());
    for (const auto& [ij, v] : a.rels.entries()) acols[ij.second].emplace_back(ij.first, v);
    for (const auto& [ij, v] : b.rels.entries()) bcols[ij.second].emplace_back(ij.first, v);
    PresentationMatrix<K> p;
    p.gens = a.gens * b.gens;
    p.rels = SparseMatrix<Polynomial<K>>(p.gens, a.rels.cols() * b.gens + a.gens * b.rels.cols());
    int col = 0;
    for (int c = 0; c < a.rels.cols(); ++c)
        for (int j = 0; j < b.gens; ++j, ++col)
            for (const auto& [i, v] : acols[c]) p.rels.set(i * b.gens + j, col, v);
    for (int i = 0; i < a.gens; ++i)
        for (int c = 0; c < b.rels.cols(); ++c, ++col)
            for (const auto& [j, v] : bcols[c]) p.rels.set(i * b.gens + j, col, v);
    return p;
}

enum class OracleMode { tensor, group, exterior };

// Brute-force power: iterated tensor presentation, then extra relation
// columns. Group mode adds e_(pi.f) - e_f for every basis tensor f and every
// group generator pi; exterior mode adds every basis tensor with a repeated
// index plus e_(f tau) + e_f for every transposition tau.
template <class K>
ModuleDescriptor<K> oracle_power(const ModuleDescriptor<K>& m, int n, OracleMode mode,
                                 const typename K::Field& field, const PermGroup* group = nullptr,
                                 long cap = kDefaultOracleCap) {
    using Poly = Polynomial<K>;
    if (n < 0) throw Error(Errc::bad_argument, "negative power");
    if (mode == OracleMode::group) {
        if (!group) throw Error(Errc::bad_argument, "group mode needs a group");
        if (group->letters() != n)
            throw Error(Errc::arity_mismatch, "group acts on " + std::to_string(group->letters()) +
                                                  " letters, power is " + std::to_string(n));
    }
    auto single = present(m, cap);
    PresentationMatrix<K> p;
    p.gens = 1;
    p.rels = SparseMatrix<Poly>(1, 0);
    mpz_class total = 1;
    for (int i = 0; i < n; ++i) {
        total *= single.gens;
        if (total > cap) throw Error(Errc::cap_exceeded, "oracle power presentation too large");
        p = oracle_tensor(p, single, cap);
    }
    if (n == 0 || single.gens == 0) return descriptor_of(p);

    const int base = single.gens;
    std::vector<long> strides(n);
    strides[n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) strides[i] = strides[i + 1] * base;  // row-major: f(0) outermost
    std::vector<int> f(n);
    auto decode = [&](long code) {
        for (int i = 0; i < n; ++i) {
            f[i] = (int)(code / strides[i]);
            code %= strides[i];
        }
    };
    const long count = total.get_si();
    const Poly one = Poly::constant(field.one());
    std::set<std::pair<long, long>> seen;
    std::vector<std::map<int, Poly>> extra;
    if (mode == OracleMode::group) {
        for (long code = 0; code < count; ++code) {
            decode(code);
            for (const auto& perm : group->generators()) {
                long moved = 0;
                for (int i = 0; i < n; ++i) moved += strides[i] * f[perm[i]];
                if (moved == code) continue;
                if (!seen.insert({std::min(code, moved), std::max(code, moved)}).second) continue;
                extra.push_back({{(int)moved, one}, {(int)code, -one}});
            }
        }
    } else if (mode == OracleMode::exterior) {
        for (long code = 0; code < count; ++code) {
            decode(code);
            bool dup = false;
            for (int i = 0; i < n && !dup; ++i)
                for (int j = i + 1; j < n && !dup; ++j)
                    if (f[i] == f[j]) dup = true;
            if (dup) extra.push_back({{(int)code, one}});
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (f[i] == f[j]) continue;
                    long swapped = code + (long)(f[j] - f[i]) * strides[i] + (long)(f[i] - f[j]) * strides[j];
                    if (!seen.insert({std::min(code, swapped), std::max(code, swapped)}).second) continue;
                    extra.push_back({{(int)code, one}, {(int)swapped, one}});
                }
            }
        }
    }
    if (!extra.empty()) {
        SparseMatrix<Poly> wide(p.gens, p.rels.cols() + (int)extra.size());
        for (const auto& [ij, v] : p.rels.entries()) wide.set(ij.first, ij.second, v);
        for (size_t c = 0; c < extra.size(); ++c)
            for (const auto& [i, v] : extra[c]) wide.set(i, p.rels.cols() + (int)c, v);
        p.rels = std::move(wide);
    }
    return descriptor_of(p);
}

// Orbits of G on functions [n] -> [s], each orbit sorted, orbits ordered by
// least element; codes are mixed-radix with f(0) as the least significant digit.
inline std::vector<std::vector<long>> enumerate_orbits(const PermGroup& g, long s,
                                                       long cap = kDefaultOrbitCap) {
    const int n = g.letters();
    if (s < 0) throw Error(Errc::bad_argument, "negative alphabet size");
    mpz_class total = power(mpz_class(s), n);
    if (total > cap) throw Error(Errc::cap_exceeded, "orbit enumeration exceeds cap");
    const long count = total.get_si();
    std::vector<long> strides(n);
    for (int i = 0; i < n; ++i) strides[i] = i == 0 ? 1 : strides[i - 1] * s;
    std::vector<int> f(n);
    std::vector<bool> visited(count, false);
    std::vector<std::vector<long>> orbits;
    for (long start = 0; start < count; ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        std::vector<long> orbit{start};
        for (size_t head = 0; head < orbit.size(); ++head) {
            long code = orbit[head];
            for (int i = 0; i < n; ++i) {
                f[i] = (int)(code % s);
                code /= s;
            }
            for (const auto& perm : g.generators()) {
                long moved = 0;
                for (int i = 0; i < n; ++i) moved += strides[i] * f[perm[i]];
                if (!visited[moved]) {
                    visited[moved] = true;
                    orbit.push_back(moved);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// dim over K of H_n of the k-th snapshot, by Gaussian elimination.
template <class K>
int snapshot_homology(const Filtration& f, int n, int k, const typename K::Field& field) {
    if (n < 0) return 0;
    auto snap = snapshot_complex<K>(f, k, field);
    if (n > snap.top()) return 0;
    return snap.size(n) - field_rank(snap.boundary(n)) - field_rank(snap.boundary(n + 1));
}

// Invariant factors from gcds of k x k minors; exponential, for tiny
// matrices only. Cross-checks the elimination-based Smith normal form.
template <class K>
std::vector<Polynomial<K>> minor_gcd_divisors(const SparseMatrix<Polynomial<K>>& m, int max_side = 5) {
    using Poly = Polynomial<K>;
    if (m.rows() > max_side || m.cols() > max_side)
        throw Error(Errc::cap_exceeded, "minor oracle is limited to tiny matrices");
    int side = std::min(m.rows(), m.cols());
    auto det = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        // Laplace expansion along the first listed row
        auto rec = [&](auto&& self, std::vector<int> rs, std::vector<int> cs) -> Poly {
            if (rs.empty()) throw Error(Errc::internal, "empty minor");
            if (rs.size() == 1) return m.get(rs[0], cs[0]);
            Poly acc;
            for (size_t j = 0; j < cs.size(); ++j) {
                Poly entry = m.get(rs[0], cs[j]);
                if (entry.is_zero()) continue;
                std::vector<int> sub_rs(rs.begin() + 1, rs.end());
                std::vector<int> sub_cs;
                for (size_t t = 0; t < cs.size(); ++t)
                    if (t != j) sub_cs.push_back(cs[t]);
                Poly minor = self(self, sub_rs, sub_cs);
                Poly term = entry * minor;
                acc = j % 2 == 0 ? acc + term : acc - term;
            }
            return acc;
        };
        return rec(rec, rows, cols);
    };
    // d_k = gcd of all k x k minors; divisor_k = d_k / d_(k-1)
    std::vector<Poly> gcds;  // gcds[k-1] = d_k
    for (int k = 1; k <= side; ++k) {
        Poly g;
        std::vector<int> rows, cols;
        detail::for_each_subset(m.rows(), k, rows, [&](const std::vector<int>& rsel) {
            detail::for_each_subset(m.cols(), k, cols, [&](const std::vector<int>& csel) {
                Poly d = det(rsel, csel);
                if (!d.is_zero()) g = g.is_zero() ? d.monic() : poly_gcd(g, d);
            });
        });
        if (g.is_zero()) break;  // all k x k minors vanish, rank < k
        gcds.push_back(g);
    }
    std::vector<Poly> divisors;
    for (size_t k = 0; k < gcds.size(); ++k) {
        Poly prev = k == 0 ? Poly() : gcds[k - 1];
        if (k == 0) {
            divisors.push_back(gcds[0]);
        } else {
            auto [q, rem] = Poly::divmod(gcds[k], prev);
            if (!rem.is_zero()) throw Error(Errc::internal, "minor gcds do not divide in sequence");
            divisors.push_back(q.monic());
        }
    }
    return divisors;
}

}  // namespace persimod

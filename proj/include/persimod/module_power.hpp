#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "persimod/combinatorics.hpp"
#include "persimod/error.hpp"
#include "persimod/homology.hpp"
#include "persimod/perm_group.hpp"
#include "persimod/polynomial.hpp"

namespace persimod {

inline constexpr long kDefaultOrbitCap = 10000000;   // functions enumerated by g_power
inline constexpr long kFlatTorsionCap = 100000;      // expanded torsion list length

template <class K>
bool poly_less(const Polynomial<K>& a, const Polynomial<K>& b) {
    return Polynomial<K>::compare(a, b) < 0;
}

// Isomorphism type of a finitely generated module over K[t]: free rank plus
// torsion summands R/(a) aggregated as (a, multiplicity). Canonical form:
// generators monic of degree >= 1, sorted, multiplicities positive.
template <class K>
struct ModuleDescriptor {
    using Poly = Polynomial<K>;

    mpz_class free_rank;
    std::vector<std::pair<Poly, mpz_class>> torsion;

    void canonicalize() {
        std::map<Poly, mpz_class, decltype(&poly_less<K>)> acc(&poly_less<K>);
        for (auto& [p, m] : torsion) {
            if (m < 0) throw Error(Errc::bad_argument, "negative multiplicity");
            if (m == 0) continue;
            if (p.is_zero() || p.is_unit()) throw Error(Errc::bad_argument, "torsion generator must be a nonunit");
            acc[p.monic()] += m;
        }
        torsion.assign(acc.begin(), acc.end());
    }

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }

    mpz_class torsion_count() const {
        mpz_class s = 0;
        for (const auto& [p, m] : torsion) s += m;
        return s;
    }

    bool operator==(const ModuleDescriptor& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }

    // "R^4 + (R/t^2)^3 + R/t^3"; "0" for the zero module
    std::string str() const {
        std::string out;
        auto sep = [&] { if (!out.empty()) out += " + "; };
        if (free_rank == 1) out += "R";
        else if (free_rank != 0) out += "R^" + free_rank.get_str();
        for (const auto& [p, m] : torsion) {
            sep();
            std::string summand = "R/" + p.str();
            if (m == 1) out += summand;
            else out += "(" + summand + ")^" + m.get_str();
        }
        return out.empty() ? "0" : out;
    }
};

// Forget the births: every torsion bar (b, l) becomes t^l.
template <class K>
ModuleDescriptor<K> descriptor_of(const PersistenceModule& pm, const typename K::Field& field) {
    ModuleDescriptor<K> d;
    d.free_rank = (long)pm.free.size();
    for (const auto& [b, l] : pm.torsion) d.torsion.emplace_back(Polynomial<K>::monomial(field.one(), l), 1);
    d.canonicalize();
    return d;
}

namespace detail {

template <class K>
std::vector<Polynomial<K>> flat_torsion(const ModuleDescriptor<K>& m) {
    std::vector<Polynomial<K>> out;
    for (const auto& [p, mult] : m.torsion) {
        if (mult > kFlatTorsionCap || (long)out.size() + mult.get_si() > kFlatTorsionCap)
            throw Error(Errc::cap_exceeded, "torsion list too long to enumerate");
        for (long i = 0; i < mult.get_si(); ++i) out.push_back(p);
    }
    return out;
}

// Nondecreasing index tuples (multisets) of size k over 0..s-1.
template <class Fn>
void for_each_multiset(long s, int k, std::vector<int>& idx, Fn&& fn, int from = 0) {
    if ((int)idx.size() == k) {
        fn(idx);
        return;
    }
    for (int i = from; i < s; ++i) {
        idx.push_back(i);
        for_each_multiset(s, k, idx, fn, i);
        idx.pop_back();
    }
}

// Strictly increasing index tuples (subsets) of size k over 0..s-1.
template <class Fn>
void for_each_subset(long s, int k, std::vector<int>& idx, Fn&& fn, int from = 0) {
    if ((int)idx.size() == k) {
        fn(idx);
        return;
    }
    for (int i = from; i + (k - 1 - (int)idx.size()) < s; ++i) {
        idx.push_back(i);
        for_each_subset(s, k, idx, fn, i + 1);
        idx.pop_back();
    }
}

// Ordered arrangements of a nondecreasing tuple: k! / prod(run lengths!)
inline mpz_class arrangement_count(const std::vector<int>& idx) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), idx.size());
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i;
        while (j < idx.size() && idx[j] == idx[i]) ++j;
        mpz_class runfac;
        mpz_fac_ui(runfac.get_mpz_t(), j - i);
        out /= runfac;
        i = j;
    }
    return out;
}

template <class K>
Polynomial<K> gcd_of(const std::vector<Polynomial<K>>& as, const std::vector<int>& idx) {
    std::vector<Polynomial<K>> sel;
    for (int i : idx) sel.push_back(as[i]);
    return poly_gcd(sel);
}

template <class K>
using TorsionAcc = std::map<Polynomial<K>, mpz_class, decltype(&poly_less<K>)>;

template <class K>
void add_summand(TorsionAcc<K>& acc, mpz_class& free_rank, const Polynomial<K>& gen, const mpz_class& mult) {
    if (mult == 0) return;
    if (gen.is_zero()) {
        free_rank += mult;
        return;
    }
    if (gen.is_unit()) return;  // R/(unit) = 0
    acc[gen] += mult;
}

template <class K>
ModuleDescriptor<K> pack(mpz_class free_rank, TorsionAcc<K>&& acc) {
    ModuleDescriptor<K> out;
    out.free_rank = std::move(free_rank);
    for (auto& [p, m] : acc)
        if (m != 0) out.torsion.emplace_back(p, m);
    return out;
}

}  // namespace detail

// T^n: free rank r^n; each ordered k-tuple of torsion indices contributes
// R/gcd with multiplicity binomial(n, k) r^(n-k).
template <class K>
ModuleDescriptor<K> tensor_power(const ModuleDescriptor<K>& m, int n) {
    if (n < 0) throw Error(Errc::bad_argument, "negative power");
    detail::TorsionAcc<K> acc(&poly_less<K>);
    if (n == 0) return detail::pack<K>(1, std::move(acc));
    auto as = detail::flat_torsion(m);
    mpz_class free_rank = power(m.free_rank, n);
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        mpz_class outer = binomial(n, k) * power(m.free_rank, n - k);
        if (outer == 0) continue;
        detail::for_each_multiset((long)as.size(), k, idx, [&](const std::vector<int>& t) {
            detail::add_summand(acc, free_rank, detail::gcd_of(as, t), outer * detail::arrangement_count(t));
        });
    }
    return detail::pack<K>(std::move(free_rank), std::move(acc));
}

// S^n: free rank binomial(r+n-1, n); each k-multiset contributes R/gcd with
// multiplicity binomial(r+n-k-1, n-k).
template <class K>
ModuleDescriptor<K> symmetric_power(const ModuleDescriptor<K>& m, int n) {
    if (n < 0) throw Error(Errc::bad_argument, "negative power");
    detail::TorsionAcc<K> acc(&poly_less<K>);
    if (n == 0) return detail::pack<K>(1, std::move(acc));
    auto as = detail::flat_torsion(m);
    mpz_class free_rank = binomial(m.free_rank + n - 1, n);
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        mpz_class outer = binomial(m.free_rank + n - k - 1, n - k);
        if (outer == 0) continue;
        detail::for_each_multiset((long)as.size(), k, idx, [&](const std::vector<int>& t) {
            detail::add_summand(acc, free_rank, detail::gcd_of(as, t), outer);
        });
    }
    return detail::pack<K>(std::move(free_rank), std::move(acc));
}

// Lambda^n: free rank binomial(r, n); each k-subset contributes R/gcd with
// multiplicity binomial(r, n-k). Vanishes for n > r + s.
template <class K>
ModuleDescriptor<K> exterior_power(const ModuleDescriptor<K>& m, int n) {
    if (n < 0) throw Error(Errc::bad_argument, "negative power");
    detail::TorsionAcc<K> acc(&poly_less<K>);
    if (n == 0) return detail::pack<K>(1, std::move(acc));
    auto as = detail::flat_torsion(m);
    mpz_class free_rank = binomial(m.free_rank, n);
    std::vector<int> idx;
    for (int k = 1; k <= n && k <= (int)as.size(); ++k) {
        mpz_class outer = binomial(m.free_rank, n - k);
        if (outer == 0) continue;
        detail::for_each_subset((long)as.size(), k, idx, [&](const std::vector<int>& t) {
            detail::add_summand(acc, free_rank, detail::gcd_of(as, t), outer);
        });
    }
    return detail::pack<K>(std::move(free_rank), std::move(acc));
}

// T^n_G via the zero-generator trick: extend the torsion list by r zero
// generators, enumerate the orbits of G on functions [n] -> [s+r], and read
// each orbit's summand off the generators its image touches. The image set
// is orbit-invariant because permuting the domain never changes it.
template <class K>
ModuleDescriptor<K> g_power(const ModuleDescriptor<K>& m, int n, const PermGroup& g,
                            long cap = kDefaultOrbitCap) {
    if (n < 0) throw Error(Errc::bad_argument, "negative power");
    if (g.letters() != n)
        throw Error(Errc::arity_mismatch, "group acts on " + std::to_string(g.letters()) +
                                              " letters, power is " + std::to_string(n));
    detail::TorsionAcc<K> acc(&poly_less<K>);
    if (n == 0) return detail::pack<K>(1, std::move(acc));
    auto as = detail::flat_torsion(m);
    const long s = (long)as.size();
    if (m.free_rank < 0 || !m.free_rank.fits_slong_p())
        throw Error(Errc::cap_exceeded, "free rank too large to enumerate");
    const long base = s + m.free_rank.get_si();
    mpz_class free_rank = 0;
    if (base == 0) return detail::pack<K>(std::move(free_rank), std::move(acc));  // T^n(0) = 0 for n >= 1
    mpz_class total = power(base, n);
    if (total > cap)
        throw Error(Errc::cap_exceeded,
                    "orbit enumeration needs " + total.get_str() + " functions, cap is " + std::to_string(cap));
    const long count = total.get_si();

    std::vector<long> strides(n);
    strides[0] = 1;
    for (int i = 1; i < n; ++i) strides[i] = strides[i - 1] * base;
    auto decode = [&](long code, std::vector<int>& f) {
        for (int i = 0; i < n; ++i) {
            f[i] = (int)(code % base);
            code /= base;
        }
    };

    std::vector<bool> visited(count, false);
    std::vector<int> f(n), pf(n);
    std::vector<long> queue;
    for (long start = 0; start < count; ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        queue.assign(1, start);
        for (size_t head = 0; head < queue.size(); ++head) {
            decode(queue[head], f);
            for (const auto& perm : g.generators()) {
                long code = 0;
                for (int i = 0; i < n; ++i) {
                    pf[i] = f[perm[i]];
                    code += strides[i] * pf[i];
                }
                if (!visited[code]) {
                    visited[code] = true;
                    queue.push_back(code);
                }
            }
        }
        decode(start, f);
        std::vector<Polynomial<K>> touched;
        for (int i = 0; i < n; ++i)
            if (f[i] < s) touched.push_back(as[f[i]]);
        if (touched.empty()) {
            free_rank += 1;
            continue;
        }
        detail::add_summand(acc, free_rank, poly_gcd(touched), mpz_class(1));
    }
    return detail::pack<K>(std::move(free_rank), std::move(acc));
}

template <class K>
ModuleDescriptor<K> cyclic_power(const ModuleDescriptor<K>& m, int n, long cap = kDefaultOrbitCap) {
    if (n < 1) throw Error(Errc::bad_argument, "cyclic power needs n >= 1");
    auto out = g_power(m, n, PermGroup::cyclic(n), cap);
    if (out.free_rank != necklace_count(m.free_rank, n))
        throw Error(Errc::internal, "cyclic power free rank disagrees with the necklace count");
    return out;
}

template <class K>
ModuleDescriptor<K> dihedral_power(const ModuleDescriptor<K>& m, int n, long cap = kDefaultOrbitCap) {
    if (n < 1) throw Error(Errc::bad_argument, "dihedral power needs n >= 1");
    auto out = g_power(m, n, PermGroup::dihedral(n), cap);
    if (out.free_rank != bracelet_count(m.free_rank, n))
        throw Error(Errc::internal, "dihedral power free rank disagrees with the bracelet count");
    return out;
}

// Average of r^(cycle count) over the whole group.
inline mpz_class burnside_count(const PermGroup& g, const mpz_class& r, size_t max_order = 1000000) {
    auto elements = g.elements(max_order);
    mpz_class sum = 0;
    for (const auto& p : elements) sum += power(r, cycle_count(p));
    mpz_class q, rem;
    mpz_class order((unsigned long)elements.size());
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), order.get_mpz_t());
    if (rem != 0) throw Error(Errc::internal, "Burnside sum not divisible by the group order");
    return q;
}

enum class AlgebraFlavor { free_assoc, commutative, exterior };

// Presentation of T(M), S(M) or Lambda(M): generators x1..xr (free part) and
// y1..ys (torsion part), with one relation a_i*yi per torsion summand.
template <class K>
struct AlgebraPresentation {
    AlgebraFlavor flavor;
    long free_gens;
    std::vector<Polynomial<K>> relations;

    std::string str() const {
        std::string gens, rels;
        for (long i = 1; i <= free_gens; ++i) {
            if (!gens.empty()) gens += ", ";
            gens += "x" + std::to_string(i);
        }
        for (size_t i = 0; i < relations.size(); ++i) {
            if (!gens.empty()) gens += ", ";
            gens += "y" + std::to_string(i + 1);
            if (!rels.empty()) rels += ", ";
            rels += relations[i].str() + "*y" + std::to_string(i + 1);
        }
        if (gens.empty()) return "R";
        std::string open, close;
        switch (flavor) {
        case AlgebraFlavor::free_assoc: open = "R⟨"; close = "⟩"; break;
        case AlgebraFlavor::commutative: open = "R["; close = "]"; break;
        case AlgebraFlavor::exterior: open = "Λ["; close = "]"; break;
        }
        return open + gens + (rels.empty() ? "" : " | " + rels) + close;
    }
};

template <class K>
AlgebraPresentation<K> algebra_presentation(const ModuleDescriptor<K>& m, AlgebraFlavor flavor) {
    if (!m.free_rank.fits_slong_p()) throw Error(Errc::cap_exceeded, "free rank too large to present");
    AlgebraPresentation<K> p;
    p.flavor = flavor;
    p.free_gens = m.free_rank.get_si();
    p.relations = detail::flat_torsion(m);
    return p;
}

// "r=2; t^2, t^3": parts split on ';', one optional r=N, the rest
// comma-separated monic torsion generators.
template <class K>
ModuleDescriptor<K> parse_module_descriptor(const std::string& text, const typename K::Field& field) {
    ModuleDescriptor<K> out;
    out.free_rank = 0;
    bool saw_rank = false;
    size_t start = 0;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        if (a == std::string::npos) return std::string();
        size_t b = s.find_last_not_of(" \t");
        return s.substr(a, b - a + 1);
    };
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        std::string part = trim(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
        start = end == std::string::npos ? text.size() + 1 : end + 1;
        if (part.empty()) continue;
        if (part.size() >= 2 && part[0] == 'r' && part.find('=') != std::string::npos) {
            if (saw_rank) throw Error(Errc::syntax, "free rank given twice");
            std::string num = trim(part.substr(part.find('=') + 1));
            try {
                out.free_rank = mpz_class(num);
            } catch (const std::invalid_argument&) {
                throw Error(Errc::syntax, "bad free rank '" + num + "'");
            }
            if (out.free_rank < 0) throw Error(Errc::bad_argument, "negative free rank");
            saw_rank = true;
            continue;
        }
        size_t pos = 0;
        while (pos <= part.size()) {
            size_t comma = part.find(',', pos);
            std::string item = trim(part.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
            pos = comma == std::string::npos ? part.size() + 1 : comma + 1;
            if (item.empty()) {
                if (comma == std::string::npos) break;
                throw Error(Errc::syntax, "empty torsion generator");
            }
            auto p = parse_polynomial(item, field);
            if (p.is_zero() || p.degree() < 1)
                throw Error(Errc::bad_argument, "torsion generator '" + item + "' must have degree >= 1");
            out.torsion.emplace_back(p.monic(), 1);
        }
    }
    out.canonicalize();
    return out;
}

}  // namespace persimod

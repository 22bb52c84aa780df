#pragma once

#include <random>
#include <string>
#include <vector>

#include "persimod/field.hpp"
#include "persimod/filtration.hpp"
#include "persimod/module_power.hpp"
#include "persimod/polynomial.hpp"

namespace persimod::testing {

// The eight-vertex filtration shipped as data/example8.flt.
inline const char* golden_filtration_text() {
    return "steps 4\n"
           "a 0\nb 0\nc 0\nd 1\ne 0\nf 0\ng 0\nh 1\n"
           "a b 0\na c 0\ne g 0\nb d 1\nc d 1\ne f 1\nf g 1\n"
           "e h 2\nf h 2\ng h 2\nd e 3\n"
           "f g h 3\ne f g 4\ne f h 4\ne g h 4\n";
}

template <class K>
Polynomial<K> t_power(int l, const typename K::Field& field) {
    return Polynomial<K>::monomial(field.one(), l);
}

// Descriptor with free rank r and monomial torsion t^l per listed exponent.
template <class K>
ModuleDescriptor<K> descriptor(long r, const std::vector<int>& exps, const typename K::Field& field) {
    ModuleDescriptor<K> m;
    m.free_rank = r;
    for (int l : exps) m.torsion.emplace_back(t_power<K>(l, field), 1);
    m.canonicalize();
    return m;
}

template <class K>
Polynomial<K> random_polynomial(std::mt19937& rng, const typename K::Field& field, int max_deg = 4,
                                bool allow_zero = true) {
    std::uniform_int_distribution<int> deg(allow_zero ? -1 : 0, max_deg);
    std::uniform_int_distribution<long> coeff(-6, 6);
    int d = deg(rng);
    Polynomial<K> p;
    if (d < 0) return p;
    for (int e = 0; e < d; ++e) p = p + Polynomial<K>::monomial(field.from_long(coeff(rng)), e);
    long lead = coeff(rng) | 1;  // force nonzero leading term
    return p + Polynomial<K>::monomial(field.from_long(lead), d);
}

// Random valid filtration: a handful of vertices, then random higher
// simplices whose facets are already present.
inline Filtration random_filtration(std::mt19937& rng, int max_simplices = 25, int max_dim = 3,
                                    int last_step = 5) {
    std::uniform_int_distribution<int> nv(2, 6);
    std::uniform_int_distribution<int> step(0, last_step);
    Filtration f(last_step);
    int vertices = nv(rng);
    for (int i = 0; i < vertices; ++i) f.add_vertex("v" + std::to_string(i), step(rng));
    int budget = max_simplices - vertices;
    int attempts = budget * 8;
    std::uniform_int_distribution<int> dim(1, max_dim);
    while (budget > 0 && attempts-- > 0) {
        int d = dim(rng);
        if (d + 1 > vertices) continue;
        std::vector<int> pool(vertices);
        for (int i = 0; i < vertices; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> verts(pool.begin(), pool.begin() + d + 1);
        std::sort(verts.begin(), verts.end());
        if (f.contains(verts)) continue;
        int floor = 0;
        bool ok = true;
        std::vector<int> facet(verts.size() - 1);
        for (size_t skip = 0; skip < verts.size() && ok; ++skip) {
            for (size_t i = 0, j = 0; i < verts.size(); ++i)
                if (i != skip) facet[j++] = verts[i];
            if (!f.contains(facet)) ok = false;
            else floor = std::max(floor, f.birth_of(facet));
        }
        if (!ok) continue;
        std::uniform_int_distribution<int> birth(floor, last_step);
        f.add_simplex(verts, birth(rng));
        --budget;
    }
    return f;
}

}  // namespace persimod::testing

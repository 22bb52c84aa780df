#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace persimod {

// Subgroup of the symmetric group on letters 0..n-1, given by generators
// (image tables). The full element set is only materialized on demand.
class PermGroup {
public:
    PermGroup(int letters, std::vector<std::vector<int>> generators);

    static PermGroup trivial(int n);
    static PermGroup cyclic(int n);    // <(0 1 ... n-1)>
    static PermGroup dihedral(int n);  // rotation and reversal
    static PermGroup symmetric(int n); // adjacent transpositions

    // Cycle notation, 1-based, permutations separated by ';':
    // "(1 2 3)(4 5); (2 4)". "id", "e" and "()" name the identity.
    static PermGroup parse(const std::string& text, int n);

    int letters() const { return n_; }
    const std::vector<std::vector<int>>& generators() const { return gens_; }

    // Closure under composition; throws cap-exceeded beyond max_order.
    std::vector<std::vector<int>> elements(size_t max_order = 1000000) const;
    size_t order(size_t max_order = 1000000) const { return elements(max_order).size(); }

private:
    int n_;
    std::vector<std::vector<int>> gens_;
};

// Number of cycles, fixed points included.
int cycle_count(const std::vector<int>& perm);

}  // namespace persimod

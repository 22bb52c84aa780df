#include "persimod/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

#include "persimod/error.hpp"

namespace persimod {

namespace {

void check_permutation(const std::vector<int>& p, int n) {
    if ((int)p.size() != n)
        throw Error(Errc::arity_mismatch,
                    "permutation of " + std::to_string(p.size()) + " letters, expected " + std::to_string(n));
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) throw Error(Errc::bad_argument, "not a permutation");
        seen[v] = 1;
    }
}

std::vector<int> identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

}  // namespace

PermGroup::PermGroup(int letters, std::vector<std::vector<int>> generators)
    : n_(letters), gens_(std::move(generators)) {
    if (n_ < 0) throw Error(Errc::bad_argument, "negative letter count");
    for (const auto& g : gens_) check_permutation(g, n_);
}

PermGroup PermGroup::trivial(int n) { return PermGroup(n, {}); }

PermGroup PermGroup::cyclic(int n) {
    if (n < 1) throw Error(Errc::bad_argument, "cyclic group needs n >= 1");
    if (n == 1) return trivial(1);
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    return PermGroup(n, {std::move(rot)});
}

PermGroup PermGroup::dihedral(int n) {
    if (n < 1) throw Error(Errc::bad_argument, "dihedral group needs n >= 1");
    if (n == 1) return trivial(1);
    std::vector<int> rot(n), rev(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        rev[i] = n - 1 - i;
    }
    return PermGroup(n, {std::move(rot), std::move(rev)});
}

PermGroup PermGroup::symmetric(int n) {
    if (n < 0) throw Error(Errc::bad_argument, "negative letter count");
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 1 < n; ++i) {
        auto t = identity(n);
        std::swap(t[i], t[i + 1]);
        gens.push_back(std::move(t));
    }
    return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::parse(const std::string& text, int n) {
    if (n < 0) throw Error(Errc::bad_argument, "negative letter count");
    std::vector<std::vector<int>> gens;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        start = end == std::string::npos ? text.size() + 1 : end + 1;
        // trim
        size_t a = part.find_first_not_of(" \t");
        if (a == std::string::npos) {
            if (end == std::string::npos) break;
            throw Error(Errc::syntax, "empty permutation in group spec");
        }
        size_t b = part.find_last_not_of(" \t");
        part = part.substr(a, b - a + 1);
        if (part == "id" || part == "e" || part == "()") {
            gens.push_back(identity(n));
            continue;
        }
        auto p = identity(n);
        std::vector<char> moved(n, 0);
        size_t i = 0;
        while (i < part.size()) {
            if (std::isspace((unsigned char)part[i])) {
                ++i;
                continue;
            }
            if (part[i] != '(') throw Error(Errc::syntax, "expected '(' in cycle notation: " + part);
            size_t close = part.find(')', i);
            if (close == std::string::npos) throw Error(Errc::syntax, "unclosed cycle in: " + part);
            std::vector<int> cyc;
            std::string body = part.substr(i + 1, close - i - 1);
            for (char& ch : body)
                if (ch == ',') ch = ' ';
            std::istringstream ss(body);
            std::string tok;
            while (ss >> tok) {
                int v = 0;
                try {
                    size_t pos = 0;
                    v = std::stoi(tok, &pos);
                    if (pos != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw Error(Errc::syntax, "bad letter '" + tok + "' in cycle notation");
                }
                if (v < 1 || v > n)
                    throw Error(Errc::bad_argument,
                                "letter " + std::to_string(v) + " outside 1.." + std::to_string(n));
                if (moved[v - 1]) throw Error(Errc::bad_argument, "letter " + std::to_string(v) + " appears twice");
                moved[v - 1] = 1;
                cyc.push_back(v - 1);
            }
            for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
            i = close + 1;
        }
        gens.push_back(std::move(p));
    }
    return PermGroup(n, std::move(gens));
}

std::vector<std::vector<int>> PermGroup::elements(size_t max_order) const {
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> todo;
    auto id = identity(n_);
    seen.insert(id);
    todo.push(id);
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop();
        for (const auto& g : gens_) {
            std::vector<int> next(n_);
            for (int i = 0; i < n_; ++i) next[i] = g[cur[i]];
            if (seen.insert(next).second) {
                if (seen.size() > max_order)
                    throw Error(Errc::cap_exceeded, "group order exceeds " + std::to_string(max_order));
                todo.push(std::move(next));
            }
        }
    }
    return std::vector<std::vector<int>>(seen.begin(), seen.end());
}

int cycle_count(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int count = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return count;
}

}  // namespace persimod

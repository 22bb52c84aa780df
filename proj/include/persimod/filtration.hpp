#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "persimod/error.hpp"
#include "persimod/field.hpp"

namespace persimod {

// Vertices are indices into Filtration::vertex_labels, strictly increasing
// w.r.t. the vertex total order (= declaration order).
struct Simplex {
    std::vector<int> vertices;
    int birth = 0;
    int line = 0;  // source line for diagnostics, 0 if synthetic

    int dim() const { return (int)vertices.size() - 1; }
};

class Filtration {
public:
    Filtration() = default;
    explicit Filtration(int last_step) : last_step_(last_step) {
        if (last_step < 0) throw Error(Errc::bad_argument, "negative step count");
    }

    int last_step() const { return last_step_; }
    int steps() const { return last_step_ + 1; }
    int max_dim() const { return (int)by_dim_.size() - 1; }

    const std::vector<std::string>& vertex_labels() const { return labels_; }

    // Declares a new vertex and returns its index.
    int add_vertex(const std::string& label, int birth, int line = 0) {
        if (label_index_.count(label))
            throw Error(Errc::duplicate_simplex, "vertex '" + label + "' declared twice", line);
        int idx = (int)labels_.size();
        labels_.push_back(label);
        label_index_.emplace(label, idx);
        add_simplex({idx}, birth, line);
        return idx;
    }

    int vertex_index(const std::string& label) const {
        auto it = label_index_.find(label);
        return it == label_index_.end() ? -1 : it->second;
    }

    // Vertices may come in any order; they are sorted into the canonical
    // strictly-increasing form. Faces must already be present.
    void add_simplex(std::vector<int> vertices, int birth, int line = 0) {
        if (vertices.empty()) throw Error(Errc::syntax, "empty simplex", line);
        std::sort(vertices.begin(), vertices.end());
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            if (vertices[i] == vertices[i + 1])
                throw Error(Errc::syntax, "repeated vertex in simplex", line);
        if (vertices.front() < 0 || vertices.back() >= (int)labels_.size())
            throw Error(Errc::internal, "vertex index out of range", line);
        if (birth < 0 || birth > last_step_)
            throw Error(Errc::birth_order,
                        "birth " + std::to_string(birth) + " outside steps 0.." + std::to_string(last_step_), line);
        if (births_.count(vertices))
            throw Error(Errc::duplicate_simplex, "simplex '" + name_of(vertices) + "' declared twice", line);
        if (vertices.size() > 1) {
            std::vector<int> facet(vertices.size() - 1);
            for (size_t skip = 0; skip < vertices.size(); ++skip) {
                for (size_t i = 0, j = 0; i < vertices.size(); ++i)
                    if (i != skip) facet[j++] = vertices[i];
                auto it = births_.find(facet);
                if (it == births_.end())
                    throw Error(Errc::face_closure,
                                "face '" + name_of(facet) + "' of '" + name_of(vertices) + "' not declared", line);
                if (it->second > birth)
                    throw Error(Errc::birth_order, "face '" + name_of(facet) + "' born at " +
                                                       std::to_string(it->second) + ", after '" + name_of(vertices) +
                                                       "' at " + std::to_string(birth),
                                line);
            }
        }
        int d = (int)vertices.size() - 1;
        if (d >= (int)by_dim_.size()) by_dim_.resize(d + 1);
        births_.emplace(vertices, birth);
        by_dim_[d].push_back(Simplex{std::move(vertices), birth, line});
    }

    // Simplices of dimension d in declaration order; empty past max_dim.
    const std::vector<Simplex>& simplices(int d) const {
        static const std::vector<Simplex> none;
        if (d < 0 || d >= (int)by_dim_.size()) return none;
        return by_dim_[d];
    }

    int birth_of(const std::vector<int>& vertices) const {
        auto it = births_.find(vertices);
        if (it == births_.end()) throw Error(Errc::bad_argument, "simplex not in filtration");
        return it->second;
    }

    bool contains(const std::vector<int>& vertices) const { return births_.count(vertices) > 0; }

    std::string name_of(const std::vector<int>& vertices) const {
        std::string out;
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (i) out += ' ';
            out += labels_[vertices[i]];
        }
        return out;
    }

    size_t simplex_count() const { return births_.size(); }

private:
    int last_step_ = 0;
    std::vector<std::string> labels_;
    std::map<std::string, int> label_index_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<std::vector<int>, int> births_;
};

namespace detail {

inline bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (size_t j = i; j < tok.size(); ++j)
        if (!std::isdigit((unsigned char)tok[j])) return false;
    try {
        out = std::stoi(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace detail

// File format: "steps N" header, then one simplex per line as vertex labels
// followed by the birth step ("a b 1"). '#' starts a comment. A line with a
// single label declares a vertex; faces must appear on earlier lines.
inline Filtration parse_filtration(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    Filtration f;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        if (!have_header) {
            int n = 0;
            if (toks.size() != 2 || toks[0] != "steps" || !detail::parse_int(toks[1], n) || n < 0)
                throw Error(Errc::syntax, "expected header 'steps N'", lineno);
            f = Filtration(n);
            have_header = true;
            continue;
        }
        if (toks.size() < 2)
            throw Error(Errc::syntax, "expected vertex labels followed by a birth step", lineno);
        int birth = 0;
        if (!detail::parse_int(toks.back(), birth))
            throw Error(Errc::syntax, "birth step '" + toks.back() + "' is not an integer", lineno);
        toks.pop_back();
        if (toks.size() == 1 && f.vertex_index(toks[0]) < 0) {
            f.add_vertex(toks[0], birth, lineno);
            continue;
        }
        std::vector<int> verts;
        for (const auto& lbl : toks) {
            int idx = f.vertex_index(lbl);
            if (idx < 0)
                throw Error(Errc::face_closure, "vertex '" + lbl + "' not declared", lineno);
            verts.push_back(idx);
        }
        f.add_simplex(std::move(verts), birth, lineno);
    }
    if (!have_header) throw Error(Errc::syntax, "missing 'steps N' header", 0);
    return f;
}

// Re-checks the Filtration invariants on an already built object (the
// incremental checks in add_simplex enforce them during construction; this
// exists for programmatically assembled filtrations and tests).
inline void validate(const Filtration& f) {
    for (int d = 0; d <= f.max_dim(); ++d) {
        for (const auto& s : f.simplices(d)) {
            if (s.vertices.empty()) throw Error(Errc::internal, "empty simplex");
            for (size_t i = 0; i + 1 < s.vertices.size(); ++i)
                if (s.vertices[i] >= s.vertices[i + 1])
                    throw Error(Errc::internal, "vertices not strictly increasing");
            if (s.birth < 0 || s.birth > f.last_step()) throw Error(Errc::birth_order, "birth out of range");
            if (d == 0) continue;
            std::vector<int> facet(s.vertices.size() - 1);
            for (size_t skip = 0; skip < s.vertices.size(); ++skip) {
                for (size_t i = 0, j = 0; i < s.vertices.size(); ++i)
                    if (i != skip) facet[j] = s.vertices[i], ++j;
                if (!f.contains(facet)) throw Error(Errc::face_closure, "missing face '" + f.name_of(facet) + "'");
                if (f.birth_of(facet) > s.birth)
                    throw Error(Errc::birth_order, "face '" + f.name_of(facet) + "' born after '" +
                                                       f.name_of(s.vertices) + "'");
            }
        }
    }
}

// Vietoris-Rips filtration: vertex per point (birth 0), simplex born at the
// first radius step where all pairwise distances fit in a ball of diameter
// 2r (clique rule). Exact arithmetic: squared distances vs (2r)^2.
inline Filtration rips_filtration(const std::vector<std::vector<Rational>>& points,
                                  const std::vector<Rational>& radii, int max_dim) {
    if (points.empty()) throw Error(Errc::bad_argument, "empty point set");
    if (radii.empty()) throw Error(Errc::bad_argument, "empty radius list");
    for (size_t i = 1; i < radii.size(); ++i)
        if (radii[i - 1].cmp(radii[i]) >= 0)
            throw Error(Errc::bad_argument, "radii must be strictly increasing");
    if (max_dim < 0) throw Error(Errc::bad_argument, "negative max dimension");
    const size_t dim0 = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim0) throw Error(Errc::arity_mismatch, "points of mixed coordinate arity");

    const int n = (int)points.size();
    const int last = (int)radii.size() - 1;
    Filtration f(last);
    for (int i = 0; i < n; ++i) f.add_vertex("p" + std::to_string(i), 0);

    std::vector<Rational> thresholds;  // (2r)^2 per step
    for (const auto& r : radii) {
        Rational two_r = r + r;
        thresholds.push_back(two_r * two_r);
    }
    // edge_birth[i][j] = first step with d(i,j) <= 2r, or -1 if never
    std::vector<std::vector<int>> edge_birth(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational d2;
            for (size_t k = 0; k < dim0; ++k) {
                Rational diff = points[i][k] - points[j][k];
                d2 = d2 + diff * diff;
            }
            for (int s = 0; s <= last; ++s) {
                if (d2.cmp(thresholds[s]) <= 0) {
                    edge_birth[i][j] = edge_birth[j][i] = s;
                    break;
                }
            }
        }
    }

    // grow cliques by appending vertices above the current maximum
    struct Clique {
        std::vector<int> verts;
        int birth;
    };
    std::vector<Clique> frontier;
    for (int i = 0; i < n; ++i) frontier.push_back({{i}, 0});
    for (int d = 1; d <= max_dim && !frontier.empty(); ++d) {
        std::vector<Clique> next;
        for (const auto& c : frontier) {
            for (int v = c.verts.back() + 1; v < n; ++v) {
                int birth = c.birth;
                bool ok = true;
                for (int u : c.verts) {
                    int eb = edge_birth[u][v];
                    if (eb < 0) {
                        ok = false;
                        break;
                    }
                    birth = std::max(birth, eb);
                }
                if (!ok) continue;
                auto verts = c.verts;
                verts.push_back(v);
                f.add_simplex(verts, birth);
                next.push_back({std::move(verts), birth});
            }
        }
        frontier = std::move(next);
    }
    return f;
}

}  // namespace persimod

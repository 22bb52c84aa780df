#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "persimod/error.hpp"

namespace persimod {

// Monomial c*t^e with c != 0.
template <class K>
struct Monomial {
    K coeff;
    int exponent = 0;
};

// Sparse univariate polynomial in t over a field K. Terms map exponents to
// nonzero coefficients; the zero polynomial has no terms.
template <class K>
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(K c) { return monomial(std::move(c), 0); }

    static Polynomial monomial(K c, int exponent) {
        if (exponent < 0) throw Error(Errc::bad_argument, "negative exponent in monomial");
        Polynomial p;
        if (!c.is_zero()) p.terms_.emplace(exponent, std::move(c));
        return p;
    }

    static Polynomial from(const Monomial<K>& m) { return monomial(m.coeff, m.exponent); }

    bool is_zero() const { return terms_.empty(); }

    // -1 stands in for deg 0 = -inf.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    bool is_monomial() const { return terms_.size() == 1; }

    bool is_unit() const { return terms_.size() == 1 && terms_.begin()->first == 0; }

    bool is_one() const { return is_unit() && terms_.begin()->second.is_one(); }

    const std::map<int, K>& terms() const { return terms_; }

    K coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? K() : it->second;
    }

    K leading_coeff() const {
        if (terms_.empty()) throw Error(Errc::bad_argument, "leading coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    // *this scaled by the monomial c*t^e.
    Polynomial times_monomial(const K& c, int e) const {
        Polynomial r;
        if (c.is_zero()) return r;
        for (const auto& [ea, ca] : terms_) r.terms_.emplace(ea + e, ca * c);
        return r;
    }

    Polynomial scaled(const K& c) const { return times_monomial(c, 0); }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
        Polynomial q, r = a;
        const int db = b.degree();
        const K lead_inv = b.leading_coeff().inverse();
        while (!r.is_zero() && r.degree() >= db) {
            int e = r.degree() - db;
            K c = r.leading_coeff() * lead_inv;
            q.add_term(e, c);
            r = r - b.times_monomial(c, e);
        }
        return {std::move(q), std::move(r)};
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inverse());
    }

    bool divides(const Polynomial& other) const {
        if (is_zero()) return other.is_zero();
        return divmod(other, *this).second.is_zero();
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Total order for canonical sorting: by degree, then coefficients from the
    // top exponent down, absent terms counting as zero.
    static int compare(const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
        while (ia != a.terms_.rend() || ib != b.terms_.rend()) {
            int ea = ia == a.terms_.rend() ? -1 : ia->first;
            int eb = ib == b.terms_.rend() ? -1 : ib->first;
            int c;
            if (ea == eb) {
                c = ia->second.cmp(ib->second);
                ++ia, ++ib;
            } else if (ea > eb) {
                c = ia->second.cmp(K());
                ++ia;
            } else {
                c = K().cmp(ib->second);
                ++ib;
            }
            if (c != 0) return c;
        }
        return 0;
    }

    K evaluate_at_one() const {
        K s;
        for (const auto& [e, c] : terms_) s = s + c;
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (!s.empty()) {
                s += neg ? "-" : "+";
                if (neg) cs = cs.substr(1);
            }
            if (e == 0) {
                s += cs;
            } else {
                if (cs != "1") {
                    s += cs;
                    s += "*";
                }
                s += e == 1 ? "t" : "t^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    std::map<int, K> terms_;

    void add_term(int e, K c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

// Monic gcd; gcd(0, 0) = 0. Monomial pairs short-circuit to t^min.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_monomial() && b.is_monomial()) {
        int e = std::min(a.degree(), b.degree());
        K one = a.leading_coeff() * a.leading_coeff().inverse();
        return Polynomial<K>::monomial(one, e);
    }
    while (!b.is_zero()) {
        auto r = Polynomial<K>::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class K>
Polynomial<K> poly_gcd(const std::vector<Polynomial<K>>& ps) {
    Polynomial<K> g;
    for (const auto& p : ps) g = poly_gcd(g, p);
    return g;
}

// Parses "t^3", "2*t^2-t+1", "-3/2*t", whitespace tolerated. Coefficients go
// through the field's literal parser.
template <class F>
Polynomial<typename F::Elem> parse_polynomial(std::string_view text, const F& field) {
    using K = typename F::Elem;
    Polynomial<K> result;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size()) throw Error(Errc::syntax, "empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (first) throw Error(Errc::syntax, "empty polynomial");
            break;
        }
        bool neg = false;
        if (text[i] == '+' || text[i] == '-') {
            neg = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            throw Error(Errc::syntax, "expected '+' or '-' in polynomial at offset " + std::to_string(i));
        }
        // coefficient literal (optional if the term starts with t)
        K c = field.one();
        bool have_coeff = false;
        size_t start = i;
        while (i < text.size() && (isdigit((unsigned char)text[i]) || text[i] == '/' || text[i] == '.')) ++i;
        if (i > start) {
            c = field.parse(text.substr(start, i - start));
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int e = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t es = i;
                while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
                if (i == es) throw Error(Errc::syntax, "missing exponent after '^'");
                e = std::stoi(std::string(text.substr(es, i - es)));
            }
        } else if (!have_coeff) {
            throw Error(Errc::syntax, "expected term in polynomial at offset " + std::to_string(i));
        }
        if (neg) c = -c;
        result = result + Polynomial<K>::monomial(c, e);
        first = false;
    }
    return result;
}

}  // namespace persimod

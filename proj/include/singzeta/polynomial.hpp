#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "singzeta/rational.hpp"

namespace singzeta {

// Exponent vector of a single term. Length = ambient variable count (1..3).
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
        for (int x : e)
            if (x < 0) throw std::invalid_argument("negative exponent in monomial");
    }
    Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Graded lexicographic order; the canonical term order throughout.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

inline Monomial operator+(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial arity mismatch");
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial operator-(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw std::invalid_argument("monomial quotient not integral");
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

// Sparse exact-coefficient polynomial in `nvars` variables (1..3).
// Invariant: no zero coefficients stored; every key has length nvars.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) { check_arity(nvars); }
    Polynomial(int nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
        check_arity(nvars);
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.nvars() != nvars_) throw std::invalid_argument("term arity mismatch");
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    static Polynomial constant(int nvars, const Rational& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Monomial(std::vector<int>(static_cast<size_t>(nvars), 0))] = c;
        return p;
    }
    static Polynomial variable(int nvars, int i, int power = 1) {
        Polynomial p(nvars);
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = power;
        p.terms_[Monomial(std::move(e))] = 1;
        return p;
    }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p(m.nvars());
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Leading term in grlex.
    const std::pair<const Monomial, Rational>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    int degree_in(int i) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.nvars() != nvars_) throw std::invalid_argument("term arity mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_arity(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    friend Polynomial operator*(const Rational& c, Polynomial p) {
        if (c == 0) return Polynomial(p.nvars_);
        for (auto& [m, v] : p.terms_) v *= c;
        return p;
    }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Support points as exponent vectors.
    std::vector<Monomial> support() const {
        std::vector<Monomial> s;
        s.reserve(terms_.size());
        for (const auto& [m, c] : terms_) s.push_back(m);
        return s;
    }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    static void check_arity(int n) {
        if (n < 1 || n > 3) throw std::invalid_argument("nvars must be 1..3");
    }
    void require_same_arity(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    }

    int nvars_;
    TermMap terms_;
};

inline Polynomial derivative(const Polynomial& p, int i) {
    if (i < 0 || i >= p.nvars()) throw std::out_of_range("derivative: variable index");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[i] == 0) continue;
        Monomial q = m;
        q.e[static_cast<size_t>(i)] -= 1;
        r.add_term(q, c * m[i]);
    }
    return r;
}

inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("evaluate: point arity mismatch");
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (int i = 0; i < p.nvars(); ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[static_cast<size_t>(i)];
        total += v;
    }
    return total;
}

// Substitute each variable z_i by a polynomial (used for plane sections and
// local translations). Target arity is q[0].nvars().
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& q) {
    if (static_cast<int>(q.size()) != p.nvars())
        throw std::invalid_argument("substitute: arity mismatch");
    int out_n = q.empty() ? 1 : q[0].nvars();
    Polynomial r(out_n);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(out_n, c);
        for (int i = 0; i < p.nvars(); ++i)
            for (int k = 0; k < m[i]; ++k) t = t * q[static_cast<size_t>(i)];
        r += t;
    }
    return r;
}

// z_i -> prod_k u_k^{M[k][i]} with the common monomial factor extracted.
// Returns (e, q) with substituted polynomial = u^e * q and q not divisible
// by any u_k. M has one row per output variable u_k.
inline std::pair<Monomial, Polynomial> substitute_monomial_map(
    const Polynomial& p, const std::vector<std::vector<int>>& M) {
    int out_n = static_cast<int>(M.size());
    for (const auto& row : M) {
        if (static_cast<int>(row.size()) != p.nvars())
            throw std::invalid_argument("monomial map shape mismatch");
        for (int x : row)
            if (x < 0) throw std::invalid_argument("monomial map entries must be >= 0");
    }
    Polynomial raw(out_n);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(static_cast<size_t>(out_n), 0);
        for (int k = 0; k < out_n; ++k)
            for (int i = 0; i < p.nvars(); ++i)
                e[static_cast<size_t>(k)] += M[static_cast<size_t>(k)][static_cast<size_t>(i)] * m[i];
        raw.add_term(Monomial(std::move(e)), c);
    }
    std::vector<int> factor(static_cast<size_t>(out_n), 0);
    if (raw.is_zero()) return {Monomial(std::move(factor)), raw};
    bool first = true;
    for (const auto& [m, c] : raw.terms()) {
        for (int k = 0; k < out_n; ++k)
            factor[static_cast<size_t>(k)] =
                first ? m[k] : std::min(factor[static_cast<size_t>(k)], m[k]);
        first = false;
    }
    Polynomial quo(out_n);
    Monomial f(factor);
    for (const auto& [m, c] : raw.terms()) quo.add_term(m - f, c);
    return {f, quo};
}

inline std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> vn = names;
    if (vn.empty()) {
        static const char* defaults[] = {"z1", "z2", "z3"};
        for (int i = 0; i < nvars_; ++i) vn.push_back(defaults[i]);
    }
    std::ostringstream out;
    bool first = true;
    // Print highest grlex terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (a != 1 || m.degree() == 0) {
            out << a;
            printed_coeff = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (printed_coeff) out << "*";
            out << vn[static_cast<size_t>(i)];
            if (m[i] > 1) out << "^" << m[i];
            printed_coeff = true;
        }
    }
    return out.str();
}

}  // namespace singzeta

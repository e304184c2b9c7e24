#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "singzeta/newton.hpp"

namespace singzeta {

// Normalized formal product prod (1 - t^d)^nu with distinct d and nonzero nu.
class ZetaFunction {
public:
    using FactorMap = std::map<long long, Int>;

    ZetaFunction() = default;
    explicit ZetaFunction(FactorMap f) : factors_(std::move(f)) { normalize(); }

    static ZetaFunction one() { return ZetaFunction(); }
    static ZetaFunction factor(long long d, Int nu) {
        ZetaFunction z;
        if (d <= 0) throw std::invalid_argument("zeta factor exponent must be positive");
        if (nu != 0) z.factors_[d] = std::move(nu);
        return z;
    }

    const FactorMap& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    Int exponent_of(long long d) const {
        auto it = factors_.find(d);
        return it == factors_.end() ? Int(0) : it->second;
    }

    ZetaFunction& operator*=(const ZetaFunction& o) {
        for (const auto& [d, nu] : o.factors_) {
            factors_[d] += nu;
            if (factors_[d] == 0) factors_.erase(d);
        }
        return *this;
    }
    friend ZetaFunction operator*(ZetaFunction a, const ZetaFunction& b) { return a *= b; }

    ZetaFunction power(const Int& k) const {
        ZetaFunction z;
        if (k == 0) return z;
        for (const auto& [d, nu] : factors_) z.factors_[d] = nu * k;
        return z;
    }
    ZetaFunction inverse() const { return power(-1); }

    Int degree() const {
        Int deg = 0;
        for (const auto& [d, nu] : factors_) deg += Int(d) * nu;
        return deg;
    }

    bool operator==(const ZetaFunction& o) const { return factors_ == o.factors_; }
    bool operator!=(const ZetaFunction& o) const { return !(*this == o); }

    // "(1-t^4)^-1 (1-t^5)^3 (1-t^10)^-5", factors sorted by d ascending.
    std::string str() const {
        if (factors_.empty()) return "1";
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, nu] : factors_) {
            if (!first) out << " ";
            first = false;
            out << "(1-t";
            if (d != 1) out << "^" << d;
            out << ")";
            if (nu != 1) out << "^" << nu;
        }
        return out.str();
    }

private:
    void normalize() {
        for (auto it = factors_.begin(); it != factors_.end();) {
            if (it->first <= 0) throw std::invalid_argument("zeta factor exponent must be positive");
            if (it->second == 0)
                it = factors_.erase(it);
            else
                ++it;
        }
    }

    FactorMap factors_;
};

// Varchenko's formula for the monodromy zeta-function of a Newton
// non-degenerate germ in 2 or 3 variables. Convenience is not required:
// coordinate subspaces on which the germ vanishes identically are skipped.
inline ZetaFunction varchenko_zeta(const Polynomial& g) {
    int n = g.nvars();
    if (n != 2 && n != 3) throw std::invalid_argument("varchenko_zeta: nvars must be 2 or 3");
    if (g.is_zero()) throw std::invalid_argument("varchenko_zeta: zero polynomial");
    std::vector<Monomial> support = g.support();
    ZetaFunction z;
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        std::vector<int> I;
        for (int k = 0; k < n; ++k)
            if (mask & (size_t{1} << k)) I.push_back(k);
        auto S = detail::restrict_support(support, I);
        if (S.empty()) continue;
        auto rb = detail::boundary_from_support(static_cast<int>(I.size()), std::move(S));
        int sign = static_cast<int>(I.size()) % 2 == 0 ? 1 : -1;
        for (const auto* f : rb.top_faces())
            z *= ZetaFunction::factor(f->normal.level, sign * normalized_volume(*f));
    }
    return z;
}

// Milnor number from the zeta-function of an isolated singularity germ.
inline Int milnor_from_zeta(const ZetaFunction& z, int nvars) {
    if (nvars == 3) return -1 - z.degree();
    if (nvars == 2) return z.degree() + 1;
    throw std::invalid_argument("milnor_from_zeta: nvars must be 2 or 3");
}

}  // namespace singzeta

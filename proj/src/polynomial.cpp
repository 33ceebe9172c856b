#include "dowling/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dowling {

Int binom(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        if (k > n - k) k = n - k;
        Int r = 1;
        for (long long i = 1; i <= k; ++i) {
            r *= n - k + i;
            r /= i;  // exact at every step
        }
        return r;
    }
    Int r = binom(-n + k - 1, k);
    return (k % 2 == 0) ? r : Int(-r);
}

BivariatePoly BivariatePoly::lambda_monomial(GammaPoly c, int k) {
    BivariatePoly p;
    if (!c.is_zero()) {
        p.c_.assign(static_cast<size_t>(k) + 1, GammaPoly());
        p.c_[static_cast<size_t>(k)] = std::move(c);
    }
    return p;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (GammaPoly& c : r.c_) c = -c;
    return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return BivariatePoly();
    BivariatePoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, GammaPoly());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

LambdaPoly BivariatePoly::at_gamma(const Int& g) const {
    std::vector<Int> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].eval(g);
    return LambdaPoly::from_coeffs(std::move(out));
}

std::string BivariatePoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[k].str() + ")";
        if (k > 0) {
            out += "*L";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

LambdaPoly signless(const LambdaPoly& p, int n) {
    if (p.degree() > n) throw std::invalid_argument("signless: degree exceeds n");
    std::vector<Int> c(p.coeffs());
    for (int k = 0; k <= p.degree(); ++k) {
        if ((n - k) % 2 != 0) c[static_cast<size_t>(k)] = -c[static_cast<size_t>(k)];
    }
    return LambdaPoly::from_coeffs(std::move(c));
}

BivariatePoly signless(const BivariatePoly& p, int n) {
    if (p.lambda_degree() > n) throw std::invalid_argument("signless: degree exceeds n");
    BivariatePoly r;
    for (int k = 0; k <= p.lambda_degree(); ++k) {
        GammaPoly c = p.lambda_coeff(k);
        if ((n - k) % 2 != 0) c = -c;
        r += BivariatePoly::lambda_monomial(std::move(c), k);
    }
    return r;
}

BivariatePoly expansion_substitute(const LambdaPoly& chi, int n, SubstSign sign) {
    if (chi.degree() != n) throw std::invalid_argument("expansion_substitute: input degree != n");
    const Int unit = (sign == SubstSign::minus) ? Int(-1) : Int(1);
    // coeff of lambda^t picks up a_k * binom(k, t) * unit^(k-t) * gamma^(n-k)
    std::vector<std::vector<Int>> acc(static_cast<size_t>(n) + 1,
                                      std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
    for (int k = 0; k <= n; ++k) {
        const Int a = chi.coeff(k);
        if (a == 0) continue;
        for (int t = 0; t <= k; ++t) {
            Int term = a * binom(k, t);
            if ((k - t) % 2 != 0 && unit < 0) term = -term;
            acc[static_cast<size_t>(t)][static_cast<size_t>(n - k)] += term;
        }
    }
    BivariatePoly out;
    for (int t = 0; t <= n; ++t) {
        out += BivariatePoly::lambda_monomial(GammaPoly::from_coeffs(std::move(acc[static_cast<size_t>(t)])), t);
    }
    return out;
}

}  // namespace dowling

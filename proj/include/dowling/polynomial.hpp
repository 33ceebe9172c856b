#ifndef DOWLING_POLYNOMIAL_HPP
#define DOWLING_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "dowling/int.hpp"

namespace dowling {

// Binomial coefficient as an exact integer.  Returns 0 when k < 0 or when
// 0 <= n < k.  A negative upper index follows the generalized convention
// binom(n, k) = (-1)^k * binom(-n + k - 1, k); none of the closed formulas
// evaluated by this library ever pass one, only identity checkers may.
Int binom(long long n, long long k);

struct LambdaVar {
    static constexpr const char* symbol = "L";
    static constexpr const char* json_name = "lambda";
};
struct GammaVar {
    static constexpr const char* symbol = "g";
    static constexpr const char* json_name = "gamma";
};

// Dense univariate polynomial over exact integers, coefficients stored in
// ascending powers with the top coefficient nonzero (zero poly = empty).
// The variable tag keeps lambda- and gamma-polynomials apart at compile time.
template <typename Var>
class Poly {
public:
    Poly() = default;
    Poly(Int c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    Poly(long long c) : Poly(Int(c)) {}

    static Poly variable() { return monomial(1, 1); }

    static Poly monomial(Int c, int k) {
        Poly p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
            p.c_[static_cast<size_t>(k)] = std::move(c);
        }
        return p;
    }

    static Poly from_coeffs(std::vector<Int> ascending) {
        Poly p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return c_; }

    Int coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<size_t>(k)];
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (Int& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Int& s, Poly p) {
        if (s == 0) return Poly();
        for (Int& c : p.c_) c *= s;
        return p;
    }

    Poly pow(int e) const {
        Poly r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // Multiply by x^k.
    Poly shifted(int k) const {
        if (is_zero()) return Poly();
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(k), Int(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // Ascending-power rendering, e.g. "-2 + 2*g + g^2"; zero prints "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t k = 0; k < c_.size(); ++k) {
            const Int& c = c_[k];
            if (c == 0) continue;
            const bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit = (mag == 1) && k > 0;
            if (!unit) out += mag.str();
            if (k > 0) {
                if (!unit) out += "*";
                out += Var::symbol;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    std::vector<Int> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

using LambdaPoly = Poly<LambdaVar>;
using GammaPoly = Poly<GammaVar>;

// Polynomial in lambda whose coefficients are exact polynomials in gamma.
// Stored densely in ascending powers of lambda; the chromatic polynomials
// produced here are monic with lambda-degree equal to the vertex count.
class BivariatePoly {
public:
    BivariatePoly() = default;
    BivariatePoly(GammaPoly c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }

    static BivariatePoly lambda_monomial(GammaPoly c, int k);

    bool is_zero() const { return c_.empty(); }
    int lambda_degree() const { return static_cast<int>(c_.size()) - 1; }

    GammaPoly lambda_coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return GammaPoly();
        return c_[static_cast<size_t>(k)];
    }

    BivariatePoly operator-() const;
    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

    bool operator==(const BivariatePoly& o) const { return c_ == o.c_; }
    bool operator!=(const BivariatePoly& o) const { return c_ != o.c_; }

    // Specialize gamma to a concrete value.
    LambdaPoly at_gamma(const Int& g) const;

    std::string str() const;

private:
    std::vector<GammaPoly> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Signless transform (-1)^n p(-x) of a degree <= n polynomial; an involution.
LambdaPoly signless(const LambdaPoly& p, int n);
BivariatePoly signless(const BivariatePoly& p, int n);

enum class SubstSign { minus, plus };

// Given a degree-n polynomial chi(x) = sum_k a_k x^k, expands
// gamma^n * chi((lambda -+ 1) / gamma) = sum_k a_k gamma^(n-k) (lambda -+ 1)^k
// exactly over the integers.  SubstSign::minus produces (lambda - 1)^k terms,
// SubstSign::plus the (lambda + 1)^k variant used after the signless switch.
BivariatePoly expansion_substitute(const LambdaPoly& chi, int n, SubstSign sign);

}  // namespace dowling

#endif

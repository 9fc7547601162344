#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qpoincare/rational.hpp"

namespace qpoincare {

/*
 * Dense univariate polynomial over Q, coefficients ascending in degree,
 * always trimmed. degree() of the zero polynomial is -1.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    static Polynomial constant(const Rat& v) { return Polynomial(std::vector<Rat>{v}); }

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }

    [[nodiscard]] Rat at(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)]
                                                           : Rat(0);
    }

    [[nodiscard]] Rat leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    [[nodiscard]] Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    [[nodiscard]] Polynomial derivative() const {
        std::vector<Rat> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rat(long(i)) * c_[i]);
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rat& s, const Polynomial& p) {
        std::vector<Rat> out(p.c_);
        for (auto& v : out) v *= s;
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    [[nodiscard]] std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ", ";
            out += rat_to_string(c_[i]);
        }
        return out + "]";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// quotient/remainder over Q; divisor must be nonzero
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
    Rat lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rat q = rem[static_cast<std::size_t>(i)] / lead;
        if (q == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.at(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

// monic gcd; gcd(0, 0) = 0
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a.leading()) * a;
}

inline Polynomial poly_divexact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

inline bool integer_coefficients(const Polynomial& p) {
    for (const Rat& c : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

}  // namespace qpoincare

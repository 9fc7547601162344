#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpoincare {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical text form: "p/q" in lowest terms with q > 0, plain "p" when q = 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    // strict [-]digits[/digits] so that junk like "1.5" or "2/3x" is rejected
    std::size_t i = 0;
    if (text[0] == '-') i = 1;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') { ++i; ++digits; }
    if (digits == 0) throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("bad rational literal: " + std::string(text));
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') { ++i; ++den_digits; }
        if (den_digits == 0 || i != text.size())
            throw std::invalid_argument("bad rational literal: " + std::string(text));
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// r^e for integer e (negative allowed when r != 0)
inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), k);
    out.canonicalize();
    if (inv) {
        if (out == 0) throw std::domain_error("0 raised to a negative power");
        return Rat(1) / out;
    }
    return out;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

}  // namespace qpoincare

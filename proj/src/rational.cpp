#include "redcyc/rational.hpp"

#include <stdexcept>

namespace redcyc {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational qpow(unsigned long q, long e) {
    if (e >= 0) return Rational(ipow(BigInt(q), static_cast<unsigned long>(e)));
    return make_rational(1, ipow(BigInt(q), static_cast<unsigned long>(-e)));
}

std::string fraction_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_fraction(std::string_view s) {
    std::string text(s);
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text, 10));
        return make_rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

bool is_integer(const Rational& x) { return mpz_divisible_p(x.get_num_mpz_t(), x.get_den_mpz_t()) != 0; }

BigInt floor(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

std::string decimal_string(const Rational& x, int significant) {
    if (significant < 1) throw std::invalid_argument("decimal_string: need at least one significant digit");
    if (x == 0) return "0";
    const bool negative = x < 0;
    const Rational a = negative ? Rational(-x) : x;

    // exponent e with 10^e <= a < 10^(e+1); the double estimate is corrected exactly
    long e = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
    auto pow10 = [](long k) { return qpow(10, k); };
    while (pow10(e) > a) --e;
    while (pow10(e + 1) <= a) ++e;

    // N = round(a * 10^(sig-1-e)), half away from zero
    Rational scaled = a * pow10(significant - 1 - e);
    BigInt n = floor(scaled);
    if (Rational(scaled - Rational(n)) >= Rational(1, 2)) n += 1;
    const BigInt limit = ipow(BigInt(10), static_cast<unsigned long>(significant));
    if (n >= limit) {
        n /= 10;
        ++e;
    }
    std::string digits = n.get_str();
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string out;
    if (e >= -5 && e < significant) {
        if (e < 0) {
            out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
        } else {
            const std::size_t int_len = static_cast<std::size_t>(e) + 1;
            if (digits.size() <= int_len) {
                out = digits + std::string(int_len - digits.size(), '0');
            } else {
                out = digits.substr(0, int_len) + "." + digits.substr(int_len);
            }
        }
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += e < 0 ? "e-" : "e+";
        std::string ex = std::to_string(e < 0 ? -e : e);
        if (ex.size() < 2) ex = "0" + ex;
        out += ex;
    }
    return negative ? "-" + out : out;
}

}  // namespace redcyc

#include "ramsey/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_int(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.erase(0, 1);
    }
    if (!all_digits(body)) throw std::invalid_argument("malformed number '" + s + "'");
    BigInt v(body, 10);
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt num = parse_int(text.substr(0, slash));
        std::string den_s = text.substr(slash + 1);
        if (!all_digits(den_s)) throw std::invalid_argument("malformed denominator in '" + text + "'");
        BigInt den(den_s, 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    std::string mant = text;
    long exp10 = 0;
    if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
        BigInt ev = parse_int(mant.substr(e + 1));
        if (!ev.fits_slong_p() || abs(ev) > 4000) throw std::invalid_argument("exponent too large in '" + text + "'");
        exp10 = ev.get_si();
        mant = mant.substr(0, e);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant.erase(0, 1);
    }
    std::string digits = mant;
    if (auto dot = mant.find('.'); dot != std::string::npos) {
        std::string frac = mant.substr(dot + 1);
        digits = mant.substr(0, dot) + frac;
        exp10 -= static_cast<long>(frac.size());
        if (dot == 0 && frac.empty()) throw std::invalid_argument("malformed number '" + text + "'");
    }
    if (!all_digits(digits)) throw std::invalid_argument("malformed number '" + text + "'");
    Rational q{BigInt(digits, 10)};
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    if (exp10 >= 0)
        q *= scale;
    else
        q /= scale;
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

double to_double(const Rational& q) { return q.get_d(); }

double log10_abs(const Rational& q) {
    if (q == 0) throw std::invalid_argument("log of zero");
    auto lg = [](const BigInt& z) {
        long exp = 0;
        double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
        return std::log10(std::fabs(mant)) + static_cast<double>(exp) * std::log10(2.0);
    };
    return lg(q.get_num()) - lg(q.get_den());
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt ceil(const Rational& q) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

BigInt floor(const Rational& q) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace ramsey

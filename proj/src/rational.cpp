#include "avh/rational.hpp"

namespace avh {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw ParseError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

Rational rat_from_double(double x) { return mpq_class(x); }

Rational binomial(long n, long k) {
    if (n < 0) throw Error("binomial: negative upper index");
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(r);
}

Rational factorial(long k) {
    if (k < 0) throw Error("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace avh

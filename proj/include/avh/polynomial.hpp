#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avh/multiindex.hpp"

namespace avh {

/// Sparse multivariate polynomial over the exact rationals.
/// Terms are kept in graded-lex order with no zero coefficients;
/// immutable in practice (all operations return new values).
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

    /// Zero polynomial in n variables.
    explicit Polynomial(int n);

    static Polynomial constant(int n, const Rational& c);
    static Polynomial monomial(const MultiIndex& m, const Rational& c);
    /// x_i, 0-based.
    static Polynomial variable(int n, int i);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    const TermMap& terms() const { return terms_; }
    Rational coeff(const MultiIndex& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Formal partial derivative with respect to x_i (0-based).
    Polynomial partial(int i) const;

    Rational eval(const std::vector<Rational>& point) const;

    /// In-place accumulation of one term, pruning zeros.
    void add_term(const MultiIndex& m, const Rational& c);

    std::string str() const;

private:
    int n_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Exact quotient num / f, or nullopt when f does not divide num.
std::optional<Polynomial> exact_div(const Polynomial& num, const Polynomial& f);

} // namespace avh

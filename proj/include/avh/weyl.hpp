#pragma once

#include <map>
#include <string>
#include <vector>

#include "avh/polynomial.hpp"

namespace avh {

/// Normal-form monomial x^x d^d of the Weyl algebra (all multiplication
/// operators to the left of all derivations).
struct WeylMonomial {
    MultiIndex x;
    MultiIndex d;

    /// Bernstein degree |x| + |d|.
    int degree() const { return x.degree() + d.degree(); }
    bool operator==(const WeylMonomial& o) const { return x == o.x && d == o.d; }
};

struct WeylMonomialLess {
    bool operator()(const WeylMonomial& a, const WeylMonomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.x != b.x) return grlex_less(a.x, b.x);
        return grlex_less(a.d, b.d);
    }
};

/// Element of the rank-n Weyl algebra in normal form: a sparse sum of
/// WeylMonomials with rational coefficients.
class WeylElement {
public:
    using TermMap = std::map<WeylMonomial, Rational, WeylMonomialLess>;

    explicit WeylElement(int n);
    static WeylElement one(int n);
    static WeylElement monomial(const MultiIndex& x, const MultiIndex& d,
                                const Rational& c);
    /// Multiplication operator x_i (0-based).
    static WeylElement variable(int n, int i);
    /// Derivation d/dx_i (0-based).
    static WeylElement partial(int n, int i);
    static WeylElement from_poly(const Polynomial& f);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    /// Maximal Bernstein degree, -1 for zero.
    int bernstein_degree() const;

    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator-() const;
    /// Normal-form product; agrees with operator composition on A.
    WeylElement operator*(const WeylElement& o) const;
    WeylElement operator*(const Rational& c) const;
    bool operator==(const WeylElement& o) const;
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    /// Action on a polynomial: multiply by x^x after differentiating d^d.
    Polynomial apply(const Polynomial& f) const;

    void add_term(const WeylMonomial& m, const Rational& c);

    std::string str() const;

private:
    int n_;
    TermMap terms_;
};

inline WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

/// Monomial basis {x^r d^s : |r| + |s| <= m} of the Bernstein filtration
/// subspace B^m; C(m + 2n, 2n) elements.
std::vector<WeylMonomial> bernstein_subspace(int n, int m);

} // namespace avh

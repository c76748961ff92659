#pragma once

#include <map>
#include <string>
#include <vector>

#include "avh/polynomial.hpp"

namespace avh {

/// Monomial vector field x^k d_dir (0-based direction). These are the
/// coordinates used for span computations and the PBW letters of the
/// enveloping algebras; vanishing at the origin (|k| >= 1) marks
/// membership in L+, with grade |k| - 1.
struct VfMonomial {
    MultiIndex k;
    int dir = 0;

    int grade() const { return k.degree() - 1; }
    bool operator==(const VfMonomial& o) const { return dir == o.dir && k == o.k; }
};

/// Pivot order for row reduction: graded-lex on k, direction ascending.
struct VfCoordLess {
    bool operator()(const VfMonomial& a, const VfMonomial& b) const {
        if (a.k != b.k) return grlex_less(a.k, b.k);
        return a.dir < b.dir;
    }
};

/// Letter order for PBW straightening: (|k|, direction, lex on k).
struct VfPbwLess {
    bool operator()(const VfMonomial& a, const VfMonomial& b) const {
        int da = a.k.degree(), db = b.k.degree();
        if (da != db) return da < db;
        if (a.dir != b.dir) return a.dir < b.dir;
        return grlex_less(a.k, b.k); // same degree: pure lex tie-break
    }
};

using VfCoords = std::map<VfMonomial, Rational, VfCoordLess>;

/// Polynomial vector field sum_i f_i d/dx_i.
class VectorField {
public:
    explicit VectorField(int n);
    explicit VectorField(std::vector<Polynomial> components);
    static VectorField monomial(const VfMonomial& m, const Rational& c);
    static VectorField monomial(const MultiIndex& k, int dir, const Rational& c);

    int vars() const { return n_; }
    bool is_zero() const;
    const Polynomial& component(int i) const { return comps_[static_cast<size_t>(i)]; }

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const;
    VectorField operator*(const Rational& c) const;
    /// Module structure over A: f * eta.
    VectorField scale(const Polynomial& f) const;
    bool operator==(const VectorField& o) const;
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    /// Derivation action eta(g) = sum_i f_i dg/dx_i.
    Polynomial apply(const Polynomial& g) const;

    /// Coordinates over the monomial basis {x^k d_i}.
    VfCoords coords() const;
    static VectorField from_coords(int n, const VfCoords& coords);

    /// Drops all monomials x^k d_i with |k| > kmax.
    VectorField truncate(int kmax) const;

    std::string str() const;

private:
    int n_;
    std::vector<Polynomial> comps_;
};

/// Lie bracket of derivations: [eta, mu] = eta mu - mu eta as operators
/// on A; component j is sum_i (f_i d_i g_j - g_i d_i f_j).
VectorField vf_bracket(const VectorField& a, const VectorField& b);

/// Basis of the graded piece L_d: all x^k d_i with |k| = d + 1,
/// direction-major. n * C(d + n, n - 1) elements.
std::vector<VfMonomial> lplus_graded_basis(int n, int d);

/// Basis of m^s L+ truncated at grade dmax: all x^k d_i with
/// s + 1 <= |k| <= dmax + 1.
std::vector<VfMonomial> mpow_lplus_basis(int n, int s, int dmax);

/// Exact basis of the span of iterated brackets of gens up to the given
/// nesting depth, truncated at polynomial degree dmax + 1 (grade dmax).
/// Returned as the canonical reduced echelon basis, pivot order VfCoordLess.
std::vector<VectorField> bracket_span(const std::vector<VectorField>& gens,
                                      int depth, int dmax);

/// F' generating set of L+: L0 + L1, plus L2 when n = 1.
std::vector<VfMonomial> fprime_basis(int n);

} // namespace avh

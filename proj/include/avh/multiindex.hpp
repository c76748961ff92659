#pragma once

#include <vector>

#include "avh/rational.hpp"

namespace avh {

/// Exponent vector (k_1, ..., k_n) with non-negative entries.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zero(int n);
    /// e_i (0-based direction).
    static MultiIndex unit(int n, int i);

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    /// |k| = sum of entries.
    int degree() const;

    const std::vector<int>& entries() const { return e_; }

    MultiIndex operator+(const MultiIndex& o) const;
    /// Componentwise difference; requires o <= *this componentwise.
    MultiIndex operator-(const MultiIndex& o) const;
    /// Componentwise comparison o_i <= k_i for all i.
    bool contains(const MultiIndex& o) const;

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

    std::string str() const; // "(2,0,1)"

private:
    std::vector<int> e_;
};

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically with x1-dominant exponents first. The canonical
/// term order of the whole library.
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return grlex_less(a, b);
    }
};

/// Product of componentwise binomials, prod_i C(k_i, m_i); zero as soon
/// as some m_i exceeds k_i.
Rational multi_binomial(const MultiIndex& k, const MultiIndex& m);

/// prod_i m_i!
Rational multi_factorial(const MultiIndex& m);

/// All multi-indices with |k| = d in graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int n, int d);

/// All multi-indices with |k| <= dmax in graded-lex order;
/// C(dmax + n, n) of them.
std::vector<MultiIndex> monomial_basis(int n, int dmax);

} // namespace avh

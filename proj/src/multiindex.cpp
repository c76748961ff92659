#include "avh/multiindex.hpp"

#include <algorithm>

namespace avh {

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_)
        if (v < 0) throw Error("MultiIndex: negative exponent");
}

MultiIndex MultiIndex::zero(int n) {
    return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int i) {
    if (i < 0 || i >= n) throw Error("MultiIndex::unit: index out of range");
    std::vector<int> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    return MultiIndex(std::move(v));
}

int MultiIndex::degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    require_same_n(size(), o.size(), "MultiIndex::operator+");
    std::vector<int> v(e_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.e_[i];
    return MultiIndex(std::move(v));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
    require_same_n(size(), o.size(), "MultiIndex::operator-");
    std::vector<int> v(e_);
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] -= o.e_[i];
        if (v[i] < 0) throw Error("MultiIndex::operator-: negative result");
    }
    return MultiIndex(std::move(v));
}

bool MultiIndex::contains(const MultiIndex& o) const {
    require_same_n(size(), o.size(), "MultiIndex::contains");
    for (size_t i = 0; i < e_.size(); ++i)
        if (o.e_[i] > e_[i]) return false;
    return true;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // within a degree: x1-dominant exponents first, e.g. (2,0) < (1,1) < (0,2)
    return std::lexicographical_compare(b.entries().begin(), b.entries().end(),
                                        a.entries().begin(), a.entries().end());
}

Rational multi_binomial(const MultiIndex& k, const MultiIndex& m) {
    require_same_n(k.size(), m.size(), "multi_binomial");
    Rational r(1);
    for (int i = 0; i < k.size(); ++i) {
        if (m[i] > k[i]) return Rational(0);
        r *= binomial(k[i], m[i]);
    }
    return r;
}

Rational multi_factorial(const MultiIndex& m) {
    Rational r(1);
    for (int i = 0; i < m.size(); ++i) r *= factorial(m[i]);
    return r;
}

namespace {

void emit_degree(int n, int d, std::vector<int>& acc,
                 std::vector<MultiIndex>& out) {
    if (static_cast<int>(acc.size()) == n - 1) {
        acc.push_back(d);
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (int v = d; v >= 0; --v) {
        acc.push_back(v);
        emit_degree(n, d - v, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
    if (n <= 0) throw Error("monomials_of_degree: n must be positive");
    std::vector<MultiIndex> out;
    std::vector<int> acc;
    emit_degree(n, d, acc, out);
    return out;
}

std::vector<MultiIndex> monomial_basis(int n, int dmax) {
    if (dmax < 0) throw Error("monomial_basis: dmax must be >= 0");
    std::vector<MultiIndex> out;
    for (int d = 0; d <= dmax; ++d)
        for (auto& m : monomials_of_degree(n, d)) out.push_back(std::move(m));
    return out;
}

} // namespace avh

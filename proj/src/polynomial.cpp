#include "avh/polynomial.hpp"

namespace avh {

Polynomial::Polynomial(int n) : n_(n) {
    if (n <= 0) throw Error("Polynomial: variable count must be positive");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    p.add_term(MultiIndex::zero(n), c);
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    return monomial(MultiIndex::unit(n, i), Rational(1));
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // graded order: the last term has maximal degree
    return terms_.rbegin()->first.degree();
}

Rational Polynomial::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
    require_same_n(n_, m.size(), "Polynomial::add_term");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (avh::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_n(n_, o.n_, "Polynomial::operator+");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_n(n_, o.n_, "Polynomial::operator-");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_n(n_, o.n_, "Polynomial::operator*");
    Polynomial r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(n_);
    if (avh::is_zero(c)) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw Error("Polynomial::pow: negative exponent");
    Polynomial r = constant(n_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

Polynomial Polynomial::partial(int i) const {
    if (i < 0 || i >= n_) throw Error("Polynomial::partial: index out of range");
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
        int e = m[i];
        if (e == 0) continue;
        r.add_term(m - MultiIndex::unit(n_, i), c * Rational(e));
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    require_same_n(n_, static_cast<int>(point.size()), "Polynomial::eval");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < m[i]; ++j) t *= point[static_cast<size_t>(i)];
        acc += t;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // print leading (highest-degree) terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (out.empty()) {
            if (sgn(a) < 0) { out += "-"; a = -a; }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        std::string factors;
        for (int i = 0; i < n_; ++i) {
            if (m[i] == 0) continue;
            if (!factors.empty()) factors += " ";
            factors += "x" + std::to_string(i + 1);
            if (m[i] > 1) factors += "^" + std::to_string(m[i]);
        }
        if (factors.empty()) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + " ";
            out += factors;
        }
    }
    return out;
}

std::optional<Polynomial> exact_div(const Polynomial& num, const Polynomial& f) {
    require_same_n(num.vars(), f.vars(), "exact_div");
    if (f.is_zero()) throw Error("exact_div: division by zero polynomial");
    Polynomial rem = num;
    Polynomial quot(num.vars());
    const auto& flead = *f.terms().rbegin(); // graded-lex leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!rlead.first.contains(flead.first)) return std::nullopt;
        MultiIndex m = rlead.first - flead.first;
        Rational c = rlead.second / flead.second;
        quot.add_term(m, c);
        rem = rem - f * Polynomial::monomial(m, c);
    }
    return quot;
}

} // namespace avh

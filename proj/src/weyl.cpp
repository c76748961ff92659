#include "avh/weyl.hpp"

namespace avh {

WeylElement::WeylElement(int n) : n_(n) {
    if (n <= 0) throw Error("WeylElement: variable count must be positive");
}

WeylElement WeylElement::one(int n) {
    return monomial(MultiIndex::zero(n), MultiIndex::zero(n), Rational(1));
}

WeylElement WeylElement::monomial(const MultiIndex& x, const MultiIndex& d,
                                  const Rational& c) {
    require_same_n(x.size(), d.size(), "WeylElement::monomial");
    WeylElement w(x.size());
    w.add_term({x, d}, c);
    return w;
}

WeylElement WeylElement::variable(int n, int i) {
    return monomial(MultiIndex::unit(n, i), MultiIndex::zero(n), Rational(1));
}

WeylElement WeylElement::partial(int n, int i) {
    return monomial(MultiIndex::zero(n), MultiIndex::unit(n, i), Rational(1));
}

WeylElement WeylElement::from_poly(const Polynomial& f) {
    WeylElement w(f.vars());
    for (const auto& [m, c] : f.terms())
        w.add_term({m, MultiIndex::zero(f.vars())}, c);
    return w;
}

int WeylElement::bernstein_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void WeylElement::add_term(const WeylMonomial& m, const Rational& c) {
    require_same_n(n_, m.x.size(), "WeylElement::add_term");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (avh::is_zero(it->second)) terms_.erase(it);
    }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    require_same_n(n_, o.n_, "WeylElement::operator+");
    WeylElement r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
    require_same_n(n_, o.n_, "WeylElement::operator-");
    WeylElement r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

WeylElement WeylElement::operator-() const {
    WeylElement r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    require_same_n(n_, o.n_, "WeylElement::operator*");
    // (x^r d^s)(x^a d^b) = sum_m C(s,m) C(a,m) m! x^{r+a-m} d^{s+b-m},
    // the closed form of repeatedly rewriting d_i x_i -> x_i d_i + 1.
    WeylElement r(n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<int> cap(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i)
                cap[static_cast<size_t>(i)] = std::min(ma.d[i], mb.x[i]);
            // enumerate contraction indices m <= cap componentwise
            std::vector<int> m(static_cast<size_t>(n_), 0);
            while (true) {
                MultiIndex mm{m};
                Rational coef = ca * cb * multi_binomial(ma.d, mm) *
                                multi_binomial(mb.x, mm) * multi_factorial(mm);
                r.add_term({ma.x + (mb.x - mm), (ma.d - mm) + mb.d}, coef);
                int i = 0;
                while (i < n_ && m[static_cast<size_t>(i)] ==
                                     cap[static_cast<size_t>(i)]) {
                    m[static_cast<size_t>(i)] = 0;
                    ++i;
                }
                if (i == n_) break;
                ++m[static_cast<size_t>(i)];
            }
        }
    }
    return r;
}

WeylElement WeylElement::operator*(const Rational& c) const {
    WeylElement r(n_);
    if (avh::is_zero(c)) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

bool WeylElement::operator==(const WeylElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

Polynomial WeylElement::apply(const Polynomial& f) const {
    require_same_n(n_, f.vars(), "WeylElement::apply");
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
        for (const auto& [fm, fc] : f.terms()) {
            if (!fm.contains(m.d)) continue; // derivative kills the term
            Rational coef = c * fc;
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < m.d[i]; ++j) coef *= Rational(fm[i] - j);
            out.add_term(m.x + (fm - m.d), coef);
        }
    }
    return out;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
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
        auto emit = [&](const char* sym, const MultiIndex& e) {
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (!factors.empty()) factors += " ";
                factors += sym + std::to_string(i + 1);
                if (e[i] > 1) factors += "^" + std::to_string(e[i]);
            }
        };
        emit("x", m.x);
        emit("d", m.d);
        if (factors.empty()) {
            out += rat_str(a);
        } else {
            if (a != 1) out += rat_str(a) + " ";
            out += factors;
        }
    }
    return out;
}

std::vector<WeylMonomial> bernstein_subspace(int n, int m) {
    if (m < 0) throw Error("bernstein_subspace: m must be >= 0");
    // pairs (r, s) with |r| + |s| <= m, enumerated via the 2n-variable basis
    std::vector<WeylMonomial> out;
    for (const auto& rs : monomial_basis(2 * n, m)) {
        std::vector<int> r(rs.entries().begin(), rs.entries().begin() + n);
        std::vector<int> s(rs.entries().begin() + n, rs.entries().end());
        out.push_back({MultiIndex(std::move(r)), MultiIndex(std::move(s))});
    }
    return out;
}

} // namespace avh

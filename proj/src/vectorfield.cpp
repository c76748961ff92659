#include "avh/vectorfield.hpp"

#include "avh/echelon.hpp"

namespace avh {

VectorField::VectorField(int n) : n_(n) {
    if (n <= 0) throw Error("VectorField: variable count must be positive");
    comps_.assign(static_cast<size_t>(n), Polynomial(n));
}

VectorField::VectorField(std::vector<Polynomial> components)
    : n_(static_cast<int>(components.size())), comps_(std::move(components)) {
    if (comps_.empty()) throw Error("VectorField: no components");
    for (const auto& c : comps_)
        require_same_n(n_, c.vars(), "VectorField: component count");
}

VectorField VectorField::monomial(const VfMonomial& m, const Rational& c) {
    return monomial(m.k, m.dir, c);
}

VectorField VectorField::monomial(const MultiIndex& k, int dir, const Rational& c) {
    int n = k.size();
    if (dir < 0 || dir >= n) throw Error("VectorField::monomial: bad direction");
    VectorField v(n);
    v.comps_[static_cast<size_t>(dir)] = Polynomial::monomial(k, c);
    return v;
}

bool VectorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_n(n_, o.n_, "VectorField::operator+");
    VectorField r(n_);
    for (int i = 0; i < n_; ++i)
        r.comps_[static_cast<size_t>(i)] = comps_[static_cast<size_t>(i)] +
                                           o.comps_[static_cast<size_t>(i)];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    return *this + (-o);
}

VectorField VectorField::operator-() const {
    VectorField r(n_);
    for (int i = 0; i < n_; ++i)
        r.comps_[static_cast<size_t>(i)] = -comps_[static_cast<size_t>(i)];
    return r;
}

VectorField VectorField::operator*(const Rational& c) const {
    VectorField r(n_);
    for (int i = 0; i < n_; ++i)
        r.comps_[static_cast<size_t>(i)] = comps_[static_cast<size_t>(i)] * c;
    return r;
}

VectorField VectorField::scale(const Polynomial& f) const {
    require_same_n(n_, f.vars(), "VectorField::scale");
    VectorField r(n_);
    for (int i = 0; i < n_; ++i)
        r.comps_[static_cast<size_t>(i)] = comps_[static_cast<size_t>(i)] * f;
    return r;
}

bool VectorField::operator==(const VectorField& o) const {
    return n_ == o.n_ && comps_ == o.comps_;
}

Polynomial VectorField::apply(const Polynomial& g) const {
    require_same_n(n_, g.vars(), "VectorField::apply");
    Polynomial out(n_);
    for (int i = 0; i < n_; ++i)
        out = out + comps_[static_cast<size_t>(i)] * g.partial(i);
    return out;
}

VfCoords VectorField::coords() const {
    VfCoords out;
    for (int i = 0; i < n_; ++i)
        for (const auto& [m, c] : comps_[static_cast<size_t>(i)].terms())
            out.emplace(VfMonomial{m, i}, c);
    return out;
}

VectorField VectorField::from_coords(int n, const VfCoords& coords) {
    VectorField v(n);
    for (const auto& [m, c] : coords)
        v.comps_[static_cast<size_t>(m.dir)].add_term(m.k, c);
    return v;
}

VectorField VectorField::truncate(int kmax) const {
    VectorField v(n_);
    for (int i = 0; i < n_; ++i)
        for (const auto& [m, c] : comps_[static_cast<size_t>(i)].terms())
            if (m.degree() <= kmax) v.comps_[static_cast<size_t>(i)].add_term(m, c);
    return v;
}

std::string VectorField::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < n_; ++i) {
        const auto& f = comps_[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + f.str() + ") d" + std::to_string(i + 1);
    }
    return out;
}

VectorField vf_bracket(const VectorField& a, const VectorField& b) {
    require_same_n(a.vars(), b.vars(), "vf_bracket");
    int n = a.vars();
    std::vector<Polynomial> comps(static_cast<size_t>(n), Polynomial(n));
    for (int j = 0; j < n; ++j) {
        Polynomial cj(n);
        for (int i = 0; i < n; ++i) {
            cj = cj + a.component(i) * b.component(j).partial(i) -
                 b.component(i) * a.component(j).partial(i);
        }
        comps[static_cast<size_t>(j)] = cj;
    }
    return VectorField(std::move(comps));
}

std::vector<VfMonomial> lplus_graded_basis(int n, int d) {
    if (d < 0) throw Error("lplus_graded_basis: grade must be >= 0");
    std::vector<VfMonomial> out;
    for (int i = 0; i < n; ++i)
        for (const auto& k : monomials_of_degree(n, d + 1))
            out.push_back({k, i});
    return out;
}

std::vector<VfMonomial> mpow_lplus_basis(int n, int s, int dmax) {
    if (s < 0) throw Error("mpow_lplus_basis: s must be >= 0");
    if (dmax < s) throw Error("mpow_lplus_basis: dmax must be >= s");
    std::vector<VfMonomial> out;
    for (int d = s; d <= dmax; ++d)
        for (const auto& m : lplus_graded_basis(n, d)) out.push_back(m);
    return out;
}

std::vector<VfMonomial> fprime_basis(int n) {
    std::vector<VfMonomial> out = lplus_graded_basis(n, 0);
    for (const auto& m : lplus_graded_basis(n, 1)) out.push_back(m);
    if (n == 1)
        for (const auto& m : lplus_graded_basis(n, 2)) out.push_back(m);
    return out;
}

std::vector<VectorField> bracket_span(const std::vector<VectorField>& gens,
                                      int depth, int dmax) {
    if (depth < 1) throw Error("bracket_span: depth must be >= 1");
    if (gens.empty()) return {};
    int n = gens.front().vars();
    const int kmax = dmax + 1; // polynomial-degree cutoff

    EchelonBasis<VfMonomial, VfCoordLess> ech;
    // current: independent representatives accumulated so far (as fields)
    std::vector<VectorField> current;
    for (const auto& g : gens) {
        require_same_n(n, g.vars(), "bracket_span");
        VectorField t = g.truncate(kmax);
        if (ech.insert(t.coords())) current.push_back(t);
    }

    std::vector<VectorField> frontier = current;
    for (int level = 2; level <= depth; ++level) {
        std::vector<VectorField> next;
        // brackets involving at least one frontier element cover the new level
        for (const auto& u : frontier) {
            for (const auto& v : current) {
                VectorField w = vf_bracket(u, v).truncate(kmax);
                if (ech.insert(w.coords())) next.push_back(w);
            }
        }
        for (const auto& w : next) current.push_back(w);
        if (next.empty()) break;
        frontier = std::move(next);
    }

    std::vector<VectorField> basis;
    for (const auto& [pivot, row] : ech.rows())
        basis.push_back(VectorField::from_coords(n, row));
    return basis;
}

} // namespace avh

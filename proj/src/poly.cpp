#include "rlie/poly.hpp"

#include "rlie/error.hpp"

namespace rlie {

Poly::Poly(FieldPtr f, std::vector<Elem> c) : f_(std::move(f)), c_(std::move(c)) { trim(); }

Poly Poly::monomial(FieldPtr f, Elem c, std::size_t deg) {
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(f), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    const Field& F = *f_;
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(r));
}

Poly Poly::scaled(Elem a) const {
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(a, c_[i]);
    return Poly(f_, std::move(r));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = constant(f_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    const Field& F = *f_;
    std::vector<Elem> rem = c_;
    const std::size_t dd = d.c_.size() - 1;
    if (rem.size() <= dd) return {Poly(f_), *this};
    std::vector<Elem> quo(rem.size() - dd, 0);
    Elem inv = F.inv(d.lead());
    for (std::size_t i = rem.size(); i-- > dd;) {
        Elem c = F.mul(rem[i], inv);
        quo[i - dd] = c;
        if (!c) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(c, d.c_[j]));
    }
    rem.resize(dd);
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_->inv(lead()));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        std::string c = f_->to_string(c_[i]);
        if (i == 0) {
            s += c;
            continue;
        }
        if (c_[i] != 1) s += c + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

VecPoly::VecPoly(std::size_t n, std::vector<Vec> coeffs) : n_(n), c_(std::move(coeffs)) { trim(); }

void VecPoly::trim() {
    while (!c_.empty() && rlie::is_zero(c_.back())) c_.pop_back();
}

VecPoly VecPoly::add(const Field& F, const VecPoly& o) const {
    std::vector<Vec> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = vadd(F, coeff(i), o.coeff(i));
    return VecPoly(n_, std::move(r));
}

VecPoly VecPoly::sub(const Field& F, const VecPoly& o) const {
    std::vector<Vec> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = vsub(F, coeff(i), o.coeff(i));
    return VecPoly(n_, std::move(r));
}

VecPoly VecPoly::scaled(const Field& F, Elem a) const {
    std::vector<Vec> r;
    for (const auto& v : c_) r.push_back(vscale(F, a, v));
    return VecPoly(n_, std::move(r));
}

VecPoly VecPoly::times(const Field& F, const Poly& s) const {
    if (is_zero() || s.is_zero()) return VecPoly(n_);
    std::vector<Vec> r(c_.size() + s.coeffs().size() - 1, Vec(n_, 0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < s.coeffs().size(); ++j) vaxpy(F, r[i + j], s.coeffs()[j], c_[i]);
    return VecPoly(n_, std::move(r));
}

}  // namespace rlie

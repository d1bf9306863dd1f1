#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlie/field.hpp"
#include "rlie/linalg.hpp"

namespace rlie {

// Univariate polynomial over a finite field, coefficients low to high, trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f, std::vector<Elem> c = {});
    static Poly constant(FieldPtr f, Elem c) { return Poly(std::move(f), {c}); }
    static Poly monomial(FieldPtr f, Elem c, std::size_t deg);

    const FieldPtr& field() const { return f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return long(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem a) const;
    Poly pow(std::uint64_t e) const;
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly monic() const;
    Elem eval(Elem x) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }
    std::string to_string(const std::string& var = "T") const;

private:
    void trim();
    FieldPtr f_;
    std::vector<Elem> c_;
};

Poly poly_gcd(Poly a, Poly b);

// Polynomial in T with coefficients in F^n: coefficient of T^i at index i.
class VecPoly {
public:
    VecPoly() = default;
    VecPoly(std::size_t n, std::vector<Vec> coeffs = {});
    static VecPoly constant(const Vec& v) { return VecPoly(v.size(), {v}); }

    std::size_t ambient() const { return n_; }
    const std::vector<Vec>& coeffs() const { return c_; }
    long degree() const { return long(c_.size()) - 1; }
    Vec coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Vec(n_, 0); }
    bool is_zero() const { return c_.empty(); }

    VecPoly add(const Field& F, const VecPoly& o) const;
    VecPoly sub(const Field& F, const VecPoly& o) const;
    VecPoly scaled(const Field& F, Elem a) const;
    // Product with a scalar polynomial in T.
    VecPoly times(const Field& F, const Poly& s) const;

    bool operator==(const VecPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    void trim();
    std::size_t n_ = 0;
    std::vector<Vec> c_;
};

}  // namespace rlie

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rlie {

// Elements are stored as the integer sum c_i p^i of their coordinates in the
// polynomial basis 1, x, ..., x^{k-1}. The prime subfield is {0, ..., p-1}.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kMaxFieldOrder = 1u << 20;
inline constexpr std::uint64_t kMaxScanOrder = 1u << 16;

bool is_prime(std::uint64_t n);

class Field {
public:
    // Cached per (p, k); the modulus is the lexicographically smallest monic
    // irreducible of degree k.
    static FieldPtr make(unsigned p, unsigned k = 1);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint32_t order() const { return q_; }
    bool is_prime_field() const { return k_ == 1; }
    // Coefficients c_0..c_k of the monic modulus.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    // Smallest primitive element in encoding order.
    Elem generator() const { return gen_; }
    Elem gen_pow(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
    std::uint32_t log(Elem a) const { return log_[a]; }

    Elem from_int(long long n) const;
    // Prime-subfield element as an integer in [0, p).
    unsigned to_uint(Elem a) const { return static_cast<unsigned>(a); }
    bool in_prime_field(Elem a) const { return a < p_; }

    Elem add(Elem a, Elem b) const {
        if (k_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }

    // b with b^p = a, namely a^(p^(k-1)).
    Elem pth_root(Elem a) const;
    // Smallest-encoding b with b^n = a, by exhaustive scan (q <= 2^16).
    std::optional<Elem> nth_root(Elem a, std::uint64_t n) const;
    // Prime field, odd p, a != 0.
    bool is_quadratic_residue(Elem a) const;
    // Smallest-encoding root of x^p - x = c.
    std::optional<Elem> artin_schreier_root(Elem c) const;

    std::vector<unsigned> coords(Elem a) const;
    Elem from_coords(const std::vector<unsigned>& c) const;

    // Integers for the prime subfield, otherwise g^e.
    std::string to_string(Elem a) const;

private:
    Field(unsigned p, unsigned k);
    Elem add_digits(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;

    unsigned p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    Elem gen_ = 1;
    std::vector<Elem> exp_;  // length 2(q-1)
    std::vector<std::uint32_t> log_;
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;
};

// Maps sub into super when deg(sub) divides deg(super) and the characteristics
// agree; the image of the polynomial generator is the smallest root of
// sub's modulus in super.
class FieldEmbedding {
public:
    FieldEmbedding(FieldPtr sub, FieldPtr super);
    Elem operator()(Elem a) const { return table_[a]; }
    const FieldPtr& source() const { return sub_; }
    const FieldPtr& target() const { return super_; }

private:
    FieldPtr sub_;
    FieldPtr super_;
    std::vector<Elem> table_;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr f, Elem v) : f_(std::move(f)), v_(v) {}
    static FieldElement of(const FieldPtr& f, long long n) { return {f, f->from_int(n)}; }

    const FieldPtr& field() const { return f_; }
    Elem value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {f_, f_->add(v_, o.v_)}; }
    FieldElement operator-(const FieldElement& o) const { return {f_, f_->sub(v_, o.v_)}; }
    FieldElement operator-() const { return {f_, f_->neg(v_)}; }
    FieldElement operator*(const FieldElement& o) const { return {f_, f_->mul(v_, o.v_)}; }
    FieldElement operator/(const FieldElement& o) const { return {f_, f_->div(v_, o.v_)}; }
    FieldElement operator+(long long n) const { return *this + of(f_, n); }
    FieldElement operator-(long long n) const { return *this - of(f_, n); }
    FieldElement operator*(long long n) const { return *this * of(f_, n); }
    FieldElement pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
    FieldElement inverse() const { return {f_, f_->inv(v_)}; }
    bool operator==(const FieldElement& o) const { return v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return v_ != o.v_; }
    bool operator==(long long n) const { return v_ == f_->from_int(n); }
    std::string to_string() const { return f_->to_string(v_); }

private:
    FieldPtr f_;
    Elem v_ = 0;
};

}  // namespace rlie

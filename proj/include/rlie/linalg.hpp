#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rlie/field.hpp"

namespace rlie {

using Vec = std::vector<Elem>;

bool is_zero(const Vec& v);
Vec vadd(const Field& F, const Vec& a, const Vec& b);
Vec vsub(const Field& F, const Vec& a, const Vec& b);
Vec vscale(const Field& F, Elem c, const Vec& a);
// a += c * b
void vaxpy(const Field& F, Vec& a, Elem c, const Vec& b);
Vec unit_vector(std::size_t n, std::size_t j);

class Subspace;

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldPtr f, std::size_t n);
    static Matrix from_rows(FieldPtr f, const std::vector<Vec>& rows, std::size_t cols = 0);
    static Matrix from_columns(FieldPtr f, const std::vector<Vec>& cols, std::size_t rows = 0);
    // Integer entries reduced mod p, row-major.
    static Matrix from_ints(FieldPtr f, std::size_t rows, std::size_t cols, const std::vector<long long>& v);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<Elem>& data() const { return a_; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    void set_column(std::size_t j, const Vec& v);
    Vec apply(const Vec& v) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Elem c) const;
    Matrix power(std::uint64_t e) const;
    Matrix transpose() const;

    // Reduced row echelon form; pivots receives the pivot column of each nonzero row.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    bool is_invertible() const;
    std::optional<Matrix> inverse() const;
    Elem determinant() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    // Canonical ordering: shape, then entries row-major by encoding.
    bool operator<(const Matrix& o) const;

    std::string to_string() const;

private:
    FieldPtr f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Elem> a_;
};

class Subspace {
public:
    Subspace() = default;
    static Subspace zero(FieldPtr f, std::size_t n);
    static Subspace full(FieldPtr f, std::size_t n);
    static Subspace span(FieldPtr f, std::size_t n, const std::vector<Vec>& vs);

    const FieldPtr& field() const { return f_; }
    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Matrix basis_matrix() const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    // Visits every element sum c_i b_i, coefficient tuples in increasing
    // lexicographic order. Returns false if the callback stopped early.
    bool for_each_vector(const std::function<bool(const Vec&)>& fn) const;
    std::uint64_t size() const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    FieldPtr f_;
    std::size_t n_ = 0;
    std::vector<Vec> basis_;  // rows of the reduced echelon form
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// Every subspace of F^n, by echelon shape; q^n must be at most 2^16.
std::vector<Subspace> all_subspaces(const FieldPtr& f, std::size_t n);

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

}  // namespace rlie

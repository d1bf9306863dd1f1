#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlie/field.hpp"
#include "rlie/linalg.hpp"

namespace rlie {

inline constexpr std::size_t kMaxLieDim = 8;

class LieAlgebra {
public:
    LieAlgebra() = default;
    // Abelian algebra on the given basis names.
    LieAlgebra(FieldPtr f, std::vector<std::string> names);

    // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
    void set_bracket(std::size_t i, std::size_t j, const Vec& v);

    const FieldPtr& field() const { return f_; }
    const Field& F() const { return *f_; }
    std::size_t dim() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    // c[i][j][k] flattened as ((i*n)+j)*n+k.
    const std::vector<Elem>& tensor() const { return c_; }
    Vec structure(std::size_t i, std::size_t j) const;
    Elem c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    Vec zero() const { return Vec(n_, 0); }
    Vec basis(std::size_t j) const { return unit_vector(n_, j); }
    Vec bracket(const Vec& u, const Vec& v) const;
    // Columns are [u, e_j].
    Matrix ad(const Vec& u) const;
    bool is_abelian() const;

    Subspace center() const;
    Subspace derived() const;
    Subspace bracket_of(const Subspace& a, const Subspace& b) const;
    Subspace centralizer(const Vec& u) const;
    bool is_ideal(const Subspace& s) const;
    bool is_nilpotent() const;
    bool is_solvable() const;
    // Maximal nilpotent ideal by enumerating subspaces (q^n <= 2^16).
    Subspace nilradical() const;
    std::vector<std::size_t> lower_central_dims() const;
    std::vector<std::size_t> derived_series_dims() const;

    LieAlgebra base_change(const FieldEmbedding& emb) const;

    // Linear combination in the algebra-file grammar, e.g. "x + 2*y".
    std::string format(const Vec& v) const;

    bool operator==(const LieAlgebra& o) const {
        return f_ == o.f_ && n_ == o.n_ && names_ == o.names_ && c_ == o.c_;
    }
    bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

private:
    FieldPtr f_;
    std::size_t n_ = 0;
    std::vector<std::string> names_;
    std::vector<Elem> c_;
    std::vector<std::pair<std::size_t, std::size_t>> support_;  // pairs i != j with nonzero bracket
};

struct JacobiViolation {
    std::size_t i, j, k;  // i < j < k
    Vec value;            // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

Vec jacobiator(const LieAlgebra& L, const Vec& a, const Vec& b, const Vec& c);
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& L);

// Linear map between algebras of equal dimension (columns are images of the
// source basis) that preserves brackets.
bool is_lie_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& phi);
bool is_automorphism(const LieAlgebra& L, const Matrix& phi);

struct AlgebraFile {
    LieAlgebra algebra;
    std::optional<std::vector<Vec>> pmap;  // basis images when any pmap line is present
};

AlgebraFile parse_algebra_file(const std::string& text);
LieAlgebra parse_algebra(const std::string& text);

// Parses "<coeff>*<name> + ..." against a basis. Coefficient factors are
// integers, g, g^<e>, or names from params; factors multiply with '*'.
// column_offset shifts reported columns for embedding in a larger line.
Vec parse_lincomb(const std::string& text, const Field& F, const std::vector<std::string>& names,
                  const std::map<std::string, Elem>& params = {}, std::size_t line = 1,
                  std::size_t column_offset = 0);

// The algebra-file text for L and optional p-map images.
std::string write_algebra_file(const LieAlgebra& L, const std::vector<Vec>* pmap = nullptr);

}  // namespace rlie

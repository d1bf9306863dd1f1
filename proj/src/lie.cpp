#include "rlie/lie.hpp"

#include <algorithm>
#include <set>

#include "rlie/error.hpp"

namespace rlie {

LieAlgebra::LieAlgebra(FieldPtr f, std::vector<std::string> names)
    : f_(std::move(f)), n_(names.size()), names_(std::move(names)), c_(n_ * n_ * n_, 0) {
    if (n_ == 0 || n_ > kMaxLieDim) throw DomainError("dimension must be between 1 and 8");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
    if (i >= n_ || j >= n_ || v.size() != n_) throw DomainError("bracket index out of range");
    if (i == j) {
        if (!rlie::is_zero(v)) throw DomainError("[e,e] must vanish");
        return;
    }
    for (std::size_t k = 0; k < n_; ++k) {
        c_[(i * n_ + j) * n_ + k] = v[k];
        c_[(j * n_ + i) * n_ + k] = f_->neg(v[k]);
    }
    support_.clear();
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (!rlie::is_zero(structure(a, b))) support_.emplace_back(a, b);
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return std::size_t(it - names_.begin());
}

Vec LieAlgebra::structure(std::size_t i, std::size_t j) const {
    return Vec(c_.begin() + (i * n_ + j) * n_, c_.begin() + (i * n_ + j + 1) * n_);
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    const Field& F = *f_;
    Vec r(n_, 0);
    for (auto [i, j] : support_) {
        if (!u[i] || !v[j]) continue;
        Elem s = F.mul(u[i], v[j]);
        const Elem* row = &c_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k)
            if (row[k]) r[k] = F.add(r[k], F.mul(s, row[k]));
    }
    return r;
}

Matrix LieAlgebra::ad(const Vec& u) const {
    Matrix m(f_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) m.set_column(j, bracket(u, basis(j)));
    return m;
}

bool LieAlgebra::is_abelian() const { return support_.empty(); }

Subspace LieAlgebra::center() const {
    // u is central iff sum_i u_i c[i][j][k] = 0 for all j, k.
    Matrix m(f_, n_ * n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t i = 0; i < n_; ++i) m(j * n_ + k, i) = c(i, j, k);
    return kernel(m);
}

Subspace LieAlgebra::derived() const {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) vs.push_back(structure(i, j));
    return Subspace::span(f_, n_, vs);
}

Subspace LieAlgebra::bracket_of(const Subspace& a, const Subspace& b) const {
    std::vector<Vec> vs;
    for (const auto& u : a.basis())
        for (const auto& v : b.basis()) vs.push_back(bracket(u, v));
    return Subspace::span(f_, n_, vs);
}

Subspace LieAlgebra::centralizer(const Vec& u) const { return kernel(ad(u)); }

bool LieAlgebra::is_ideal(const Subspace& s) const {
    for (const auto& b : s.basis())
        for (std::size_t j = 0; j < n_; ++j)
            if (!s.contains(bracket(basis(j), b))) return false;
    return true;
}

std::vector<std::size_t> LieAlgebra::lower_central_dims() const {
    std::vector<std::size_t> dims;
    Subspace full = Subspace::full(f_, n_);
    Subspace cur = full;
    dims.push_back(cur.dim());
    while (true) {
        Subspace next = bracket_of(full, cur);
        if (next.dim() == cur.dim()) break;
        cur = next;
        dims.push_back(cur.dim());
    }
    return dims;
}

std::vector<std::size_t> LieAlgebra::derived_series_dims() const {
    std::vector<std::size_t> dims;
    Subspace cur = Subspace::full(f_, n_);
    dims.push_back(cur.dim());
    while (true) {
        Subspace next = bracket_of(cur, cur);
        if (next.dim() == cur.dim()) break;
        cur = next;
        dims.push_back(cur.dim());
    }
    return dims;
}

bool LieAlgebra::is_nilpotent() const { return lower_central_dims().back() == 0; }

bool LieAlgebra::is_solvable() const { return derived_series_dims().back() == 0; }

Subspace LieAlgebra::nilradical() const {
    auto is_nilpotent_ideal = [&](const Subspace& s) {
        Subspace cur = s;
        while (cur.dim() > 0) {
            Subspace next = bracket_of(s, cur);
            if (next.dim() == cur.dim()) return false;
            cur = next;
        }
        return true;
    };
    std::vector<Subspace> found;
    for (const auto& s : all_subspaces(f_, n_))
        if (is_ideal(s) && is_nilpotent_ideal(s)) found.push_back(s);
    auto best = std::max_element(found.begin(), found.end(),
                                 [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    for (const auto& s : found)
        if (!best->contains(s)) throw Error("nilpotent ideals have no unique maximal element");
    return *best;
}

LieAlgebra LieAlgebra::base_change(const FieldEmbedding& emb) const {
    if (emb.source() != f_) throw DomainError("embedding source is not the algebra's field");
    LieAlgebra L(emb.target(), names_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            Vec v = structure(i, j);
            for (auto& e : v) e = emb(e);
            L.set_bracket(i, j, v);
        }
    return L;
}

std::string LieAlgebra::format(const Vec& v) const {
    const Field& F = *f_;
    std::string s;
    for (std::size_t k = 0; k < n_; ++k) {
        Elem c = v[k];
        if (!c) continue;
        bool negative = F.is_prime_field() && F.p() > 2 && c > F.p() / 2;
        Elem mag = negative ? F.neg(c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (mag != 1) s += F.to_string(mag) + "*";
        s += names_[k];
    }
    return s.empty() ? "0" : s;
}

Vec jacobiator(const LieAlgebra& L, const Vec& a, const Vec& b, const Vec& c) {
    const Field& F = L.F();
    Vec r = L.bracket(a, L.bracket(b, c));
    r = vadd(F, r, L.bracket(b, L.bracket(c, a)));
    return vadd(F, r, L.bracket(c, L.bracket(a, b)));
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& L) {
    std::vector<JacobiViolation> out;
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec v = jacobiator(L, L.basis(i), L.basis(j), L.basis(k));
                if (!is_zero(v)) out.push_back({i, j, k, v});
            }
    return out;
}

bool is_lie_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& phi) {
    const std::size_t n = src.dim();
    if (phi.rows() != dst.dim() || phi.cols() != n) return false;
    std::vector<Vec> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = phi.column(j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (phi.apply(src.structure(i, j)) != dst.bracket(img[i], img[j])) return false;
    return true;
}

bool is_automorphism(const LieAlgebra& L, const Matrix& phi) {
    return phi.is_invertible() && is_lie_homomorphism(L, L, phi);
}

}  // namespace rlie

#include "rlie/linalg.hpp"

#include <sstream>

#include "rlie/error.hpp"

namespace rlie {

bool is_zero(const Vec& v) {
    for (Elem e : v)
        if (e) return false;
    return true;
}

Vec vadd(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

Vec vsub(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

Vec vscale(const Field& F, Elem c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

void vaxpy(const Field& F, Vec& a, Elem c, const Vec& b) {
    if (c == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i]) a[i] = F.add(a[i], F.mul(c, b[i]));
}

Vec unit_vector(std::size_t n, std::size_t j) {
    Vec v(n, 0);
    v[j] = 1;
    return v;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<Vec>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows[0].size();
    Matrix m(std::move(f), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(FieldPtr f, const std::vector<Vec>& cols, std::size_t rows) {
    if (!cols.empty()) rows = cols[0].size();
    Matrix m(std::move(f), rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::from_ints(FieldPtr f, std::size_t rows, std::size_t cols, const std::vector<long long>& v) {
    if (v.size() != rows * cols) throw DomainError("entry count does not match shape");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < v.size(); ++i) m.a_[i] = f->from_int(v[i]);
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::column(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != r_) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != c_) throw DomainError("dimension mismatch in matrix-vector product");
    const Field& F = *f_;
    Vec r(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < c_; ++j)
            if (v[j]) acc = F.add(acc, F.mul((*this)(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw DomainError("dimension mismatch in matrix product");
    const Field& F = *f_;
    Matrix m(f_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t l = 0; l < c_; ++l) {
            Elem a = (*this)(i, l);
            if (!a) continue;
            for (std::size_t j = 0; j < o.c_; ++j) m(i, j) = F.add(m(i, j), F.mul(a, o(l, j)));
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("dimension mismatch in matrix sum");
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_->add(a_[i], o.a_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("dimension mismatch in matrix difference");
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_->sub(a_[i], o.a_[i]);
    return m;
}

Matrix Matrix::scaled(Elem c) const {
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_->mul(c, a_[i]);
    return m;
}

Matrix Matrix::power(std::uint64_t e) const {
    if (r_ != c_) throw DomainError("power of a non-square matrix");
    Matrix result = identity(f_, r_);
    Matrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    const Field& F = *f_;
    Matrix m = *this;
    std::size_t row = 0;
    if (pivots) pivots->clear();
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
        std::size_t sel = row;
        while (sel < r_ && m(sel, col) == 0) ++sel;
        if (sel == r_) continue;
        if (sel != row)
            for (std::size_t j = 0; j < c_; ++j) std::swap(m(sel, j), m(row, j));
        Elem inv = F.inv(m(row, col));
        for (std::size_t j = col; j < c_; ++j) m(row, j) = F.mul(inv, m(row, j));
        for (std::size_t i = 0; i < r_; ++i) {
            if (i == row || m(i, col) == 0) continue;
            Elem factor = F.neg(m(i, col));
            for (std::size_t j = col; j < c_; ++j) m(i, j) = F.add(m(i, j), F.mul(factor, m(row, j)));
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

bool Matrix::is_invertible() const { return r_ == c_ && rank() == r_; }

std::optional<Matrix> Matrix::inverse() const {
    if (r_ != c_) throw DomainError("inverse of a non-square matrix");
    Matrix aug(f_, r_, 2 * r_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < r_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, r_ + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix red = aug.rref(&piv);
    if (piv.size() < r_ || piv[r_ - 1] >= r_) return std::nullopt;
    Matrix inv(f_, r_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) inv(i, j) = red(i, r_ + j);
    return inv;
}

Elem Matrix::determinant() const {
    if (r_ != c_) throw DomainError("determinant of a non-square matrix");
    const Field& F = *f_;
    Matrix m = *this;
    Elem det = 1;
    for (std::size_t col = 0; col < r_; ++col) {
        std::size_t sel = col;
        while (sel < r_ && m(sel, col) == 0) ++sel;
        if (sel == r_) return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < r_; ++j) std::swap(m(sel, j), m(col, j));
            det = F.neg(det);
        }
        det = F.mul(det, m(col, col));
        Elem inv = F.inv(m(col, col));
        for (std::size_t i = col + 1; i < r_; ++i) {
            if (m(i, col) == 0) continue;
            Elem factor = F.neg(F.mul(m(i, col), inv));
            for (std::size_t j = col; j < r_; ++j) m(i, j) = F.add(m(i, j), F.mul(factor, m(col, j)));
        }
    }
    return det;
}

bool Matrix::is_zero() const { return rlie::is_zero(a_); }

bool Matrix::operator<(const Matrix& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (c_ != o.c_) return c_ < o.c_;
    return a_ < o.a_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << f_->to_string((*this)(i, j));
    }
    os << "]";
    return os.str();
}

Subspace Subspace::zero(FieldPtr f, std::size_t n) {
    Subspace s;
    s.f_ = std::move(f);
    s.n_ = n;
    return s;
}

Subspace Subspace::full(FieldPtr f, std::size_t n) {
    Subspace s = zero(std::move(f), n);
    for (std::size_t i = 0; i < n; ++i) {
        s.basis_.push_back(unit_vector(n, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(FieldPtr f, std::size_t n, const std::vector<Vec>& vs) {
    Subspace s = zero(f, n);
    if (vs.empty()) return s;
    Matrix m = Matrix::from_rows(f, vs, n);
    Matrix red = m.rref(&s.pivots_);
    for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(red.row(i));
    return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(f_, basis_, n_); }

bool Subspace::contains(const Vec& v) const {
    const Field& F = *f_;
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Elem c = r[pivots_[i]];
        if (c) vaxpy(F, r, F.neg(c), basis_[i]);
    }
    return rlie::is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(f_, n_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // Solve sum a_i u_i = sum b_j v_j.
    const std::size_t d1 = dim(), d2 = o.dim();
    if (d1 == 0 || d2 == 0) return zero(f_, n_);
    Matrix m(f_, n_, d1 + d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t r = 0; r < n_; ++r) m(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < d2; ++j)
        for (std::size_t r = 0; r < n_; ++r) m(r, d1 + j) = f_->neg(o.basis_[j][r]);
    Subspace ker = kernel(m);
    std::vector<Vec> vs;
    for (const auto& k : ker.basis()) {
        Vec v(n_, 0);
        for (std::size_t i = 0; i < d1; ++i) vaxpy(*f_, v, k[i], basis_[i]);
        vs.push_back(v);
    }
    return span(f_, n_, vs);
}

std::uint64_t Subspace::size() const { return checked_power(f_->order(), dim(), UINT64_MAX - 1); }

bool Subspace::for_each_vector(const std::function<bool(const Vec&)>& fn) const {
    const Field& F = *f_;
    const std::size_t d = dim();
    std::vector<Elem> coef(d, 0);
    Vec v(n_, 0);
    while (true) {
        if (!fn(v)) return false;
        // Odometer increment, last coordinate fastest.
        std::size_t i = d;
        while (i > 0) {
            --i;
            Elem old = coef[i];
            Elem nxt = old + 1;
            if (nxt == F.order()) {
                coef[i] = 0;
                vaxpy(F, v, F.neg(old), basis_[i]);
                if (i == 0) return true;
                continue;
            }
            coef[i] = nxt;
            vaxpy(F, v, F.sub(nxt, old), basis_[i]);
            break;
        }
        if (d == 0) return true;
    }
}

Subspace kernel(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix red = m.rref(&piv);
    const Field& F = *m.field();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec> vs;
    for (std::size_t fcol = 0; fcol < n; ++fcol) {
        if (is_pivot[fcol]) continue;
        Vec v(n, 0);
        v[fcol] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(red(i, fcol));
        vs.push_back(v);
    }
    return Subspace::span(m.field(), n, vs);
}

Subspace row_space(const Matrix& m) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return Subspace::span(m.field(), m.cols(), rows);
}

Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw DomainError("dimension mismatch in solve");
    const std::size_t n = a.cols();
    Matrix aug(a.field(), a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> piv;
    Matrix red = aug.rref(&piv);
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    Vec x(n, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, n);
    return x;
}

std::vector<Subspace> all_subspaces(const FieldPtr& f, std::size_t n) {
    const std::uint64_t q = f->order();
    if (checked_power(q, n, kMaxScanOrder) > kMaxScanOrder)
        throw BoundExceeded("subspace enumeration needs q^n <= 2^16");
    std::vector<Subspace> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) piv.push_back(j);
        // Free slots: (row, col) with col > pivot(row) and col not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!(mask >> c & 1)) slots.emplace_back(r, c);
        std::vector<Elem> vals(slots.size(), 0);
        while (true) {
            std::vector<Vec> rows(piv.size(), Vec(n, 0));
            for (std::size_t r = 0; r < piv.size(); ++r) rows[r][piv[r]] = 1;
            for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = vals[s];
            out.push_back(Subspace::span(f, n, rows));
            std::size_t s = 0;
            while (s < vals.size() && ++vals[s] == q) vals[s++] = 0;
            if (s == vals.size()) break;
        }
    }
    return out;
}

}  // namespace rlie

#include "rlie/restricted.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "rlie/error.hpp"

namespace rlie {

VecPoly ad_linear_power(const LieAlgebra& L, const Vec& x0, const Vec& x1, const VecPoly& v, unsigned m) {
    const Field& F = L.F();
    const std::size_t n = L.dim();
    std::vector<Vec> cur = v.coeffs();
    for (unsigned step = 0; step < m && !cur.empty(); ++step) {
        std::vector<Vec> next(cur.size() + 1, Vec(n, 0));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] = vadd(F, next[i + 1], L.bracket(x0, cur[i]));
            next[i] = vadd(F, next[i], L.bracket(x1, cur[i]));
        }
        cur = VecPoly(n, std::move(next)).coeffs();
    }
    return VecPoly(n, std::move(cur));
}

std::vector<Vec> s_terms(const LieAlgebra& L, const Vec& x0, const Vec& x1) {
    const Field& F = L.F();
    const unsigned p = F.p();
    VecPoly poly = ad_linear_power(L, x0, x1, VecPoly::constant(x0), p - 1);
    std::vector<Vec> s(p - 1);
    for (unsigned i = 1; i < p; ++i) s[i - 1] = vscale(F, F.inv(F.from_int(i)), poly.coeff(i - 1));
    return s;
}

Vec s_sum(const LieAlgebra& L, const Vec& x0, const Vec& x1) {
    const Field& F = L.F();
    const unsigned p = F.p();
    VecPoly poly = ad_linear_power(L, x0, x1, VecPoly::constant(x0), p - 1);
    Vec r = L.zero();
    for (unsigned i = 1; i < p; ++i) vaxpy(F, r, F.inv(F.from_int(i)), poly.coeff(i - 1));
    return r;
}

Vec eval_with_order(const LieAlgebra& L, const PSemilinearMap& m, const Vec& v,
                    const std::vector<std::size_t>& order) {
    const Field& F = L.F();
    const unsigned p = F.p();
    const std::size_t n = L.dim();
    Vec r = L.zero();
    for (std::size_t j = 0; j < n; ++j)
        if (v[j]) vaxpy(F, r, F.pow(v[j], p), m.images[j]);
    if (L.is_abelian()) return r;
    Vec partial = L.zero();
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t j = order[idx];
        if (!v[j]) continue;
        Vec term = L.zero();
        term[j] = v[j];
        if (!is_zero(partial)) r = vadd(F, r, s_sum(L, partial, term));
        partial[j] = v[j];
    }
    return r;
}

Vec eval(const LieAlgebra& L, const PSemilinearMap& m, const Vec& v) {
    std::vector<std::size_t> order(L.dim());
    std::iota(order.begin(), order.end(), 0);
    return eval_with_order(L, m, v, order);
}

Vec eval_power(const LieAlgebra& L, const PSemilinearMap& m, const Vec& v, unsigned r) {
    Vec cur = v;
    for (unsigned i = 0; i < r; ++i) cur = eval(L, m, cur);
    return cur;
}

bool is_p_map(const LieAlgebra& L, const PSemilinearMap& m) {
    if (m.images.size() != L.dim()) return false;
    const unsigned p = L.F().p();
    for (std::size_t j = 0; j < L.dim(); ++j)
        if (L.ad(m.images[j]) != L.ad(L.basis(j)).power(p)) return false;
    return true;
}

std::uint64_t PMapFamily::count(std::uint64_t limit) const {
    if (!particular) return 0;
    const std::uint64_t q = center.field()->order();
    return checked_power(q, center.dim() * per_basis.size(), limit);
}

PMapFamily solve_pmaps(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    const unsigned p = L.F().p();
    PMapFamily fam;
    fam.center = L.center();
    // ad(f)[k][i] = sum_m f_m c[m][i][k]
    Matrix sys(L.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t mm = 0; mm < n; ++mm) sys(i * n + k, mm) = L.c(mm, i, k);
    bool all = true;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix target = L.ad(L.basis(j)).power(p);
        Vec rhs(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) rhs[i * n + k] = target(k, i);
        auto sol = solve(sys, rhs);
        fam.per_basis.push_back(sol);
        if (!sol) all = false;
    }
    if (all) {
        PSemilinearMap m;
        for (const auto& s : fam.per_basis) m.images.push_back(*s);
        fam.particular = m;
    }
    return fam;
}

std::uint64_t enumerate_pmaps(const LieAlgebra& L, const std::function<bool(const PSemilinearMap&)>& fn) {
    PMapFamily fam = solve_pmaps(L);
    if (!fam.exists()) return 0;
    const std::size_t n = L.dim();
    const std::size_t d = fam.center.dim();
    const Field& F = L.F();
    if (fam.count(kMaxFieldOrder) > kMaxFieldOrder)
        throw BoundExceeded("p-map family has more than 2^20 members (q^(n dim Z))");
    const std::size_t slots = n * d;
    std::vector<Elem> coef(slots, 0);
    std::uint64_t visited = 0;
    while (true) {
        PSemilinearMap m = *fam.particular;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < d; ++t) vaxpy(F, m.images[j], coef[j * d + t], fam.center.basis()[t]);
        ++visited;
        if (!fn(m)) return visited;
        std::size_t s = slots;
        while (s > 0) {
            --s;
            if (++coef[s] < F.order()) break;
            coef[s] = 0;
            if (s == 0) return visited;
        }
        if (slots == 0) return visited;
    }
}

std::vector<PSemilinearMap> all_pmaps(const LieAlgebra& L) {
    std::vector<PSemilinearMap> out;
    enumerate_pmaps(L, [&](const PSemilinearMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

PSemilinearMap transport(const LieAlgebra& src, const LieAlgebra& dst, const PSemilinearMap& m, const Matrix& phi) {
    auto inv = phi.inverse();
    if (!inv) throw DomainError("transport along a singular matrix");
    PSemilinearMap out;
    for (std::size_t j = 0; j < dst.dim(); ++j)
        out.images.push_back(phi.apply(eval(src, m, inv->column(j))));
    return out;
}

PSemilinearMap conjugate(const LieAlgebra& L, const PSemilinearMap& m, const Matrix& phi) {
    if (!is_automorphism(L, phi)) throw DomainError("conjugating matrix is not an automorphism");
    return transport(L, L, m, phi);
}

bool is_restricted_isomorphism(const LieAlgebra& src, const PSemilinearMap& m1, const LieAlgebra& dst,
                               const PSemilinearMap& m2, const Matrix& phi) {
    if (!phi.is_invertible() || !is_lie_homomorphism(src, dst, phi)) return false;
    for (std::size_t j = 0; j < src.dim(); ++j)
        if (phi.apply(m1.images[j]) != eval(dst, m2, phi.column(j))) return false;
    return true;
}

PSemilinearMap base_change(const PSemilinearMap& m, const FieldEmbedding& emb) {
    PSemilinearMap out = m;
    for (auto& v : out.images)
        for (auto& e : v) e = emb(e);
    return out;
}

std::vector<Subspace> power_spans(const LieAlgebra& L, const PSemilinearMap& m, const Subspace& V, unsigned r_max) {
    if (V.size() > kMaxScanOrder) throw BoundExceeded("power spans enumerate at most 2^16 vectors");
    std::set<Vec> cur;
    V.for_each_vector([&](const Vec& v) {
        cur.insert(v);
        return true;
    });
    std::vector<Subspace> out;
    for (unsigned r = 1; r <= r_max; ++r) {
        std::set<Vec> next;
        for (const auto& v : cur) next.insert(eval(L, m, v));
        cur = std::move(next);
        out.push_back(Subspace::span(L.field(), L.dim(), std::vector<Vec>(cur.begin(), cur.end())));
    }
    return out;
}

InvariantProfile invariant_profile(const LieAlgebra& L, const PSemilinearMap& m, unsigned r_max) {
    if (checked_power(L.F().order(), L.dim(), kMaxScanOrder) > kMaxScanOrder)
        throw BoundExceeded("invariant profile needs q^n <= 2^16");
    InvariantProfile prof;
    prof.r_max = r_max;
    auto a = power_spans(L, m, Subspace::full(L.field(), L.dim()), r_max);
    auto z = power_spans(L, m, L.center(), r_max);
    auto d = power_spans(L, m, L.derived(), r_max);
    for (unsigned r = 0; r < r_max; ++r) prof.dims.push_back({a[r].dim(), z[r].dim(), d[r].dim()});
    return prof;
}

std::string InvariantProfile::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < dims.size(); ++r) {
        if (r) os << " ";
        os << "(" << dims[r][0] << "," << dims[r][1] << "," << dims[r][2] << ")";
    }
    return os.str();
}

std::string format_pmap(const LieAlgebra& L, const PSemilinearMap& m) {
    std::string s;
    for (std::size_t j = 0; j < L.dim(); ++j) {
        if (is_zero(m.images[j])) continue;
        if (!s.empty()) s += ", ";
        s += L.name(j) + "^[p] = " + L.format(m.images[j]);
    }
    return s.empty() ? "trivial" : s;
}

}  // namespace rlie

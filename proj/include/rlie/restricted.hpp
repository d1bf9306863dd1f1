#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rlie/lie.hpp"
#include "rlie/linalg.hpp"
#include "rlie/poly.hpp"

namespace rlie {

// Basis images f_j; determines a unique p-semilinear self-map.
struct PSemilinearMap {
    std::vector<Vec> images;

    static PSemilinearMap zero(const LieAlgebra& L) { return {std::vector<Vec>(L.dim(), L.zero())}; }
    bool operator==(const PSemilinearMap& o) const { return images == o.images; }
    bool operator!=(const PSemilinearMap& o) const { return images != o.images; }
    bool operator<(const PSemilinearMap& o) const { return images < o.images; }
};

struct RestrictedLieAlgebra {
    LieAlgebra algebra;
    PSemilinearMap pmap;
};

// (ad(x0 T + x1))^m applied to a polynomial in T with coefficients in L.
VecPoly ad_linear_power(const LieAlgebra& L, const Vec& x0, const Vec& x1, const VecPoly& v, unsigned m);

// s_1..s_{p-1} with (ad(x0 T + x1))^{p-1}(x0) = sum i s_i T^{i-1}.
std::vector<Vec> s_terms(const LieAlgebra& L, const Vec& x0, const Vec& x1);
Vec s_sum(const LieAlgebra& L, const Vec& x0, const Vec& x1);

Vec eval(const LieAlgebra& L, const PSemilinearMap& m, const Vec& v);
// Same value with the correction sum telescoped along a different basis order.
Vec eval_with_order(const LieAlgebra& L, const PSemilinearMap& m, const Vec& v,
                    const std::vector<std::size_t>& order);
Vec eval_power(const LieAlgebra& L, const PSemilinearMap& m, const Vec& v, unsigned r);

bool is_p_map(const LieAlgebra& L, const PSemilinearMap& m);

struct PMapFamily {
    std::optional<PSemilinearMap> particular;
    // Particular solution of ad f = (ad e_j)^p for each j, when one exists.
    std::vector<std::optional<Vec>> per_basis;
    // Each solution set is per_basis[j] + center.
    Subspace center;

    bool exists() const { return particular.has_value(); }
    std::uint64_t count(std::uint64_t limit = UINT64_MAX - 1) const;
};

PMapFamily solve_pmaps(const LieAlgebra& L);

// Calls fn on every p-map, in lexicographic order of center coordinates;
// needs q^(n dim Z) <= 2^20. Returns the number visited.
std::uint64_t enumerate_pmaps(const LieAlgebra& L, const std::function<bool(const PSemilinearMap&)>& fn);
std::vector<PSemilinearMap> all_pmaps(const LieAlgebra& L);

// Images phi(eval(phi^{-1} e_j)) for an isomorphism phi: src -> dst.
PSemilinearMap transport(const LieAlgebra& src, const LieAlgebra& dst, const PSemilinearMap& m, const Matrix& phi);
// phi must be an automorphism of L.
PSemilinearMap conjugate(const LieAlgebra& L, const PSemilinearMap& m, const Matrix& phi);
// phi: src -> dst bijective, bracket-preserving, and phi o m1 = m2 o phi.
bool is_restricted_isomorphism(const LieAlgebra& src, const PSemilinearMap& m1, const LieAlgebra& dst,
                               const PSemilinearMap& m2, const Matrix& phi);

PSemilinearMap base_change(const PSemilinearMap& m, const FieldEmbedding& emb);

struct InvariantProfile {
    unsigned r_max = 0;
    // dims[r-1] = (dim L^{[p]^r}, dim Z^{[p]^r}, dim [L,L]^{[p]^r}).
    std::vector<std::array<std::size_t, 3>> dims;

    bool operator==(const InvariantProfile& o) const { return r_max == o.r_max && dims == o.dims; }
    bool operator!=(const InvariantProfile& o) const { return !(*this == o); }
    std::string to_string() const;
};

// span{v^{[p]^r} : v in V} for r = 1..r_max, enumerating V (q^dim V <= 2^16).
std::vector<Subspace> power_spans(const LieAlgebra& L, const PSemilinearMap& m, const Subspace& V, unsigned r_max);
InvariantProfile invariant_profile(const LieAlgebra& L, const PSemilinearMap& m, unsigned r_max = 3);
inline InvariantProfile invariant_profile(const RestrictedLieAlgebra& R, unsigned r_max = 3) {
    return invariant_profile(R.algebra, R.pmap, r_max);
}

std::string format_pmap(const LieAlgebra& L, const PSemilinearMap& m);

}  // namespace rlie

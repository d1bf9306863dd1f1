#include <functional>
#include <set>

#include "rlie/catalog.hpp"
#include "rlie/error.hpp"
#include "rlie/iso.hpp"

namespace rlie {

namespace {

// Calls fn on every tuple in F^n.
void for_each_tuple(const Field& F, std::size_t n, const std::function<void(const std::vector<Elem>&)>& fn) {
    std::vector<Elem> t(n, 0);
    while (true) {
        fn(t);
        std::size_t i = 0;
        while (i < n && ++t[i] == F.order()) t[i++] = 0;
        if (i == n) return;
    }
}

Matrix columns(const FieldPtr& f, const std::vector<Vec>& cols) { return Matrix::from_columns(f, cols, 4); }

using Builder = std::function<std::optional<Matrix>(const std::vector<Elem>&)>;

struct Family {
    std::string lie;
    std::size_t nparams;
    Builder build;
};

// With amended = true, the forms with known defects are replaced by the
// corrected ones: a4 = 0 in AutoLc, swapped y-coefficients in isoformLj.
Family family_for(const std::string& name, const LieAlgebra& L, Elem xi, bool amended = false) {
    const FieldPtr& f = L.field();
    const Field& F = *f;
    auto mul = [&](Elem a, Elem b) { return F.mul(a, b); };
    auto sub = [&](Elem a, Elem b) { return F.sub(a, b); };
    if (name == "AutoLb")
        return {"L2", 10, [=](const std::vector<Elem>& v) -> std::optional<Matrix> {
                    auto [a1, a2, a3, a4, c2, c3, d1, d2, d3, d4] =
                        std::array<Elem, 10>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
                    Elem b = sub(mul(a1, d4), mul(a4, d1));
                    if (mul(b, c3) == 0) return std::nullopt;
                    return columns(f, {{a1, a2, a3, a4}, {0, b, 0, 0}, {0, c2, c3, 0}, {d1, d2, d3, d4}});
                }};
    if (name == "AutoLc")
        return {"L3", 8, [=](const std::vector<Elem>& v) -> std::optional<Matrix> {
                    auto [a1, a2, a3, a4, d1, d2, d3, d4] =
                        std::array<Elem, 8>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
                    if (amended && a4 != 0) return std::nullopt;
                    Elem b = sub(mul(a1, d4), mul(a4, d1));
                    if (mul(b, d4) == 0) return std::nullopt;
                    return columns(f, {{a1, a2, a3, a4},
                                       {0, b, sub(mul(a2, d4), mul(a4, d2)), 0},
                                       {0, 0, mul(b, d4), 0},
                                       {d1, d2, d3, d4}});
                }};
    if (name == "AutoLd")
        return {"L4", 8, [=](const std::vector<Elem>& v) -> std::optional<Matrix> {
                    auto [a1, b2, b3, c2, c3, d1, d2, d3] =
                        std::array<Elem, 8>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
                    if (mul(a1, sub(mul(b2, c3), mul(b3, c2))) == 0) return std::nullopt;
                    return columns(f, {{a1, 0, 0, 0}, {0, b2, b3, 0}, {0, c2, c3, 0}, {d1, d2, d3, 1}});
                }};
    if (name == "isoformLe")
        return {"L5", 9, [=](const std::vector<Elem>& v) -> std::optional<Matrix> {
                    auto [a1, a2, b1, b2, c3, d1, d2, d3, d4] =
                        std::array<Elem, 9>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
                    if (mul(sub(mul(a1, b2), mul(a2, b1)), c3) == 0) return std::nullopt;
                    if (mul(a1, sub(d4, 1)) || mul(a2, sub(mul(xi, d4), 1)) || mul(b1, sub(d4, xi)) ||
                        mul(b2, sub(d4, 1)))
                        return std::nullopt;
                    return columns(f, {{a1, a2, 0, 0}, {b1, b2, 0, 0}, {0, 0, c3, 0}, {d1, d2, d3, d4}});
                }};
    if (name == "isoformLj")
        return {"N4", 6, [=](const std::vector<Elem>& v) -> std::optional<Matrix> {
                    auto [a1, c1, d1, d2, d3, d4] = std::array<Elem, 6>{v[0], v[1], v[2], v[3], v[4], v[5]};
                    Elem s = sub(mul(a1, a1), mul(c1, c1));
                    if (mul(d4, d4) != 1 || s == 0) return std::nullopt;
                    Elem yx = sub(mul(a1, d3), mul(mul(c1, d1), d4));
                    Elem yz = sub(mul(c1, d3), mul(mul(a1, d1), d4));
                    if (amended) std::swap(yx, yz);
                    return columns(f, {{a1, yx, mul(d4, c1), 0},
                                       {0, mul(s, d4), 0, 0},
                                       {c1, yz, mul(d4, a1), 0},
                                       {d1, d2, d3, d4}});
                }};
    if (name == "AutoLk")
        return {"gl2", 10, [=](const std::vector<Elem>& v) -> std::optional<Matrix> {
                    auto [a1, a2, a3, b1, b2, b3, c1, c2, c3, d4] =
                        std::array<Elem, 10>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
                    Elem two = F.from_int(2);
                    const Elem eqs[9] = {
                        sub(sub(mul(a1, c3), mul(a3, c1)), a1),
                        sub(sub(mul(a3, c2), mul(a2, c3)), a2),
                        sub(sub(mul(a2, c1), mul(a1, c2)), mul(two, a3)),
                        sub(sub(mul(b3, c1), mul(b1, c3)), b1),
                        sub(sub(mul(b2, c3), mul(b3, c2)), b2),
                        sub(sub(mul(b1, c2), mul(b2, c1)), mul(two, b3)),
                        sub(sub(mul(two, mul(a3, b1)), mul(two, mul(a1, b3))), c1),
                        sub(sub(mul(two, mul(a2, b3)), mul(two, mul(a3, b2))), c2),
                        sub(sub(mul(a1, b2), mul(a2, b1)), c3)};
                    for (Elem e : eqs)
                        if (e) return std::nullopt;
                    Matrix m = columns(f, {{a1, a2, a3, 0}, {b1, b2, b3, 0}, {c1, c2, c3, 0}, {0, 0, 0, d4}});
                    if (m.determinant() == 0) return std::nullopt;
                    return m;
                }};
    throw DomainError("unknown parameterization '" + name + "'");
}

}  // namespace

const std::vector<std::string>& parameterization_names() {
    static const std::vector<std::string> names{"AutoLb", "AutoLc", "AutoLd", "isoformLe", "isoformLj", "AutoLk"};
    return names;
}

ParameterizationReport verify_parameterization(const std::string& family, unsigned q) {
    unsigned p = 0, k = 0;
    for (unsigned cand = 2; cand <= q && !p; ++cand) {
        if (!is_prime(cand)) continue;
        unsigned e = 0;
        std::uint64_t r = 1;
        while (r < q) {
            r *= cand;
            ++e;
        }
        if (r == q) p = cand, k = e;
    }
    if (!p) throw DomainError(std::to_string(q) + " is not a prime power");
    if (family == "AutoLk" && p == 2) throw DomainError("AutoLk describes gl2 automorphisms for p >= 3 only");
    FieldPtr f = Field::make(p, k);
    ParameterizationReport rep;
    rep.family = family;
    rep.q = q;
    // L5 automorphisms are counted for every xi in F^x.
    std::vector<Elem> xis{0};
    if (family == "isoformLe") {
        xis.clear();
        for (Elem e = 1; e < f->order(); ++e) xis.push_back(e);
    }
    rep.same_set = true;
    const bool has_amendment = family == "AutoLc" || family == "isoformLj";
    if (has_amendment) {
        rep.correction = family == "AutoLc" ? "a4 = 0, forced by [phi(x), phi(y)] = a4 (a1 d4 - a4 d1) z"
                                            : "y-coefficients of phi(x) and phi(z) exchanged: "
                                              "c1 d3 - a1 d1 d4 and a1 d3 - c1 d1 d4";
        rep.corrected_same_set = true;
    }
    for (Elem xi : xis) {
        LieAlgebra probe(f, standard_basis());
        Family fam = family_for(family, probe, xi);
        LieAlgebra L = fam.lie == "L5" ? lie_representative("L5", {xi}, f) : lie_representative(fam.lie, {}, f);
        AutomorphismList brute = automorphisms(L);
        if (!brute.complete) throw Error("automorphism search did not complete for " + fam.lie);
        std::set<Matrix> from_params;
        for_each_tuple(*f, fam.nparams, [&](const std::vector<Elem>& v) {
            if (auto m = fam.build(v)) from_params.insert(*m);
        });
        std::set<Matrix> from_search(brute.maps.begin(), brute.maps.end());
        rep.brute_force += from_search.size();
        rep.parameterized += from_params.size();
        if (from_params != from_search) rep.same_set = false;
        if (has_amendment) {
            Family fixed = family_for(family, probe, xi, true);
            std::set<Matrix> amended;
            for_each_tuple(*f, fixed.nparams, [&](const std::vector<Elem>& v) {
                if (auto m = fixed.build(v)) amended.insert(*m);
            });
            if (amended != from_search) rep.corrected_same_set = false;
        }
    }
    return rep;
}

}  // namespace rlie

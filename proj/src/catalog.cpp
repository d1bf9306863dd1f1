#include "rlie/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rlie/error.hpp"

namespace rlie {

const char* to_string(CharCond c) {
    switch (c) {
        case CharCond::Any: return "any";
        case CharCond::Two: return "p=2";
        case CharCond::AtLeast3: return "p>=3";
        case CharCond::AtLeast5: return "p>=5";
    }
    return "?";
}

CharCond char_cond_from_string(const std::string& s) {
    for (auto c : {CharCond::Any, CharCond::Two, CharCond::AtLeast3, CharCond::AtLeast5})
        if (s == to_string(c)) return c;
    throw DomainError("unknown characteristic condition '" + s + "'");
}

bool admits(CharCond c, unsigned p) {
    switch (c) {
        case CharCond::Any: return true;
        case CharCond::Two: return p == 2;
        case CharCond::AtLeast3: return p >= 3;
        case CharCond::AtLeast5: return p >= 5;
    }
    return false;
}

const char* to_string(ParamKind k) {
    switch (k) {
        case ParamKind::None: return "none";
        case ParamKind::Xi: return "Xi_p";
        case ParamKind::XiNoPm1: return "Xi_p minus {1,-1}";
        case ParamKind::XiNo1: return "Xi_p minus {1}";
        case ParamKind::FpStar: return "F_p^x";
        case ParamKind::Fp: return "F";
        case ParamKind::QpMinusQuarter: return "Q_p - 1/4";
        case ParamKind::FpStarSquared: return "F_p^x x F_p^x";
    }
    return "?";
}

ParamKind param_kind_from_string(const std::string& s) {
    for (auto k : {ParamKind::None, ParamKind::Xi, ParamKind::XiNoPm1, ParamKind::XiNo1, ParamKind::FpStar,
                   ParamKind::Fp, ParamKind::QpMinusQuarter, ParamKind::FpStarSquared})
        if (s == to_string(k)) return k;
    throw DomainError("unknown parameter domain '" + s + "'");
}

const char* to_string(Equivalence e) {
    switch (e) {
        case Equivalence::None: return "none";
        case Equivalence::L2_15: return "L2.15";
        case Equivalence::L4_11: return "L4.11";
        case Equivalence::L6_1: return "L6.1";
    }
    return "?";
}

Equivalence equivalence_from_string(const std::string& s) {
    for (auto e : {Equivalence::None, Equivalence::L2_15, Equivalence::L4_11, Equivalence::L6_1})
        if (s == to_string(e)) return e;
    throw DomainError("unknown equivalence '" + s + "'");
}

const std::vector<LieFamily>& lie_families() {
    static const std::vector<LieFamily> fams = {
        {"L1", {}, {}, CharCond::Any},
        {"L2", {}, {"[w,x] = y"}, CharCond::Any},
        {"L3", {}, {"[w,x] = y", "[w,y] = z"}, CharCond::Any},
        {"L4", {}, {"[w,x] = x"}, CharCond::Any},
        {"L5", {"xi"}, {"[w,x] = x", "[w,y] = xi*y"}, CharCond::Any},
        {"L6", {"xi", "eta"}, {"[w,x] = x", "[w,y] = xi*y", "[w,z] = eta*z"}, CharCond::Any},
        {"L7", {}, {"[w,x] = y", "[w,z] = z"}, CharCond::Any},
        {"L8", {"xi"}, {"[w,x] = x + y", "[w,y] = y", "[w,z] = xi*z"}, CharCond::Any},
        {"L9", {}, {"[w,x] = x + y", "[w,y] = y", "[w,z] = x + z"}, CharCond::Any},
        {"N1", {}, {"[y,x] = x", "[w,z] = z"}, CharCond::Any},
        {"N2", {}, {"[z,x] = y", "[w,x] = x", "[w,y] = 2*y", "[w,z] = z"}, CharCond::Any},
        {"N3", {"xi"}, {"[z,x] = y", "[w,x] = x + xi*z", "[w,y] = y", "[w,z] = x"}, CharCond::Any},
        {"N4", {}, {"[z,x] = y", "[w,x] = z", "[w,z] = x"}, CharCond::Any},
        {"N5", {}, {"[z,x] = y", "[z,y] = x", "[w,x] = x", "[w,z] = z"}, CharCond::Two},
        {"gl2", {}, {"[y,x] = -z", "[z,x] = 2*x", "[z,y] = -2*y"}, CharCond::Any},
        {"W1", {}, {"[y,x] = x", "[z,x] = y", "[z,y] = z"}, CharCond::Any},
        {"W2", {}, {"[y,x] = x", "[z,x] = y", "[z,y] = z", "[w,x] = z"}, CharCond::Two},
    };
    return fams;
}

const LieFamily& lie_family(const std::string& id) {
    for (const auto& f : lie_families())
        if (f.id == id) return f;
    throw DomainError("unknown Lie family '" + id + "'");
}

namespace {

LieAlgebra build_algebra(const LieFamily& fam, const std::map<std::string, Elem>& params, const FieldPtr& f) {
    const auto& names = standard_basis();
    LieAlgebra L(f, names);
    for (const auto& rel : fam.relations) {
        auto open = rel.find('['), comma = rel.find(','), close = rel.find(']'), eq = rel.find('=');
        if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
            eq == std::string::npos)
            throw DomainError("malformed relation '" + rel + "' in family " + fam.id);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(' '));
            s.erase(s.find_last_not_of(' ') + 1);
            return s;
        };
        auto a = L.index_of(trim(rel.substr(open + 1, comma - open - 1)));
        auto b = L.index_of(trim(rel.substr(comma + 1, close - comma - 1)));
        if (!a || !b) throw DomainError("unknown basis element in relation '" + rel + "'");
        L.set_bracket(*a, *b, parse_lincomb(rel.substr(eq + 1), *f, names, params));
    }
    return L;
}

bool requires_nonzero(const std::string& fam) { return fam == "L5" || fam == "L6"; }

}  // namespace

LieAlgebra lie_representative(const std::string& id, const std::vector<Elem>& params, const FieldPtr& f,
                              bool allow_broken) {
    const LieFamily& fam = lie_family(id);
    if (params.size() != fam.params.size())
        throw DomainError(id + " takes " + std::to_string(fam.params.size()) + " parameter(s), got " +
                          std::to_string(params.size()));
    std::map<std::string, Elem> bound;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] >= f->order()) throw DomainError("parameter is not an element of the field");
        if (requires_nonzero(id) && params[i] == 0) throw DomainError(id + " requires nonzero parameters");
        bound[fam.params[i]] = params[i];
    }
    if (!admits(fam.valid, f->p()) && !allow_broken)
        throw DomainError(id + " is not a Lie algebra in characteristic " + std::to_string(f->p()) +
                          " (use allow_broken to build it anyway)");
    LieAlgebra L = build_algebra(fam, bound, f);
    if (!allow_broken && !check_jacobi(L).empty())
        throw Error(id + " fails the Jacobi identity in characteristic " + std::to_string(f->p()));
    return L;
}

const std::vector<CatalogRow>& catalog_rows() {
    static const std::vector<CatalogRow> rows = [] {
        using P = ParamKind;
        using C = CharCond;
        std::vector<CatalogRow> r;
        auto add = [&](const std::string& fam, std::array<std::string, 4> img, C cond = C::Any,
                       P dom = P::None) {
            CatalogRow row;
            row.row = unsigned(r.size() + 1);
            unsigned idx = 1;
            for (const auto& prev : r)
                if (prev.family == fam) ++idx;
            row.id = fam + "." + std::to_string(idx);
            row.family = fam;
            row.images = img;
            row.cond = cond;
            row.domain = dom;
            switch (dom) {
                case P::Fp: row.params = {"lambda"}; break;
                case P::FpStarSquared: row.params = {"xi", "eta"}; break;
                case P::None: break;
                default: row.params = {"xi"}; break;
            }
            if (fam == "L5" || fam == "N3") row.family_args = {"xi"};
            if (fam == "L6") row.family_args = {"xi", "eta"};
            r.push_back(row);
        };
        // L1
        add("L1", {"", "", "", ""});
        add("L1", {"y", "", "", ""});
        add("L1", {"y", "", "w", ""});
        add("L1", {"y", "z", "", ""});
        add("L1", {"y", "z", "w", ""});
        add("L1", {"x", "", "", ""});
        add("L1", {"x", "z", "", ""});
        add("L1", {"x", "y", "", ""});
        add("L1", {"x", "z", "w", ""});
        add("L1", {"x", "y", "w", ""});
        add("L1", {"x", "y", "z", ""});
        add("L1", {"x", "y", "z", "w"});
        // L2
        add("L2", {"", "", "", ""}, C::AtLeast3);
        add("L2", {"", "", "", "y"});
        add("L2", {"", "", "", "z"});
        add("L2", {"z", "", "", "y"});
        add("L2", {"", "z", "", ""}, C::AtLeast3);
        add("L2", {"y", "z", "", ""});
        add("L2", {"", "", "y", ""});
        add("L2", {"z", "", "y", ""});
        add("L2", {"", "y", "", ""});
        add("L2", {"z", "y", "", ""});
        add("L2", {"", "y + z", "", ""}, C::AtLeast3);
        add("L2", {"z", "y + z", "", ""});
        add("L2", {"", "", "z", ""}, C::AtLeast3);
        add("L2", {"y", "", "z", ""});
        add("L2", {"", "y + lambda*z", "z", ""}, C::Any, P::Fp);
        // L3
        add("L3", {"", "", "", ""}, C::AtLeast5);
        add("L3", {"", "", "", "z"}, C::AtLeast3);
        add("L3", {"", "z", "", ""}, C::AtLeast3);
        add("L3", {"z", "", "", ""}, C::AtLeast3);
        add("L3", {"", "", "z", ""}, C::AtLeast3);
        // L4
        add("L4", {"", "", "", "w"});
        add("L4", {"y", "", "", "w"});
        add("L4", {"", "z", "", "w"});
        add("L4", {"z", "z", "", "w"});
        add("L4", {"y", "z", "", "w"});
        add("L4", {"", "y", "", "w"});
        add("L4", {"z", "y", "", "w"});
        add("L4", {"y", "y", "", "w"});
        add("L4", {"y + z", "y", "", "w"});
        add("L4", {"", "y", "z", "w"});
        add("L4", {"y + lambda*z", "y", "z", "w"}, C::Any, P::Fp);
        // L5(xi)
        add("L5", {"", "", "", "w"}, C::Any, P::Xi);
        add("L5", {"z", "", "", "w"}, C::Any, P::Xi);
        add("L5", {"", "z", "", "w"}, C::Any, P::XiNoPm1);
        add("L5", {"z", "z", "", "w"}, C::Any, P::XiNo1);
        add("L5", {"", "", "z", "w"}, C::Any, P::Xi);
        add("L5", {"z", "", "z", "w"}, C::Any, P::Xi);
        add("L5", {"", "z", "z", "w"}, C::Any, P::XiNoPm1);
        add("L5", {"z", "z", "z", "w"}, C::Any, P::XiNo1);
        // L6(xi, eta)
        add("L6", {"", "", "", "w"}, C::Any, P::FpStarSquared);
        // N1, N2
        add("N1", {"", "y", "", "w"});
        add("N2", {"", "", "", "w"});
        add("N2", {"y", "", "", "w"}, C::Two);
        add("N2", {"", "y", "", "w"}, C::Two);
        // N3(xi)
        add("N3", {"", "", "", "w"}, C::AtLeast3, P::QpMinusQuarter);
        add("N3", {"", "", "y", "w"}, C::Two);
        r.back().family_args = {"0"};
        // N4
        add("N4", {"", "", "", "w"}, C::AtLeast3);
        add("N4", {"y", "", "", "w"}, C::AtLeast3);
        add("N4", {"", "y", "", "w"}, C::AtLeast3);
        add("N4", {"y", "", "y", "w"}, C::AtLeast3);
        // gl2
        add("gl2", {"", "", "z", ""}, C::AtLeast3);
        add("gl2", {"w", "", "z", ""}, C::AtLeast3);
        add("gl2", {"", "", "z", "w"}, C::AtLeast3);
        add("gl2", {"w", "", "z", "w"}, C::AtLeast3);
        add("gl2", {"", "", "z + w", "lambda*w"}, C::AtLeast3, P::Fp);

        for (auto& row : r) {
            if (row.id == "L2.15") row.equivalence = Equivalence::L2_15;
            if (row.id == "L4.11") row.equivalence = Equivalence::L4_11;
            if (row.id == "L6.1") row.equivalence = Equivalence::L6_1;
        }
        return r;
    }();
    return rows;
}

const CatalogRow& catalog_row(unsigned row) {
    const auto& rows = catalog_rows();
    if (row < 1 || row > rows.size()) throw DomainError("no catalog row " + std::to_string(row));
    return rows[row - 1];
}

const CatalogRow& catalog_row(const std::string& key) {
    if (!key.empty() && std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return catalog_row(unsigned(std::stoul(key)));
    for (const auto& r : catalog_rows())
        if (r.id == key) return r;
    throw DomainError("unknown catalog row '" + key + "'");
}

RestrictedLieAlgebra instantiate_row(const LieFamily& fam, const CatalogRow& row, const std::vector<Elem>& params,
                                     const FieldPtr& f) {
    if (params.size() != row.params.size())
        throw DomainError("row " + row.id + " takes " + std::to_string(row.params.size()) + " parameter(s), got " +
                          std::to_string(params.size()));
    std::map<std::string, Elem> bound;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] >= f->order()) throw DomainError("parameter is not an element of the field");
        bound[row.params[i]] = params[i];
    }
    if (row.family_args.size() != fam.params.size())
        throw DomainError("row " + row.id + " does not bind the parameters of " + fam.id);
    std::vector<Elem> lie_params;
    for (const auto& arg : row.family_args) {
        auto it = bound.find(arg);
        if (it != bound.end())
            lie_params.push_back(it->second);
        else
            lie_params.push_back(f->from_int(std::stoll(arg)));
    }
    std::map<std::string, Elem> fam_bound;
    for (std::size_t i = 0; i < lie_params.size(); ++i) {
        if (requires_nonzero(fam.id) && lie_params[i] == 0)
            throw DomainError(fam.id + " requires nonzero parameters");
        fam_bound[fam.params[i]] = lie_params[i];
    }
    LieAlgebra L = build_algebra(fam, fam_bound, f);
    if (!check_jacobi(L).empty()) throw Error(fam.id + " fails the Jacobi identity");
    PSemilinearMap m = PSemilinearMap::zero(L);
    for (std::size_t j = 0; j < 4; ++j)
        if (!row.images[j].empty()) m.images[j] = parse_lincomb(row.images[j], *f, L.names(), bound);
    if (!is_p_map(L, m)) throw Error("row " + row.id + " does not give a p-map over F_" + std::to_string(f->order()));
    return {std::move(L), std::move(m)};
}

RestrictedLieAlgebra instantiate_row(const CatalogRow& row, const std::vector<Elem>& params, const FieldPtr& f) {
    return instantiate_row(lie_family(row.family), row, params, f);
}

RestrictedLieAlgebra restricted_representative(const std::string& key, const std::vector<Elem>& params,
                                               const FieldPtr& f) {
    const CatalogRow& row = catalog_row(key);
    if (!admits(row.cond, f->p()))
        throw DomainError("row " + row.id + " requires " + to_string(row.cond) + ", got p=" + std::to_string(f->p()));
    if (row.domain != ParamKind::None && row.domain != ParamKind::Fp) {
        ParamSet ps = parameter_set(row, f->p());
        if (std::find(ps.elements.begin(), ps.elements.end(), params) == ps.elements.end())
            throw DomainError("parameters outside " + std::string(to_string(row.domain)) + " for row " + row.id);
    }
    return instantiate_row(row, params, f);
}

unsigned smallest_primitive_root(unsigned p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    for (unsigned g = 2; g < p; ++g) {
        unsigned long long x = 1;
        unsigned order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    throw Error("no primitive root");
}

ParamSet parameter_set(ParamKind kind, unsigned p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    ParamSet ps;
    ps.kind = kind;
    ps.p = p;
    auto xi_set = [&] {
        std::vector<Elem> out;
        unsigned long long g = smallest_primitive_root(p), x = 1;
        for (unsigned r = 0; r <= (p - 1) / 2; ++r) {
            out.push_back(Elem(x));
            x = x * g % p;
        }
        return out;
    };
    switch (kind) {
        case ParamKind::None: ps.elements = {{}}; break;
        case ParamKind::Xi:
        case ParamKind::XiNoPm1:
        case ParamKind::XiNo1:
            for (Elem e : xi_set()) {
                if (e == 1) {
                    if (kind != ParamKind::Xi) continue;
                } else if (e == p - 1 && kind == ParamKind::XiNoPm1) {
                    continue;
                }
                ps.elements.push_back({e});
            }
            break;
        case ParamKind::FpStar:
            for (Elem e = 1; e < p; ++e) ps.elements.push_back({e});
            break;
        case ParamKind::Fp:
            for (Elem e = 0; e < p; ++e) ps.elements.push_back({e});
            ps.infinite = true;
            break;
        case ParamKind::QpMinusQuarter:
            if (p >= 3) {
                FieldPtr f = Field::make(p);
                Elem quarter = f->inv(f->from_int(4));
                std::set<Elem> squares;
                for (Elem a = 1; a < p; ++a) squares.insert(f->mul(a, a));
                for (Elem q : squares) ps.elements.push_back({f->sub(q, quarter)});
            }
            break;
        case ParamKind::FpStarSquared:
            for (Elem a = 1; a < p; ++a)
                for (Elem b = 1; b < p; ++b) ps.elements.push_back({a, b});
            break;
    }
    return ps;
}

ParamSet parameter_set(const CatalogRow& row, unsigned p) { return parameter_set(row.domain, p); }

std::pair<Elem, Elem> s3_act(unsigned p, int sigma, std::pair<Elem, Elem> v) {
    FieldPtr f = Field::make(p);
    auto t12 = [&](std::pair<Elem, Elem> u) {
        Elem inv = f->inv(u.first);
        return std::pair<Elem, Elem>{inv, f->mul(inv, u.second)};
    };
    auto t23 = [](std::pair<Elem, Elem> u) { return std::pair<Elem, Elem>{u.second, u.first}; };
    switch (sigma) {
        case 0: return v;
        case 1: return t12(v);
        case 2: return t23(v);
        case 3: return t12(t23(t12(v)));
        case 4: return t12(t23(v));
        case 5: return t23(t12(v));
    }
    throw DomainError("S3 element index out of range");
}

S3Orbits s3_orbits(unsigned p) {
    if (!is_prime(p) || p > 101) throw DomainError("s3_orbits needs a prime p <= 101");
    FieldPtr f = Field::make(p);
    S3Orbits out;
    out.p = p;
    using Pt = std::pair<Elem, Elem>;
    std::set<Pt> seen;
    for (Elem a = 1; a < p; ++a)
        for (Elem b = 1; b < p; ++b) {
            Pt start{a, b};
            for (int s = 0; s < 6; ++s)
                if (s3_act(p, s, start) == start) ++out.fixed[s];
            // The displayed formulas for the derived elements.
            Elem ia = f->inv(a), ib = f->inv(b);
            if (s3_act(p, 3, start) != Pt{f->mul(ib, a), ib} || s3_act(p, 4, start) != Pt{ib, f->mul(ib, a)} ||
                s3_act(p, 5, start) != Pt{f->mul(ia, b), ia})
                throw Error("S3 action formulas disagree at p=" + std::to_string(p));
            if (seen.count(start)) continue;
            std::vector<Pt> orbit{start}, frontier{start};
            seen.insert(start);
            while (!frontier.empty()) {
                Pt u = frontier.back();
                frontier.pop_back();
                for (int g : {1, 2}) {
                    Pt v = s3_act(p, g, u);
                    if (seen.insert(v).second) {
                        orbit.push_back(v);
                        frontier.push_back(v);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            out.orbits.push_back(orbit);
        }
    out.count = out.orbits.size();
    out.burnside = std::accumulate(out.fixed.begin(), out.fixed.end(), std::size_t(0)) / 6;
    out.formula = (p - 1) % 3 == 0 ? (p * p + p + 4) / 6 : (p * p + p) / 6;
    if (out.count != out.burnside || out.count != out.formula)
        throw Error("S3 orbit count mismatch at p=" + std::to_string(p) + ": closure " + std::to_string(out.count) +
                    ", Burnside " + std::to_string(out.burnside) + ", formula " + std::to_string(out.formula));
    return out;
}

bool equivalence(const CatalogRow& row, const std::vector<Elem>& a, const std::vector<Elem>& b, const FieldPtr& f) {
    const Field& F = *f;
    const unsigned p = F.p();
    auto check_arity = [&](std::size_t n) {
        if (a.size() != n || b.size() != n) throw DomainError("wrong parameter count for row " + row.id);
        for (Elem e : a)
            if (e >= F.order()) throw DomainError("parameter is not an element of the field");
        for (Elem e : b)
            if (e >= F.order()) throw DomainError("parameter is not an element of the field");
    };
    switch (row.equivalence) {
        case Equivalence::L2_15: {
            check_arity(1);
            Elem l1 = a[0], l2 = b[0];
            auto side = [&](Elem u, Elem v) {
                return F.mul(F.pow(u, std::uint64_t(p) * (p - 1)), F.pow(F.add(F.pow(v, p - 1), 1), p + 1));
            };
            return side(l1, l2) == side(l2, l1);
        }
        case Equivalence::L4_11: {
            check_arity(1);
            for (Elem a11 = 0; a11 < p; ++a11)
                for (Elem a12 = 0; a12 < p; ++a12)
                    for (Elem a21 = 0; a21 < p; ++a21)
                        for (Elem a22 = 0; a22 < p; ++a22) {
                            if (F.sub(F.mul(a11, a22), F.mul(a12, a21)) == 0) continue;
                            Elem v0 = F.add(a11, F.mul(a12, b[0]));
                            Elem v1 = F.add(a21, F.mul(a22, b[0]));
                            if (v0 == 0) continue;
                            if (F.div(v1, v0) == a[0]) return true;
                        }
            return false;
        }
        case Equivalence::L6_1: {
            check_arity(2);
            for (Elem e : {a[0], a[1], b[0], b[1]})
                if (e == 0 || !F.in_prime_field(e)) throw DomainError("L6.1 parameters must lie in F_p^x");
            for (int s = 0; s < 6; ++s)
                if (s3_act(p, s, {b[0], b[1]}) == std::pair<Elem, Elem>{a[0], a[1]}) return true;
            return false;
        }
        case Equivalence::None: break;
    }
    throw DomainError("row " + row.id + " has no equivalence predicate");
}

std::uint64_t closed_form_count(unsigned p) {
    if (p == 2) return 42;
    if (p == 3) return 63;
    std::uint64_t q = p;
    return (p - 1) % 3 == 0 ? (q * q + 28 * q + 295) / 6 : (q * q + 28 * q + 291) / 6;
}

ClassCount count_classes(unsigned p) {
    if (!is_prime(p) || p > 101) throw DomainError("count_classes needs a prime p <= 101");
    ClassCount cc;
    cc.p = p;
    FieldPtr f = Field::make(p);
    for (const auto& row : catalog_rows()) {
        if (!admits(row.cond, p)) continue;
        if (row.domain == ParamKind::Fp) {
            cc.excluded.push_back(row.id);
            continue;
        }
        std::uint64_t n = 0;
        ParamSet ps = parameter_set(row, p);
        if (row.equivalence != Equivalence::None) {
            if (p <= 23) {
                // Representatives: tuples with no earlier equivalent tuple.
                for (std::size_t i = 0; i < ps.elements.size(); ++i) {
                    bool fresh = true;
                    for (std::size_t j = 0; j < i && fresh; ++j)
                        if (equivalence(row, ps.elements[i], ps.elements[j], f)) fresh = false;
                    if (fresh) ++n;
                }
            }
            if (row.equivalence == Equivalence::L6_1) {
                std::uint64_t orbits = s3_orbits(p).count;
                if (p <= 23 && n != orbits)
                    throw Error("L6.1 classes by predicate disagree with the orbit count at p=" + std::to_string(p));
                n = orbits;
            }
        } else {
            n = ps.elements.size();
        }
        if (row.domain == ParamKind::None) cc.individuals += n;
        cc.per_row.emplace_back(row.id, n);
        cc.per_family[row.family] += n;
        cc.total += n;
    }
    cc.closed_form = closed_form_count(p);
    return cc;
}

nlohmann::json catalog_json() {
    using nlohmann::json;
    json j;
    j["basis"] = standard_basis();
    j["families"] = json::array();
    for (const auto& f : lie_families())
        j["families"].push_back(
            {{"id", f.id}, {"params", f.params}, {"relations", f.relations}, {"char", to_string(f.valid)}});
    j["rows"] = json::array();
    for (const auto& r : catalog_rows()) {
        json images = json::object();
        for (std::size_t k = 0; k < 4; ++k) images[standard_basis()[k]] = r.images[k].empty() ? "0" : r.images[k];
        j["rows"].push_back({{"row", r.row},
                             {"id", r.id},
                             {"family", r.family},
                             {"params", r.params},
                             {"family_args", r.family_args},
                             {"pmap", images},
                             {"domain", to_string(r.domain)},
                             {"char", to_string(r.cond)},
                             {"equivalence", to_string(r.equivalence)}});
    }
    return j;
}

std::pair<std::vector<LieFamily>, std::vector<CatalogRow>> catalog_from_json(const nlohmann::json& j) {
    std::pair<std::vector<LieFamily>, std::vector<CatalogRow>> out;
    try {
        for (const auto& f : j.at("families")) {
            LieFamily fam;
            fam.id = f.at("id").get<std::string>();
            fam.params = f.at("params").get<std::vector<std::string>>();
            fam.relations = f.at("relations").get<std::vector<std::string>>();
            fam.valid = char_cond_from_string(f.at("char").get<std::string>());
            out.first.push_back(std::move(fam));
        }
        for (const auto& r : j.at("rows")) {
            CatalogRow row;
            row.row = r.at("row").get<unsigned>();
            row.id = r.at("id").get<std::string>();
            row.family = r.at("family").get<std::string>();
            row.params = r.at("params").get<std::vector<std::string>>();
            row.family_args = r.at("family_args").get<std::vector<std::string>>();
            for (std::size_t k = 0; k < 4; ++k) {
                std::string s = r.at("pmap").at(standard_basis()[k]).get<std::string>();
                row.images[k] = s == "0" ? "" : s;
            }
            row.domain = param_kind_from_string(r.at("domain").get<std::string>());
            row.cond = char_cond_from_string(r.at("char").get<std::string>());
            row.equivalence = equivalence_from_string(r.at("equivalence").get<std::string>());
            out.second.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed catalog JSON: ") + e.what());
    }
    return out;
}

}  // namespace rlie

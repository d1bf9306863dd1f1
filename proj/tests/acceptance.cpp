// Acceptance run: one PASS/FAIL line per criterion with timings.
// Usage: acceptance [criterion ...]   (default: all of 1..8)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rlie/catalog.hpp"
#include "rlie/error.hpp"
#include "rlie/iso.hpp"
#include "rlie/restricted.hpp"

using namespace rlie;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;  // printed under the status line
    std::string summary;

    void fail(const std::string& why) {
        pass = false;
        details.push_back("FAIL " + why);
    }
    void note(const std::string& s) { details.push_back(s); }
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return "(" + s + ")";
}

std::string params_string(const Field& F, const std::vector<Elem>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + F.to_string(v[i]);
    return v.empty() ? "" : "(" + s + ")";
}

// ---------------------------------------------------------------- 1

Outcome criterion1() {
    Outcome o;
    int checked = 0;
    for (unsigned p : {3u, 2u}) {
        for (int t = 1; t <= 5; ++t) {
            InvariantTable tab = regenerate_table(t, p);
            bool any = false;
            for (const auto& r : tab.rows) {
                if (!r.computed) continue;
                any = true;
                ++checked;
                if (!r.consistent)
                    o.fail("table " + std::to_string(t) + " p=" + std::to_string(p) + " " + r.label +
                           ": value varies with the parameter");
                else if (*r.computed != r.expected)
                    o.fail("table " + std::to_string(t) + " p=" + std::to_string(p) + " " + r.label + ": computed " +
                           join(*r.computed) + ", table has " + join(r.expected));
            }
            if (!any) o.note("table " + std::to_string(t) + " p=" + std::to_string(p) + ": no applicable rows");
        }
    }
    o.summary = std::to_string(checked) + " table rows compared";
    return o;
}

// ---------------------------------------------------------------- 2

enum class Expect { None, Exists, ExactlyOne };

Outcome criterion2() {
    Outcome o;
    int checked = 0;
    auto expect = [&](const std::string& fam, const std::vector<Elem>& params, const FieldPtr& f, Expect e) {
        LieAlgebra L = lie_representative(fam, params, f);
        PMapFamily pm = solve_pmaps(L);
        ++checked;
        bool ok = e == Expect::None     ? !pm.exists()
                  : e == Expect::Exists ? pm.exists()
                                        : pm.exists() && pm.count() == 1;
        if (!ok) {
            const char* want = e == Expect::None ? "none" : e == Expect::Exists ? "some" : "exactly one";
            o.fail(fam + params_string(*f, params) + " over F_" + std::to_string(f->order()) + ": expected " + want +
                   ", solver found " + (pm.exists() ? std::to_string(pm.count(1000)) : "none"));
        }
    };
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        FieldPtr f = Field::make(p), f2 = Field::make(p, 2);
        expect("L1", {}, f, Expect::Exists);
        expect("L2", {}, f, Expect::Exists);
        expect("L3", {}, f, p == 2 ? Expect::None : Expect::Exists);
        expect("L4", {}, f, Expect::Exists);
        for (Elem xi = 1; xi < f2->order(); ++xi)
            expect("L5", {xi}, f2, f2->in_prime_field(xi) ? Expect::Exists : Expect::None);
        for (Elem xi = 1; xi < f2->order(); ++xi)
            for (Elem eta = 1; eta < f2->order(); ++eta)
                expect("L6", {xi, eta}, f2,
                       f2->in_prime_field(xi) && f2->in_prime_field(eta) ? Expect::ExactlyOne : Expect::None);
        expect("L7", {}, f2, Expect::None);
        for (Elem xi = 0; xi < f2->order(); ++xi) expect("L8", {xi}, f2, Expect::None);
        expect("L9", {}, f2, Expect::None);
        expect("N1", {}, f, Expect::ExactlyOne);
        expect("N2", {}, f, p == 2 ? Expect::Exists : Expect::ExactlyOne);
        std::set<Elem> in_range;
        if (p == 2) {
            in_range = {0};
        } else {
            Elem quarter = f->inv(f->from_int(4));
            for (Elem a = 1; a < p; ++a) in_range.insert(f->sub(f->mul(a, a), quarter));
        }
        for (Elem xi = 0; xi < p; ++xi) expect("N3", {xi}, f, in_range.count(xi) ? Expect::ExactlyOne : Expect::None);
        expect("N4", {}, f, p == 2 ? Expect::None : Expect::Exists);
        if (p == 2) {
            expect("N5", {}, f, Expect::None);
            expect("W1", {}, f, Expect::None);
            expect("W2", {}, f, Expect::None);
        } else {
            expect("gl2", {}, f, Expect::Exists);
        }
    }
    o.summary = std::to_string(checked) + " representatives";
    return o;
}

// ---------------------------------------------------------------- 3

Outcome criterion3() {
    Outcome o;
    const std::map<unsigned, std::uint64_t> want{{2, 42}, {3, 63}, {5, 76}, {7, 90}};
    std::string got;
    for (auto [p, n] : want) {
        ClassCount c = count_classes(p);
        got += " p=" + std::to_string(p) + ":" + std::to_string(c.total);
        if (c.total != n) o.fail("p=" + std::to_string(p) + ": " + std::to_string(c.total) + ", expected " + std::to_string(n));
        std::uint64_t rows = 0, fams = 0;
        for (const auto& [id, k] : c.per_row) rows += k;
        for (const auto& [id, k] : c.per_family) fams += k;
        if (rows != c.total || fams != c.total)
            o.fail("p=" + std::to_string(p) + ": breakdown sums to " + std::to_string(rows) + " by row and " +
                   std::to_string(fams) + " by family");
        if (c.closed_form && *c.closed_form != c.total)
            o.fail("p=" + std::to_string(p) + ": closed form gives " + std::to_string(*c.closed_form));
    }
    int primes = 0;
    for (unsigned p = 3; p <= 23; ++p) {
        if (!is_prime(p)) continue;
        ++primes;
        try {
            S3Orbits s = s3_orbits(p);
            if (s.count != s.formula || s.burnside != s.formula)
                o.fail("S3 orbits p=" + std::to_string(p) + ": " + std::to_string(s.count) + " vs formula " +
                       std::to_string(s.formula));
        } catch (const Error& e) {
            o.fail("S3 orbits p=" + std::to_string(p) + ": " + e.what());
        }
    }
    o.summary = "counts" + got + "; S3 orbits checked at " + std::to_string(primes) + " primes";
    return o;
}

// ---------------------------------------------------------------- 4

Outcome criterion4() {
    Outcome o;
    std::uint64_t cases = 0;
    int runs = 0;
    for (const auto& name : suite_names()) {
        for (unsigned p : suite_primes(name)) {
            SuiteReport r = identity_suite(name, p);
            cases += r.checked;
            ++runs;
            if (!r.passed()) {
                std::string why = name + " p=" + std::to_string(p) + ": " + std::to_string(r.counterexamples.size()) +
                                  " counterexamples of " + std::to_string(r.checked);
                if (!r.counterexamples.empty()) why += ", first: " + r.counterexamples.front();
                o.fail(why);
            }
        }
    }
    o.summary = std::to_string(runs) + " suite runs, " + std::to_string(cases) + " cases";
    return o;
}

// ---------------------------------------------------------------- 5

Outcome criterion5() {
    Outcome o;
    int runs = 0;
    for (const auto& fam : parameterization_names()) {
        for (unsigned q : {2u, 3u}) {
            if (fam == "AutoLk" && q == 2) continue;
            ParameterizationReport r = verify_parameterization(fam, q);
            ++runs;
            std::string line = fam + " q=" + std::to_string(q) + ": brute force " + std::to_string(r.brute_force) +
                               ", parameterized " + std::to_string(r.parameterized) +
                               (r.same_set ? ", same set" : ", sets differ");
            if (r.passed()) {
                o.note("ok   " + line);
            } else {
                o.fail(line);
                if (r.corrected_same_set)
                    o.note("     amended form (" + r.correction + ") " +
                           (*r.corrected_same_set ? "matches brute force" : "still differs"));
            }
        }
    }
    o.summary = std::to_string(runs) + " family/field pairs";
    return o;
}

// ---------------------------------------------------------------- 6

struct Instance {
    std::string label;
    const CatalogRow* row;
    std::vector<Elem> params;
    RestrictedLieAlgebra R;
};

// Every row valid at p instantiated over F_p at each listed parameter value.
std::vector<Instance> instances(unsigned p, const std::string& family = "") {
    FieldPtr f = Field::make(p);
    std::vector<Instance> out;
    for (const auto& row : catalog_rows()) {
        if (!admits(row.cond, p) || (!family.empty() && row.family != family)) continue;
        for (const auto& v : parameter_set(row, p).elements)
            out.push_back({row.id + params_string(*f, v), &row, v, restricted_representative(row.id, v, f)});
    }
    return out;
}

Outcome criterion6() {
    Outcome o;
    FieldPtr f = Field::make(2);
    LieAlgebra L = lie_representative("L2", {}, f);
    std::vector<PSemilinearMap> maps = all_pmaps(L);
    AutomorphismList aut = automorphisms(L);
    if (maps.size() != 256) o.fail("expected 256 2-maps, found " + std::to_string(maps.size()));
    if (aut.maps.size() != 192 || !aut.complete) o.fail("expected 192 automorphisms, found " + std::to_string(aut.maps.size()));

    std::map<PSemilinearMap, std::size_t> index;
    for (std::size_t i = 0; i < maps.size(); ++i) index[maps[i]] = i;
    std::vector<std::size_t> parent(maps.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (const auto& phi : aut.maps) {
            auto it = index.find(conjugate(L, maps[i], phi));
            if (it == index.end()) {
                o.fail("conjugate of a 2-map is not a 2-map");
                return o;
            }
            parent[find(it->second)] = find(i);
        }
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < maps.size(); ++i) classes[find(i)].push_back(i);

    // Allowed triples: Table 1 rows at p=2 and the nilpotent rows L2.2 .. L2.8.
    std::set<std::vector<std::size_t>> allowed;
    for (const auto& r : regenerate_table(1, 2).rows)
        if (r.computed) allowed.insert(r.expected);
    std::vector<const CatalogRow*> listed;
    for (const auto& row : catalog_rows())
        if (row.family == "L2" && admits(row.cond, 2)) {
            listed.push_back(&row);
            if (row.row >= 14 && row.row <= 20) {
                auto d = invariant_profile(restricted_representative(row.id, {}, f), 1).dims[0];
                allowed.insert({d[0], d[1], d[2]});
            }
        }

    // Over each F_{2^k}: the listed p-maps, with lambda running over all of
    // F_{2^k} for the one-parameter row, and their profiles.
    struct Target {
        const CatalogRow* row;
        std::string label;
        PSemilinearMap pmap;
        InvariantProfile profile;
    };
    struct Rung {
        FieldPtr field;
        std::unique_ptr<FieldEmbedding> emb;
        LieAlgebra L;
        std::vector<Target> targets;
    };
    std::vector<Rung> rungs;
    for (unsigned k = 1; k <= 4; ++k) {
        Rung r;
        r.field = Field::make(2, k);
        r.emb = std::make_unique<FieldEmbedding>(f, r.field);
        r.L = L.base_change(*r.emb);
        for (const CatalogRow* row : listed) {
            std::vector<std::vector<Elem>> values{{}};
            if (!row->params.empty()) {
                values.clear();
                for (Elem l = 0; l < r.field->order(); ++l) values.push_back({l});
            }
            for (const auto& v : values) {
                PSemilinearMap m = restricted_representative(row->id, v, r.field).pmap;
                r.targets.push_back({row, row->id + params_string(*r.field, v), m, invariant_profile(r.L, m)});
            }
        }
        rungs.push_back(std::move(r));
    }

    for (const auto& [root, members] : classes) {
        const PSemilinearMap& rep = maps[members.front()];
        auto d = invariant_profile(L, rep, 1).dims[0];
        std::vector<std::size_t> triple{d[0], d[1], d[2]};
        std::string name = format_pmap(L, rep);
        if (!allowed.count(triple)) o.fail("class of size " + std::to_string(members.size()) + " [" + name +
                                           "] has triple " + join(triple) + " outside the tables");
        std::map<const CatalogRow*, std::string> hits;
        for (const auto& rung : rungs) {
            PSemilinearMap m = base_change(rep, *rung.emb);
            InvariantProfile prof = invariant_profile(rung.L, m);
            for (const auto& t : rung.targets) {
                if (hits.count(t.row) || prof != t.profile) continue;
                SearchResult r = find_conjugator(rung.L, m, t.pmap);
                if (r.status == SearchStatus::Exhausted)
                    o.fail("[" + name + "] vs " + t.label + " over F_" + std::to_string(rung.field->order()) +
                           ": search budget exhausted");
                if (r.found()) hits[t.row] = t.label + " over F_" + std::to_string(rung.field->order());
            }
        }
        std::string h;
        for (const auto& [row, label] : hits) h += (h.empty() ? "" : ", ") + label;
        if (hits.size() != 1)
            o.fail("class [" + name + "] matches " + std::to_string(hits.size()) + " listed rows: " + h);
        else
            o.note(std::to_string(members.size()) + " maps ~ " + h);
    }
    o.summary = std::to_string(maps.size()) + " 2-maps, " + std::to_string(aut.maps.size()) + " automorphisms, " +
                std::to_string(classes.size()) + " classes";
    return o;
}

// ---------------------------------------------------------------- 7

Outcome criterion7() {
    Outcome o;
    std::string summary;
    for (unsigned p : {2u, 3u}) {
        FieldPtr f = Field::make(p);
        std::vector<Instance> all = instances(p);
        // Every F_{p^k} with k <= 4 and q^4 <= 2^16.
        SearchBudget ladder;
        ladder.ladder = p == 2 ? std::vector<unsigned>{1, 2, 3, 4} : std::vector<unsigned>{1, 2};
        std::size_t pairs = 0, declared = 0;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                ++pairs;
                const Instance &a = all[i], &b = all[j];
                bool same_family = a.row == b.row && a.row->equivalence != Equivalence::None;
                if (same_family && equivalence(*a.row, a.params, b.params, f)) {
                    ++declared;
                    SearchResult r = restricted_isomorphic(a.R, b.R, ladder);
                    if (!r.found())
                        o.fail(a.label + " ~ " + b.label + " declared isomorphic, search: " + to_string(r.status));
                    continue;
                }
                SearchResult r = restricted_isomorphic(a.R, b.R, ladder);
                if (r.status != SearchStatus::Absent)
                    o.fail(a.label + " vs " + b.label + ": " + to_string(r.status) +
                           (r.found() ? " over F_" + std::to_string(r.field->order()) : ""));
            }
        summary += " p=" + std::to_string(p) + ": " + std::to_string(all.size()) + " instances, " +
                   std::to_string(pairs) + " pairs, " + std::to_string(declared) + " declared, searched up to F_" +
                   std::to_string(p == 2 ? 16 : 9) + ";";
    }
    o.summary = summary.substr(1, summary.size() - 2);
    return o;
}

// ---------------------------------------------------------------- 8

Outcome criterion8() {
    Outcome o;
    int checked = 0;
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        FieldPtr f = Field::make(p);
        for (const auto& fam : lie_families()) {
            if (!admits(fam.valid, p)) continue;
            // Every parameter tuple over F_p, nonzero where required.
            std::size_t n = fam.params.size();
            std::vector<Elem> v(n, 0);
            Elem lo = (fam.id == "L5" || fam.id == "L6") ? 1 : 0;
            std::fill(v.begin(), v.end(), lo);
            while (true) {
                ++checked;
                LieAlgebra L = lie_representative(fam.id, v, f, true);
                if (!check_jacobi(L).empty()) o.fail(fam.id + params_string(*f, v) + " at p=" + std::to_string(p));
                std::size_t i = 0;
                while (i < n && ++v[i] == p) v[i++] = lo;
                if (i == n) break;
            }
        }
        if (p == 2) continue;
        // The failing triples are (w, x, z) for N5 and (w, y, x) for W2.
        struct Broken {
            std::string fam;
            std::array<std::size_t, 3> triple;
            std::string want;
        };
        for (const auto& b : {Broken{"N5", {3, 0, 2}, "2*y"}, Broken{"W2", {3, 1, 0}, "2*z"}}) {
            LieAlgebra L = lie_representative(b.fam, {}, f, true);
            auto bad = check_jacobi(L);
            Vec j = jacobiator(L, L.basis(b.triple[0]), L.basis(b.triple[1]), L.basis(b.triple[2]));
            std::string label = b.fam + " p=" + std::to_string(p) + ": " + std::to_string(bad.size()) +
                                " failing triple(s), Jacobiator " + L.format(j);
            if (bad.size() != 1 || j != parse_lincomb(b.want, *f, L.names()))
                o.fail(label + ", expected one failing triple with " + b.want);
            else
                o.note(label);
        }
    }
    o.summary = std::to_string(checked) + " valid representatives";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        std::string title;
        std::function<Outcome()> run;
        double limit_s;
    };
    const std::vector<Criterion> criteria{
        {"tables 1-5 at p=3 and p=2", criterion1, 10},
        {"p-map existence matrix", criterion2, 30},
        {"class counts and S3 orbits", criterion3, 5},
        {"identity suites", criterion4, 120},
        {"automorphism parameterizations", criterion5, 120},
        {"L2 classification sample at p=2", criterion6, 300},
        {"pairwise non-isomorphism", criterion7, 600},
        {"Jacobi sanity", criterion8, 1},
    };
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= 8; ++i) which.push_back(i);
    bool all = true;
    for (int c : which) {
        if (c < 1 || c > 8) {
            std::fprintf(stderr, "criterion %d does not exist\n", c);
            return 2;
        }
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[c - 1].run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > criteria[c - 1].limit_s)
            out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(criteria[c - 1].limit_s) + " s");
        std::printf("criterion %d %-4s %8.2fs  %s: %s\n", c, out.pass ? "PASS" : "FAIL", secs,
                    criteria[c - 1].title.c_str(), out.summary.c_str());
        for (const auto& d : out.details) std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
        all = all && out.pass;
    }
    return all ? 0 : 1;
}

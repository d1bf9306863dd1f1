#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rlie/catalog.hpp"
#include "rlie/error.hpp"
#include "rlie/iso.hpp"
#include "rlie/lie.hpp"
#include "rlie/restricted.hpp"

using namespace rlie;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Options {
    unsigned p = 0;
    unsigned k = 1;
    bool json_out = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string ladder = "1,2,4";
    std::uint64_t budget = 200'000'000;
    bool allow_broken = false;
};

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SearchBudget make_budget(const Options& o) {
    SearchBudget b;
    b.max_candidates = o.budget;
    b.threads = o.threads;
    b.ladder.clear();
    std::stringstream ss(o.ladder);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            b.ladder.push_back(unsigned(std::stoul(tok)));
        } catch (const std::exception&) {
            throw UsageError("bad --ladder entry '" + tok + "'");
        }
    }
    b.validate();
    return b;
}

unsigned need_p(const Options& o) {
    if (!o.p) throw UsageError("-p is required");
    return o.p;
}

// Emits the report and returns the exit code.
int finish(const Options& o, json report, bool pass, const std::string& text,
           std::chrono::steady_clock::time_point start) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["pass"] = pass;
    report["time_ms"] = ms;
    if (o.json_out)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kPass : kFail;
}

json violations_json(const LieAlgebra& L, const std::vector<JacobiViolation>& vs) {
    json out = json::array();
    for (const auto& v : vs)
        out.push_back({{"triple", {L.name(v.i), L.name(v.j), L.name(v.k)}}, {"jacobiator", L.format(v.value)}});
    return out;
}

int cmd_check(const Options& o, const std::string& path) {
    auto start = std::chrono::steady_clock::now();
    AlgebraFile af = parse_algebra_file(read_file(path));
    const LieAlgebra& L = af.algebra;
    std::ostringstream text;
    json rep{{"command", "check"}, {"file", path}, {"p", L.F().p()}, {"k", L.F().k()}, {"dim", L.dim()}};
    auto viol = check_jacobi(L);
    rep["jacobi"] = violations_json(L, viol);
    bool pass = viol.empty();
    text << "F_" << L.F().order() << ", dim " << L.dim() << "\n";
    if (viol.empty())
        text << "Jacobi identity holds\n";
    for (const auto& v : viol)
        text << "Jacobi fails on (" << L.name(v.i) << "," << L.name(v.j) << "," << L.name(v.k)
             << "): " << L.format(v.value) << "\n";
    if (af.pmap) {
        PSemilinearMap m{*af.pmap};
        bool ok = viol.empty() && is_p_map(L, m);
        rep["pmap"] = format_pmap(L, m);
        rep["is_p_map"] = ok;
        text << "p-map " << format_pmap(L, m) << ": " << (ok ? "valid" : "not a p-map") << "\n";
        if (ok) {
            InvariantProfile prof = invariant_profile(L, m);
            rep["profile"] = prof.dims;
            text << "invariant profile " << prof.to_string() << "\n";
        }
        pass = pass && ok;
    }
    return finish(o, rep, pass, text.str(), start);
}

int cmd_pmaps(const Options& o, const std::string& path, bool enumerate) {
    auto start = std::chrono::steady_clock::now();
    AlgebraFile af = parse_algebra_file(read_file(path));
    const LieAlgebra& L = af.algebra;
    json rep{{"command", "pmaps"}, {"file", path}, {"p", L.F().p()}, {"k", L.F().k()}};
    std::ostringstream text;
    auto viol = check_jacobi(L);
    if (!viol.empty()) {
        rep["jacobi"] = violations_json(L, viol);
        text << "not a Lie algebra: Jacobi identity fails\n";
        return finish(o, rep, false, text.str(), start);
    }
    PMapFamily fam = solve_pmaps(L);
    rep["exists"] = fam.exists();
    if (!fam.exists()) {
        text << "none\n";
        json missing = json::array();
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (!fam.per_basis[j]) missing.push_back(L.name(j));
        rep["no_solution_for"] = missing;
        text << "(ad e)^p is not inner for e in " << missing.dump() << "\n";
        return finish(o, rep, true, text.str(), start);
    }
    std::uint64_t count = fam.count();
    rep["center_dim"] = fam.center.dim();
    rep["count"] = count;
    rep["particular"] = format_pmap(L, *fam.particular);
    text << "particular " << format_pmap(L, *fam.particular) << "\n";
    text << "solutions: particular + Z(L)^" << L.dim() << ", dim Z(L) = " << fam.center.dim() << "\n";
    text << "count " << count << "\n";
    if (enumerate) {
        json all = json::array();
        enumerate_pmaps(L, [&](const PSemilinearMap& m) {
            all.push_back(format_pmap(L, m));
            text << "  " << format_pmap(L, m) << "\n";
            return true;
        });
        rep["maps"] = all;
    }
    return finish(o, rep, true, text.str(), start);
}

int cmd_tables(const Options& o, int number) {
    auto start = std::chrono::steady_clock::now();
    unsigned p = need_p(o);
    std::vector<int> nums;
    if (number)
        nums = {number};
    else
        nums = {1, 2, 3, 4, 5};
    json rep{{"command", "tables"}, {"p", p}, {"tables", json::array()}};
    std::ostringstream text;
    bool pass = true;
    for (int n : nums) {
        InvariantTable t = regenerate_table(n, p);
        bool applicable = false;
        json rows = json::array();
        for (const auto& r : t.rows) {
            json jr{{"label", r.label}, {"condition", r.condition}, {"expected", r.expected}};
            if (r.computed) {
                jr["computed"] = *r.computed;
                applicable = true;
            }
            jr["consistent"] = r.consistent;
            rows.push_back(jr);
        }
        bool ok = !applicable || t.matches();
        rep["tables"].push_back({{"number", n}, {"title", t.title}, {"columns", t.columns}, {"rows", rows},
                                 {"applicable", applicable}, {"matches", ok}});
        text << t.to_string();
        if (!applicable) text << "(no rows apply at p=" << p << ")\n";
        text << "\n";
        pass = pass && ok;
    }
    return finish(o, rep, pass, text.str(), start);
}

std::vector<Elem> parse_params(const std::vector<std::string>& raw, const Field& F) {
    std::vector<Elem> out;
    for (const auto& s : raw) {
        Vec v;
        try {
            v = parse_lincomb(s + "*u", F, {"u"});
        } catch (const ParseError& e) {
            throw UsageError("bad parameter '" + s + "': " + e.what());
        }
        out.push_back(v[0]);
    }
    return out;
}

int cmd_catalog(const Options& o, bool count, const std::string& row_key, const std::vector<std::string>& params,
                const std::string& lie_id) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream text;
    if (count) {
        unsigned p = need_p(o);
        ClassCount cc = count_classes(p);
        json rep{{"command", "catalog"}, {"p", p}, {"total", cc.total}, {"individuals", cc.individuals},
                 {"stated_individuals", cc.stated_individuals}, {"excluded", cc.excluded},
                 {"per_family", cc.per_family}};
        if (cc.closed_form) rep["closed_form"] = *cc.closed_form;
        json rows = json::array();
        for (const auto& [id, n] : cc.per_row) rows.push_back({{"row", id}, {"classes", n}});
        rep["per_row"] = rows;
        text << "N_" << p << " = " << cc.total << "\n";
        for (const auto& [fam, n] : cc.per_family) text << "  " << fam << ": " << n << "\n";
        text << "excluded infinite families:";
        for (const auto& e : cc.excluded) text << " " << e;
        text << "\nindividual classes: " << cc.individuals << " (the proof text states " << cc.stated_individuals
             << ")\n";
        bool pass = !cc.closed_form || *cc.closed_form == cc.total;
        if (cc.closed_form) text << "closed form: " << *cc.closed_form << "\n";
        return finish(o, rep, pass, text.str(), start);
    }
    if (!row_key.empty() || !lie_id.empty()) {
        unsigned p = need_p(o);
        FieldPtr f = Field::make(p, o.k);
        auto vals = parse_params(params, *f);
        json rep{{"command", "catalog"}, {"p", p}, {"k", o.k}};
        if (!lie_id.empty()) {
            LieAlgebra L = lie_representative(lie_id, vals, f, o.allow_broken);
            auto viol = check_jacobi(L);
            rep["lie"] = lie_id;
            rep["file"] = write_algebra_file(L);
            rep["jacobi"] = violations_json(L, viol);
            text << write_algebra_file(L);
            for (const auto& v : viol)
                text << "# Jacobi fails on (" << L.name(v.i) << "," << L.name(v.j) << "," << L.name(v.k)
                     << "): " << L.format(v.value) << "\n";
            return finish(o, rep, viol.empty(), text.str(), start);
        }
        RestrictedLieAlgebra R = restricted_representative(row_key, vals, f);
        rep["row"] = catalog_row(row_key).id;
        rep["file"] = write_algebra_file(R.algebra, &R.pmap.images);
        text << "# " << catalog_row(row_key).id << "\n" << write_algebra_file(R.algebra, &R.pmap.images);
        return finish(o, rep, true, text.str(), start);
    }
    json j = catalog_json();
    if (o.json_out) {
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    for (const auto& r : catalog_rows()) {
        text << r.row << "\t" << r.id << "\t";
        bool any = false;
        for (std::size_t i = 0; i < 4; ++i)
            if (!r.images[i].empty()) {
                text << (any ? ", " : "") << standard_basis()[i] << "^[p]=" << r.images[i];
                any = true;
            }
        if (!any) text << "trivial";
        text << "\t" << to_string(r.cond);
        if (r.domain != ParamKind::None) text << "\t" << to_string(r.domain);
        text << "\n";
    }
    std::cout << text.str();
    return kPass;
}

int cmd_conjugate(const Options& o, const std::string& p1, const std::string& p2) {
    auto start = std::chrono::steady_clock::now();
    AlgebraFile a = parse_algebra_file(read_file(p1)), b = parse_algebra_file(read_file(p2));
    SearchBudget budget = make_budget(o);
    json rep{{"command", "conjugate"}, {"files", {p1, p2}}, {"ladder", budget.ladder}};
    std::ostringstream text;
    SearchResult r;
    if (a.pmap && b.pmap) {
        r = restricted_isomorphic({a.algebra, PSemilinearMap{*a.pmap}}, {b.algebra, PSemilinearMap{*b.pmap}}, budget);
        rep["kind"] = "restricted";
    } else {
        r = lie_isomorphism(a.algebra, b.algebra, budget);
        rep["kind"] = "lie";
    }
    rep["status"] = to_string(r.status);
    rep["candidates"] = r.candidates;
    rep["note"] = r.note;
    text << to_string(r.status);
    if (r.field) text << " (F_" << r.field->order() << ")";
    text << "\n";
    if (!r.note.empty()) text << r.note << "\n";
    if (r.witness) {
        LieAlgebra names(r.field, a.algebra.names());
        json w = json::object();
        for (std::size_t j = 0; j < r.witness->cols(); ++j) {
            std::string img = names.format(r.witness->column(j));
            w[a.algebra.name(j)] = img;
            text << "  " << a.algebra.name(j) << " -> " << img << "\n";
        }
        rep["witness"] = w;
        rep["field_order"] = r.field->order();
    }
    return finish(o, rep, r.found(), text.str(), start);
}

int cmd_suite(const Options& o, const std::string& name) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, unsigned>> runs;
    auto names = name == "all" ? suite_names() : std::vector<std::string>{name};
    for (const auto& n : names) {
        std::vector<unsigned> primes;
        try {
            primes = suite_primes(n);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        if (o.p) {
            if (std::find(primes.begin(), primes.end(), o.p) == primes.end() && !(primes == std::vector<unsigned>{0}))
                throw UsageError("suite " + n + " is not stated for p=" + std::to_string(o.p));
            primes = primes == std::vector<unsigned>{0} ? primes : std::vector<unsigned>{o.p};
        }
        for (unsigned p : primes) runs.emplace_back(n, p);
    }
    json rep{{"command", "suite"}, {"runs", json::array()}};
    std::ostringstream text;
    bool pass = true;
    for (const auto& [n, p] : runs) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteReport s = identity_suite(n, p);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rep["runs"].push_back({{"name", n}, {"p", p}, {"checked", s.checked}, {"counterexamples", s.counterexamples},
                               {"notes", s.notes}, {"pass", s.passed()}, {"time_ms", ms}});
        text << n << (p ? " p=" + std::to_string(p) : std::string(" over Q")) << ": " << s.checked << " checks, "
             << s.counterexamples.size() << " counterexamples\n";
        for (const auto& c : s.counterexamples) text << "  ! " << c << "\n";
        for (const auto& c : s.notes) text << "  " << c << "\n";
        pass = pass && s.passed();
    }
    return finish(o, rep, pass, text.str(), start);
}

int cmd_orbits(const Options& o) {
    auto start = std::chrono::steady_clock::now();
    unsigned p = need_p(o);
    S3Orbits so = s3_orbits(p);
    json orbits = json::array();
    std::ostringstream text;
    text << so.count << " orbits of S3 on F_" << p << "^x x F_" << p << "^x\n";
    for (const auto& orb : so.orbits) {
        json jo = json::array();
        text << " ";
        for (const auto& [a, b] : orb) {
            jo.push_back({a, b});
            text << " (" << a << "," << b << ")";
        }
        text << "\n";
        orbits.push_back(jo);
    }
    text << "fixed points: id " << so.fixed[0] << ", (12) " << so.fixed[1] << ", (23) " << so.fixed[2] << ", (13) "
         << so.fixed[3] << ", (123) " << so.fixed[4] << ", (132) " << so.fixed[5] << "\n";
    text << "Burnside " << so.burnside << ", closed form " << so.formula << "\n";
    json rep{{"command", "orbits"}, {"p", p},          {"count", so.count},       {"orbits", orbits},
             {"fixed", so.fixed},   {"burnside", so.burnside}, {"formula", so.formula}};
    return finish(o, rep, true, text.str(), start);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted Lie algebras of dimension 4 over finite fields"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sc) {
        sc->add_option("-p", o.p, "characteristic");
        sc->add_option("-k", o.k, "extension degree")->check(CLI::PositiveNumber);
        sc->add_flag("--json", o.json_out, "emit a JSON report");
        sc->add_option("--seed", o.seed, "seed for sampling (default 0)");
        sc->add_option("--threads", o.threads, "cap on internal threads")->check(CLI::PositiveNumber);
        sc->add_option("--ladder", o.ladder, "extension degrees to search, e.g. 1,2,4");
        sc->add_option("--budget", o.budget, "candidate budget for searches");
        sc->add_flag("--allow-broken", o.allow_broken, "build presentations that fail Jacobi");
    };

    std::string file1, file2, suite_name, row_key, lie_id;
    std::vector<std::string> params;
    bool enumerate = false, solve = false, count = false;
    int table = 0;

    auto* check = app.add_subcommand("check", "parse an algebra file, check Jacobi and the p-map");
    check->add_option("file", file1)->required();
    auto* pmaps = app.add_subcommand("pmaps", "existence and structure of p-maps");
    pmaps->add_option("file", file1)->required();
    pmaps->add_flag("--enumerate", enumerate, "list every p-map");
    pmaps->add_flag("--solve", solve, "describe the solution family (default)");
    auto* tables = app.add_subcommand("tables", "regenerate the invariant tables");
    tables->add_option("--table", table, "table number 1..5 (default all)")->check(CLI::Range(1, 5));
    auto* catalog = app.add_subcommand("catalog", "catalog rows, representatives and class counts");
    catalog->add_flag("--count", count, "count isomorphism classes at p");
    catalog->add_option("--row", row_key, "instantiate a row (number or id)");
    catalog->add_option("--lie", lie_id, "print a Lie representative");
    catalog->add_option("--param", params, "parameter values for --row/--lie");
    auto* conj = app.add_subcommand("conjugate", "search for a (restricted) isomorphism between two files");
    conj->add_option("file1", file1)->required();
    conj->add_option("file2", file2)->required();
    auto* suite = app.add_subcommand("suite", "run an identity suite ('all' for every suite)");
    suite->add_option("name", suite_name)->required();
    auto* orbits = app.add_subcommand("orbits", "S3 orbits on F_p^x x F_p^x");
    for (auto* sc : {check, pmaps, tables, catalog, conj, suite, orbits}) add_common(sc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }
    (void)solve;

    try {
        if (*check) return cmd_check(o, file1);
        if (*pmaps) return cmd_pmaps(o, file1, enumerate);
        if (*tables) return cmd_tables(o, table);
        if (*catalog) return cmd_catalog(o, count, row_key, params, lie_id);
        if (*conj) return cmd_conjugate(o, file1, file2);
        if (*suite) return cmd_suite(o, suite_name);
        if (*orbits) return cmd_orbits(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n"
                  << "use a smaller field or dimension, or the solve mode instead of enumeration\n";
        return kFail;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>

#include "rlie/catalog.hpp"
#include "rlie/error.hpp"
#include "rlie/iso.hpp"
#include "rlie/lie.hpp"
#include "rlie/restricted.hpp"

using namespace rlie;

namespace {

Vec vec(const FieldPtr& f, std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(f->from_int(x));
    return v;
}

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(RLIE_CLI) + " " + args + " 2>&1";
    Run r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(RLIE_DATA) + "/" + name; }

}  // namespace

TEST_CASE("prime fields") {
    auto f = Field::make(7);
    CHECK(f->mul(3, 5) == 1);
    CHECK(f->inv(3) == 5);
    CHECK(f->neg(2) == 5);
    CHECK(f->from_int(-1) == 6);
    CHECK(f->pow(3, 6) == 1);
    CHECK(f->is_quadratic_residue(2));
    CHECK_FALSE(f->is_quadratic_residue(3));
    CHECK_THROWS_AS(Field::make(6), DomainError);
}

TEST_CASE("extension fields") {
    for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {2u, 3u}}) {
        auto f = Field::make(p, k);
        CAPTURE(p);
        CAPTURE(k);
        REQUIRE(f->order() == checked_power(p, k, 1u << 20));
        for (Elem a = 1; a < f->order(); ++a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->frobenius(f->pth_root(a)) == a);
            CHECK(f->pow(a, f->order() - 1) == 1);
        }
        // the generator has full order
        std::set<Elem> powers;
        for (std::uint64_t e = 0; e + 1 < f->order(); ++e) powers.insert(f->gen_pow(e));
        CHECK(powers.size() == f->order() - 1);
    }
}

TEST_CASE("Artin-Schreier roots live in degree-p extensions") {
    auto f3 = Field::make(3), f9 = Field::make(3, 3);
    CHECK_FALSE(f3->artin_schreier_root(1).has_value());
    FieldEmbedding emb(f3, f9);
    auto r = f9->artin_schreier_root(emb(1));
    REQUIRE(r);
    CHECK(f9->sub(f9->pow(*r, 3), *r) == emb(1));
}

TEST_CASE("embeddings are ring maps") {
    auto f4 = Field::make(2, 2), f16 = Field::make(2, 4);
    FieldEmbedding e(f4, f16);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            CHECK(e(f4->add(a, b)) == f16->add(e(a), e(b)));
            CHECK(e(f4->mul(a, b)) == f16->mul(e(a), e(b)));
        }
}

TEST_CASE("linear algebra over F_5") {
    auto f = Field::make(5);
    Matrix a = Matrix::from_ints(f, 3, 3, {1, 2, 3, 0, 1, 4, 5, 6, 0});
    CHECK(a.rank() == 3);
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(f, 3));
    CHECK(f->mul(a.determinant(), inv->determinant()) == 1);

    Matrix s = Matrix::from_ints(f, 2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(s.rank() == 1);
    Subspace k = kernel(s);
    CHECK(k.dim() == 2);
    for (const auto& v : k.basis()) CHECK(is_zero(s.apply(v)));
    CHECK(solve(s, vec(f, {1, 0})) == std::nullopt);
}

TEST_CASE("similarity and conjugacy up to scalar") {
    auto f = Field::make(3);
    Matrix a = Matrix::from_ints(f, 2, 2, {0, 1, 0, 0});
    Matrix b = Matrix::from_ints(f, 2, 2, {0, 0, 2, 0});
    CHECK(similar(a, b));
    Matrix c = Matrix::from_ints(f, 2, 2, {1, 0, 0, 2});
    Matrix d = Matrix::from_ints(f, 2, 2, {2, 0, 0, 1});
    CHECK(similar(c, d));
    auto r = conjugate_up_to_scalar(c, Matrix::from_ints(f, 2, 2, {2, 0, 0, 1}));
    REQUIRE(r);
    Matrix p = r->first;
    CHECK(p * c * *p.inverse() == d.scaled(r->second));
    CHECK_FALSE(conjugate_up_to_scalar(a, c));
}

TEST_CASE("parser reports locations") {
    SUBCASE("missing bracket") {
        try {
            parse_algebra("p = 3\ndim = 4\nbasis = x y z w\n[w,x = y\n");
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.line == 4);
            CHECK(e.column == 6);
        }
    }
    SUBCASE("unknown basis name") {
        try {
            parse_algebra("p = 3\ndim = 2\nbasis = x y\n[x,y] = q\n");
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.line == 4);
        }
    }
    SUBCASE("round trip") {
        auto f = Field::make(5);
        LieAlgebra L = lie_representative("gl2", {}, f);
        std::vector<Vec> pm{L.zero(), L.zero(), vec(f, {0, 0, 1, 0}), L.zero()};
        AlgebraFile back = parse_algebra_file(write_algebra_file(L, &pm));
        CHECK(back.algebra.tensor() == L.tensor());
        REQUIRE(back.pmap);
        CHECK(*back.pmap == pm);
    }
}

TEST_CASE("Jacobi identity") {
    for (unsigned p : {3u, 5u, 7u}) {
        auto f = Field::make(p);
        CAPTURE(p);
        LieAlgebra n5 = lie_representative("N5", {}, f, true);
        CHECK(jacobiator(n5, n5.basis(3), n5.basis(0), n5.basis(2)) == vec(f, {0, 2, 0, 0}));
        LieAlgebra w2 = lie_representative("W2", {}, f, true);
        CHECK(jacobiator(w2, w2.basis(3), w2.basis(1), w2.basis(0)) == vec(f, {0, 0, 2, 0}));
        CHECK_THROWS_AS(lie_representative("N5", {}, f), DomainError);
        CHECK(check_jacobi(lie_representative("gl2", {}, f)).empty());
    }
    auto f2 = Field::make(2);
    CHECK(check_jacobi(lie_representative("N5", {}, f2)).empty());
    CHECK(check_jacobi(lie_representative("W2", {}, f2)).empty());
}

TEST_CASE("p-semilinearity in characteristic 2") {
    auto f = Field::make(2);
    LieAlgebra L = lie_representative("L2", {}, f);
    PSemilinearMap m{{L.zero(), L.zero(), L.zero(), vec(f, {0, 1, 0, 0})}};
    Vec x = L.basis(0), w = L.basis(3);
    // (x + w)^[2] = x^[2] + w^[2] + [x, w]
    Vec expect = vadd(*f, vadd(*f, eval(L, m, x), eval(L, m, w)), L.bracket(x, w));
    CHECK(eval(L, m, vadd(*f, x, w)) == expect);
    CHECK(eval_with_order(L, m, vadd(*f, x, w), {3, 2, 1, 0}) == expect);
    CHECK(is_p_map(L, m));
}

TEST_CASE("p-map existence and counts") {
    auto f2 = Field::make(2), f3 = Field::make(3);
    CHECK_FALSE(solve_pmaps(lie_representative("L7", {}, f3)).exists());
    CHECK_FALSE(solve_pmaps(lie_representative("L3", {}, f2)).exists());
    PMapFamily l6 = solve_pmaps(lie_representative("L6", {1, 1}, f3));
    REQUIRE(l6.exists());
    CHECK(l6.count() == 1);
    PMapFamily l2 = solve_pmaps(lie_representative("L2", {}, f2));
    CHECK(l2.count() == 256);
    CHECK(all_pmaps(lie_representative("L2", {}, f2)).size() == 256);
    auto f4 = Field::make(3, 2);
    for (Elem xi = 3; xi < 9; ++xi) CHECK_FALSE(solve_pmaps(lie_representative("L5", {xi}, f4)).exists());
}

TEST_CASE("invariant profile is a conjugacy invariant") {
    auto f = Field::make(3);
    LieAlgebra L = lie_representative("L2", {}, f);
    auto R = restricted_representative("L2.12", {}, f);
    AutomorphismList aut = automorphisms(L);
    CHECK(aut.maps.size() == 23328);
    for (std::size_t i = 0; i < aut.maps.size(); i += 997) {
        PSemilinearMap c = conjugate(L, R.pmap, aut.maps[i]);
        CHECK(is_p_map(L, c));
        CHECK(invariant_profile(L, c) == invariant_profile(R));
    }
}

TEST_CASE("searches return verified witnesses") {
    auto f = Field::make(2);
    LieAlgebra L = lie_representative("L2", {}, f);
    CHECK(automorphisms(L).maps.size() == 192);
    auto a = restricted_representative("L2.9", {}, f), b = restricted_representative("L2.10", {}, f);
    SearchBudget one;
    one.ladder = {1};
    CHECK(pmaps_conjugate(L, a.pmap, b.pmap, one).status == SearchStatus::Absent);
    // A non-trivial conjugate is found again.
    Matrix phi = automorphisms(L).maps[100];
    PSemilinearMap c = conjugate(L, a.pmap, phi);
    SearchResult r = pmaps_conjugate(L, a.pmap, c, one);
    REQUIRE(r.found());
    CHECK(conjugate(L, a.pmap, *r.witness) == c);
}

TEST_CASE("label counts separate classes with equal profiles") {
    auto f2 = Field::make(2), f16 = Field::make(2, 4);
    FieldEmbedding e(f2, f16);
    auto a = restricted_representative("L2.3", {}, f2), b = restricted_representative("L2.4", {}, f2);
    LieAlgebra L = a.algebra.base_change(e);
    PSemilinearMap ma = base_change(a.pmap, e), mb = base_change(b.pmap, e);
    REQUIRE(invariant_profile(L, ma) == invariant_profile(L, mb));
    SearchResult r = find_conjugator(L, ma, mb);
    CHECK(r.status == SearchStatus::Absent);
    CHECK(r.candidates == 0);
}

TEST_CASE("the ladder reports where a witness appears") {
    auto f2 = Field::make(2);
    LieAlgebra L = lie_representative("L2", {}, f2);
    // y -> z, z -> y + z on the center needs a conjugator over F_8.
    PSemilinearMap m{{L.zero(), vec(f2, {0, 0, 1, 0}), vec(f2, {0, 1, 1, 0}), L.zero()}};
    REQUIRE(is_p_map(L, m));
    auto row = restricted_representative("L2.15", {0}, f2);
    SearchBudget b;
    b.ladder = {1, 2, 4};
    SearchResult miss = pmaps_conjugate(L, m, row.pmap, b);
    CHECK(miss.status == SearchStatus::Absent);
    CHECK(miss.note == "absent up to F_2^4");
}

TEST_CASE("parameter sets") {
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(2) == 1);
    auto xi7 = parameter_set(ParamKind::Xi, 7);
    CHECK(xi7.elements == std::vector<std::vector<Elem>>{{1}, {3}, {2}, {6}});
    auto q5 = parameter_set(ParamKind::QpMinusQuarter, 5);
    CHECK(std::set<std::vector<Elem>>(q5.elements.begin(), q5.elements.end()) ==
          std::set<std::vector<Elem>>{{0}, {2}});
    CHECK(parameter_set(ParamKind::FpStarSquared, 3).elements.size() == 4);
    CHECK(parameter_set(ParamKind::Fp, 3).infinite);
    CHECK(parameter_set(ParamKind::None, 3).elements.size() == 1);
}

TEST_CASE("equivalence predicates") {
    auto f = Field::make(5);
    const CatalogRow& l6 = catalog_row("L6.1");
    // (12)(xi, eta) = (xi^-1, xi^-1 eta); (23) swaps.
    CHECK(equivalence(l6, {2, 3}, {3, 4}, f));
    CHECK(equivalence(l6, {2, 3}, {3, 2}, f));
    CHECK(equivalence(l6, {1, 1}, {1, 1}, f));
    CHECK_FALSE(equivalence(l6, {1, 1}, {1, 2}, f));
    const CatalogRow& l215 = catalog_row(27);
    for (Elem a = 0; a < 5; ++a) CHECK(equivalence(l215, {a}, {a}, f));
    CHECK_THROWS_AS(equivalence(catalog_row(14), {}, {}, f), DomainError);
}

TEST_CASE("class counts and S3 orbits") {
    CHECK(count_classes(2).total == 42);
    CHECK(count_classes(3).total == 63);
    CHECK(count_classes(5).total == 76);
    CHECK(count_classes(7).total == 90);
    CHECK(closed_form_count(11) == (11 * 11 + 28 * 11 + 291) / 6);
    CHECK(closed_form_count(13) == (13 * 13 + 28 * 13 + 295) / 6);
    S3Orbits o = s3_orbits(7);
    CHECK(o.count == 10);
    CHECK(o.burnside == 10);
    CHECK(o.fixed[0] == 36);
}

TEST_CASE("catalog JSON round trip reproduces structure tensors") {
    nlohmann::json j = catalog_json();
    auto [fams, rows] = catalog_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(rows.size() == 67);
    CHECK(rows == catalog_rows());
    for (unsigned p : {2u, 3u, 5u}) {
        auto f = Field::make(p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!admits(rows[i].cond, p)) continue;
            const LieFamily* fam = nullptr;
            for (const auto& x : fams)
                if (x.id == rows[i].family) fam = &x;
            REQUIRE(fam);
            for (const auto& v : parameter_set(rows[i], p).elements) {
                RestrictedLieAlgebra a = instantiate_row(catalog_rows()[i], v, f);
                RestrictedLieAlgebra b = instantiate_row(*fam, rows[i], v, f);
                CHECK(a.algebra.tensor() == b.algebra.tensor());
                CHECK(a.pmap == b.pmap);
            }
        }
    }
}

TEST_CASE("row instantiation guards") {
    auto f3 = Field::make(3);
    CHECK_THROWS_AS(restricted_representative("gl2.1", {}, Field::make(2)), DomainError);
    // Q_3 - 1/4 = {0}
    CHECK_THROWS_AS(restricted_representative("N3.1", {2}, f3), DomainError);
    CHECK_THROWS_AS(catalog_row("L2.99"), DomainError);
    CHECK_NOTHROW(restricted_representative("N3.1", {0}, f3));
}

TEST_CASE("command line exit codes") {
    CHECK(cli("check " + data("L2_w_y.p2.alg")).code == 0);
    Run n5 = cli("check " + data("N5.p3.alg"));
    CHECK(n5.code == 1);
    CHECK(n5.out.find("Jacobi fails") != std::string::npos);
    Run bad = cli("check " + data("malformed.alg"));
    CHECK(bad.code == 2);
    CHECK(bad.out.find("line 4, column 6") != std::string::npos);
    Run l7 = cli("pmaps " + data("L7.p3.alg"));
    CHECK(l7.code == 0);
    CHECK(l7.out.rfind("none", 0) == 0);
    CHECK(cli("pmaps --enumerate " + data("L6_1_1.p3.alg")).out.find("count 1") != std::string::npos);
    CHECK(cli("pmaps --enumerate " + data("L2.p2.alg")).out.find("count 256") != std::string::npos);
    Run count = cli("catalog --count -p 5");
    CHECK(count.code == 0);
    CHECK(count.out.find("N_5 = 76") != std::string::npos);
    CHECK(cli("orbits -p 7").out.find("Burnside 10") != std::string::npos);
    CHECK(cli("conjugate --ladder 1,2 " + data("L3_row29.p3.alg") + " " + data("L3_row31.p3.alg")).code == 1);
    CHECK(cli("tables --table 9 -p 3").code == 2);
    CHECK(cli("catalog --count -p 4").code == 2);
    CHECK(cli("frobnicate").code == 2);
    Run js = cli("catalog --count -p 3 --json");
    CHECK(nlohmann::json::parse(js.out)["total"] == 63);
}

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rlie/field.hpp"
#include "rlie/lie.hpp"
#include "rlie/restricted.hpp"

namespace rlie {

enum class CharCond { Any, Two, AtLeast3, AtLeast5 };
const char* to_string(CharCond c);
CharCond char_cond_from_string(const std::string& s);
bool admits(CharCond c, unsigned p);

// Lie algebra presentations on the basis x, y, z, w.
struct LieFamily {
    std::string id;                        // "L1".."L9", "N1".."N5", "gl2", "W1", "W2"
    std::vector<std::string> params;       // parameter names used in relations
    std::vector<std::string> relations;    // "[w,x] = x + xi*y"
    CharCond valid = CharCond::Any;        // where the relations satisfy Jacobi
};

const std::vector<LieFamily>& lie_families();
const LieFamily& lie_family(const std::string& id);

inline const std::vector<std::string>& standard_basis() {
    static const std::vector<std::string> names{"x", "y", "z", "w"};
    return names;
}

// Throws DomainError for unknown ids, wrong parameter counts, zero values
// where F^x is required, and for N5 and W2 at p >= 3 unless allow_broken.
LieAlgebra lie_representative(const std::string& id, const std::vector<Elem>& params, const FieldPtr& f,
                              bool allow_broken = false);

enum class ParamKind { None, Xi, XiNoPm1, XiNo1, FpStar, Fp, QpMinusQuarter, FpStarSquared };
const char* to_string(ParamKind k);
ParamKind param_kind_from_string(const std::string& s);

enum class Equivalence { None, L2_15, L4_11, L6_1 };
const char* to_string(Equivalence e);
Equivalence equivalence_from_string(const std::string& s);

struct CatalogRow {
    unsigned row = 0;                     // 1..67
    std::string id;                       // "L2.15"
    std::string family;                   // "L2"
    std::vector<std::string> params;      // row parameters: "lambda", "xi", "eta"
    std::vector<std::string> family_args; // family parameters as row parameter names or integers
    std::array<std::string, 4> images;    // x, y, z, w images; "" is zero
    ParamKind domain = ParamKind::None;
    CharCond cond = CharCond::Any;
    Equivalence equivalence = Equivalence::None;

    bool operator==(const CatalogRow&) const = default;
};

const std::vector<CatalogRow>& catalog_rows();
// Accepts a row number ("27") or an id ("L2.15").
const CatalogRow& catalog_row(const std::string& key);
const CatalogRow& catalog_row(unsigned row);

// Instantiates a row at the given parameter values without domain checks and
// verifies the result is a p-map.
RestrictedLieAlgebra instantiate_row(const CatalogRow& row, const std::vector<Elem>& params, const FieldPtr& f);
// Checks the characteristic condition and the parameter domain (lambda may be
// any field element), then instantiates.
RestrictedLieAlgebra restricted_representative(const std::string& key, const std::vector<Elem>& params,
                                               const FieldPtr& f);

// Smallest positive primitive root mod p.
unsigned smallest_primitive_root(unsigned p);

struct ParamSet {
    ParamKind kind = ParamKind::None;
    unsigned p = 0;
    // Realized tuples over F_p; a single empty tuple for ParamKind::None.
    std::vector<std::vector<Elem>> elements;
    bool infinite = false;  // lambda in F: the listed elements are F_p only
};

ParamSet parameter_set(ParamKind kind, unsigned p);
ParamSet parameter_set(const CatalogRow& row, unsigned p);

// The closed-form isomorphism predicates for rows 27, 43 and 52. Parameters
// are elements of f; row 52 requires them in F_p^x.
bool equivalence(const CatalogRow& row, const std::vector<Elem>& a, const std::vector<Elem>& b, const FieldPtr& f);

struct S3Orbits {
    unsigned p = 0;
    std::vector<std::vector<std::pair<Elem, Elem>>> orbits;  // each sorted, ordered by first element
    std::size_t count = 0;
    std::array<std::size_t, 6> fixed{};  // |X^s| for id, (12), (23), (13), (123), (132)
    std::size_t burnside = 0;
    std::size_t formula = 0;
};

std::pair<Elem, Elem> s3_act(unsigned p, int sigma, std::pair<Elem, Elem> v);
// Throws Error when closure, Burnside and the closed form disagree.
S3Orbits s3_orbits(unsigned p);

struct ClassCount {
    unsigned p = 0;
    std::uint64_t total = 0;
    std::vector<std::pair<std::string, std::uint64_t>> per_row;  // rows valid at p, excluded families omitted
    std::vector<std::string> excluded;                           // infinite families
    std::map<std::string, std::uint64_t> per_family;
    std::uint64_t individuals = 0;
    std::optional<std::uint64_t> closed_form;  // 42, 63, or the p >= 5 formula
    std::uint64_t stated_individuals = 53;     // the prose figure, reported alongside
};

ClassCount count_classes(unsigned p);
std::uint64_t closed_form_count(unsigned p);

// Invariant tables for L2, L4, L5, N4 and gl2.
struct InvariantTableRow {
    std::string label;
    std::string condition;
    std::vector<std::size_t> expected;
    std::optional<std::vector<std::size_t>> computed;  // empty when not applicable at p
    bool consistent = true;  // computed is the same for every parameter value tried
};

struct InvariantTable {
    int number = 0;
    std::string title;
    std::vector<std::string> columns;
    unsigned p = 0;
    std::vector<InvariantTableRow> rows;

    bool matches() const;
    std::string to_string() const;
};

InvariantTable regenerate_table(int number, unsigned p);

struct SuiteReport {
    std::string name;
    unsigned p = 0;  // 0 for identities over the rationals
    std::uint64_t checked = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;

    bool passed() const { return counterexamples.empty() && checked > 0; }
};

const std::vector<std::string>& suite_names();
// The primes each suite is stated for; {0} for the rational identity.
std::vector<unsigned> suite_primes(const std::string& name);
SuiteReport identity_suite(const std::string& name, unsigned p);

struct ParameterizationReport {
    std::string family;
    unsigned q = 0;
    std::uint64_t brute_force = 0;
    std::uint64_t parameterized = 0;
    bool same_set = false;
    // For forms that disagree with brute force: the amended form and whether it agrees.
    std::string correction;
    std::optional<bool> corrected_same_set;

    bool passed() const { return same_set && brute_force == parameterized && brute_force > 0; }
};

const std::vector<std::string>& parameterization_names();
ParameterizationReport verify_parameterization(const std::string& family, unsigned q);

nlohmann::json catalog_json();
// Rebuilds families and rows from catalog_json output.
std::pair<std::vector<LieFamily>, std::vector<CatalogRow>> catalog_from_json(const nlohmann::json& j);
// Instantiates a row against explicit family data, e.g. parsed from JSON.
RestrictedLieAlgebra instantiate_row(const LieFamily& family, const CatalogRow& row, const std::vector<Elem>& params,
                                     const FieldPtr& f);

}  // namespace rlie

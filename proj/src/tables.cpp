#include <sstream>

#include "rlie/catalog.hpp"
#include "rlie/error.hpp"

namespace rlie {

namespace {

enum class Col { L, Z, D, Z2, D2 };

struct Spec {
    std::string label;
    std::string row;
    std::vector<std::size_t> expected;
    std::string condition;
    // Parameter filter for rows that split by value.
    enum { All, Zero, Nonzero } lambda = All;
};

std::size_t pick(const InvariantProfile& prof, Col c) {
    switch (c) {
        case Col::L: return prof.dims[0][0];
        case Col::Z: return prof.dims[0][1];
        case Col::D: return prof.dims[0][2];
        case Col::Z2: return prof.dims[1][1];
        case Col::D2: return prof.dims[1][2];
    }
    return 0;
}

}  // namespace

bool InvariantTable::matches() const {
    bool any = false;
    for (const auto& r : rows) {
        if (!r.computed) continue;
        any = true;
        if (!r.consistent || *r.computed != r.expected) return false;
    }
    return any;
}

std::string InvariantTable::to_string() const {
    std::ostringstream os;
    os << "Table " << number << ": " << title << " (p=" << p << ")\n";
    bool transposed = number == 3 || number == 4;
    auto cell = [](const InvariantTableRow& r, std::size_t i) -> std::string {
        if (!r.computed) return "-";
        std::string s = std::to_string((*r.computed)[i]);
        if ((*r.computed)[i] != r.expected[i]) s += "(!" + std::to_string(r.expected[i]) + ")";
        return s;
    };
    if (transposed) {
        os << "[p]";
        for (const auto& r : rows) os << " & " << r.label;
        os << "\n";
        for (std::size_t c = 0; c < columns.size(); ++c) {
            os << columns[c];
            for (const auto& r : rows) os << " & " << cell(r, c);
            os << "\n";
        }
    } else {
        os << "[p]";
        for (const auto& c : columns) os << " & " << c;
        os << " & Condition\n";
        for (const auto& r : rows) {
            os << r.label;
            for (std::size_t c = 0; c < columns.size(); ++c) os << " & " << cell(r, c);
            os << " & " << r.condition;
            if (!r.consistent) os << " [varies with parameter]";
            os << "\n";
        }
    }
    return os.str();
}

InvariantTable regenerate_table(int number, unsigned p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    InvariantTable t;
    t.number = number;
    t.p = p;
    std::vector<Col> cols;
    std::vector<Spec> specs;
    switch (number) {
        case 1:
            t.title = "3-tuple of invariants of L2";
            t.columns = {"dim L^[p]", "dim Z(L)^[p]", "dim [L,L]^[p]"};
            cols = {Col::L, Col::Z, Col::D};
            specs = {{"[p]_9", "21", {1, 1, 1}, ""},          {"[p]_10", "22", {2, 1, 1}, ""},
                     {"[p]_11", "23", {1, 1, 1}, "p>=3"},     {"[p]_12", "24", {2, 1, 1}, ""},
                     {"[p]_13", "25", {1, 1, 0}, "p>=3"},     {"[p]_14", "26", {2, 1, 0}, ""},
                     {"[p]_15,lambda", "27", {2, 2, 1}, ""}};
            break;
        case 2:
            t.title = "5-tuple of invariants of L4";
            t.columns = {"dim L^[p]", "dim [L,L]^[p]", "dim Z(L)^[p]", "dim Z(L)^[p]^2", "dim [L,L]^[p]^2"};
            cols = {Col::L, Col::D, Col::Z, Col::Z2, Col::D2};
            specs = {{"[p]_1", "33", {2, 0, 0, 0, 0}, ""},  {"[p]_2", "34", {3, 1, 0, 0, 0}, ""},
                     {"[p]_3", "35", {3, 0, 1, 0, 0}, ""},  {"[p]_4", "36", {3, 1, 1, 0, 0}, ""},
                     {"[p]_5", "37", {4, 1, 1, 0, 0}, ""},  {"[p]_6", "38", {3, 0, 1, 1, 0}, ""},
                     {"[p]_7", "39", {4, 1, 1, 1, 0}, ""},  {"[p]_8", "40", {3, 1, 1, 1, 1}, ""},
                     {"[p]_9", "41", {4, 1, 1, 1, 1}, ""},  {"[p]_10", "42", {4, 0, 2, 2, 2}, ""},
                     {"[p]_11,lambda", "43", {4, 1, 2, 2, 2}, ""}};
            break;
        case 3: {
            t.title = "2-tuple of invariants of L5(xi)";
            t.columns = {"dim Z(L)^[p]", "dim [L,L]^[p]"};
            cols = {Col::Z, Col::D};
            const std::size_t z[] = {0, 0, 0, 0, 1, 1, 1, 1}, d[] = {0, 1, 1, 1, 0, 1, 1, 1};
            for (int i = 0; i < 8; ++i)
                specs.push_back({"[p]_" + std::to_string(i + 1), std::to_string(44 + i), {z[i], d[i]}, ""});
            break;
        }
        case 4: {
            t.title = "2-tuple of invariants of N4";
            t.columns = {"dim Z(L)^[p]", "dim [L,L]^[p]"};
            cols = {Col::Z, Col::D};
            const std::size_t z[] = {0, 0, 1, 0}, d[] = {0, 1, 1, 1};
            for (int i = 0; i < 4; ++i)
                specs.push_back({"[p]_" + std::to_string(i + 1), std::to_string(59 + i), {z[i], d[i]}, "p>=3"});
            break;
        }
        case 5:
            t.title = "2-tuple of invariants of gl2";
            t.columns = {"dim Z(L)^[p]", "dim [L,L]^[p]"};
            cols = {Col::Z, Col::D};
            specs = {{"[p]_1", "63", {0, 3}, "p>=3"},
                     {"[p]_2", "64", {0, 4}, "p>=3"},
                     {"[p]_3", "65", {1, 3}, "p>=3"},
                     {"[p]_4", "66", {1, 4}, "p>=3"},
                     {"[p]_5,lambda", "67", {1, 4}, "p>=3, lambda!=0", Spec::Nonzero},
                     {"[p]_5,0", "67", {0, 4}, "p>=3, lambda=0", Spec::Zero}};
            break;
        default:
            throw DomainError("tables are numbered 1 to 5");
    }
    FieldPtr f = Field::make(p);
    const unsigned depth = (number == 2) ? 2 : 1;
    for (const auto& s : specs) {
        InvariantTableRow out;
        out.label = s.label;
        out.condition = s.condition;
        out.expected = s.expected;
        const CatalogRow& row = catalog_row(s.row);
        if (admits(row.cond, p)) {
            // Parameterized rows are evaluated at every value over F_p; L5
            // rows ignore the Xi restrictions, which only select conjugacy
            // representatives.
            std::vector<std::vector<Elem>> values;
            if (row.family == "L5")
                values = parameter_set(ParamKind::FpStar, p).elements;
            else
                values = parameter_set(row, p).elements;
            for (const auto& v : values) {
                if (s.lambda == Spec::Zero && v[0] != 0) continue;
                if (s.lambda == Spec::Nonzero && v[0] == 0) continue;
                RestrictedLieAlgebra R;
                try {
                    R = instantiate_row(row, v, f);
                } catch (const Error&) {
                    continue;
                }
                InvariantProfile prof = invariant_profile(R, depth);
                std::vector<std::size_t> got;
                for (Col c : cols) got.push_back(pick(prof, c));
                if (!out.computed)
                    out.computed = got;
                else if (*out.computed != got)
                    out.consistent = false;
            }
        }
        t.rows.push_back(std::move(out));
    }
    return t;
}

}  // namespace rlie

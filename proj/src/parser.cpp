#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "rlie/error.hpp"
#include "rlie/lie.hpp"

namespace rlie {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Cursor {
public:
    Cursor(const std::string& s, std::size_t line, std::size_t offset) : s_(s), line_(line), off_(offset) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::string name() {
        skip();
        if (pos_ >= s_.size() || !is_name_start(s_[pos_])) fail("expected a name");
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    bool at_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool at_name() {
        skip();
        return pos_ < s_.size() && is_name_start(s_[pos_]);
    }
    unsigned long long number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 18) fail("integer too large");
        return std::stoull(s_.substr(start, pos_ - start));
    }
    std::size_t column() const { return off_ + pos_ + 1; }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError(line_, off_ + pos + 1, msg);
    }

private:
    const std::string& s_;
    std::size_t line_;
    std::size_t off_;
    std::size_t pos_ = 0;
};

Vec lincomb(Cursor& cur, const Field& F, const std::vector<std::string>& names,
            const std::map<std::string, Elem>& params) {
    const std::size_t n = names.size();
    Vec v(n, 0);
    if (cur.done()) cur.fail("expected a linear combination");
    bool first = true;
    while (!cur.done()) {
        bool negative = false;
        if (cur.eat('+')) {
        } else if (cur.eat('-')) {
            negative = true;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;
        Elem coef = 1;
        std::optional<std::size_t> target;
        bool bare_number = false;
        while (true) {
            std::size_t at = cur.pos();
            if (cur.at_digit()) {
                coef = F.mul(coef, F.from_int(static_cast<long long>(cur.number() % F.p())));
                if (cur.at_name()) {  // juxtaposition such as 2x
                    std::size_t name_at = cur.pos();
                    std::string nm = cur.name();
                    auto it = std::find(names.begin(), names.end(), nm);
                    if (it == names.end()) cur.fail_at(name_at, "unknown basis element '" + nm + "'");
                    target = std::size_t(it - names.begin());
                    break;
                }
                if (cur.eat('*')) continue;
                bare_number = true;
                break;
            }
            if (!cur.at_name()) cur.fail("expected a coefficient or basis element");
            std::string nm = cur.name();
            if (nm == "g" && cur.peek() == '^') {
                cur.eat('^');
                coef = F.mul(coef, F.gen_pow(cur.number()));
                if (!cur.eat('*')) cur.fail("expected '*' after coefficient");
                continue;
            }
            if (cur.peek() == '*') {
                cur.eat('*');
                auto pit = params.find(nm);
                if (pit != params.end())
                    coef = F.mul(coef, pit->second);
                else if (nm == "g")
                    coef = F.mul(coef, F.generator());
                else
                    cur.fail_at(at, "unknown coefficient '" + nm + "'");
                continue;
            }
            auto it = std::find(names.begin(), names.end(), nm);
            if (it == names.end()) cur.fail_at(at, "unknown basis element '" + nm + "'");
            target = std::size_t(it - names.begin());
            break;
        }
        if (bare_number) {
            if (coef != 0) cur.fail("constant term in a linear combination");
            continue;
        }
        if (negative) coef = F.neg(coef);
        v[*target] = F.add(v[*target], coef);
    }
    return v;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Vec parse_lincomb(const std::string& text, const Field& F, const std::vector<std::string>& names,
                  const std::map<std::string, Elem>& params, std::size_t line, std::size_t column_offset) {
    Cursor cur(text, line, column_offset);
    return lincomb(cur, F, names, params);
}

AlgebraFile parse_algebra_file(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::optional<unsigned> p, k, dim;
    std::vector<std::string> basis;
    std::optional<LieAlgebra> L;
    std::set<std::pair<std::size_t, std::size_t>> declared;
    std::set<std::size_t> mapped;
    std::optional<std::vector<Vec>> pmap;

    auto ensure_algebra = [&](Cursor& cur) -> LieAlgebra& {
        if (L) return *L;
        if (!p) cur.fail("missing 'p =' before structure lines");
        if (!dim) cur.fail("missing 'dim =' before structure lines");
        if (basis.empty()) cur.fail("missing 'basis =' before structure lines");
        FieldPtr f;
        try {
            f = Field::make(*p, k.value_or(1));
        } catch (const Error& e) {
            cur.fail(e.what());
        }
        L.emplace(f, basis);
        return *L;
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = strip_comment(raw);
        Cursor cur(line, lineno, 0);
        if (cur.done()) continue;
        if (cur.peek() == '[') {
            LieAlgebra& A = ensure_algebra(cur);
            cur.expect('[');
            std::size_t at_a = cur.pos();
            std::string a = cur.name();
            cur.expect(',');
            std::size_t at_b = cur.pos();
            std::string b = cur.name();
            cur.expect(']');
            cur.expect('=');
            auto ia = A.index_of(a);
            if (!ia) cur.fail_at(at_a, "unknown basis element '" + a + "'");
            auto ib = A.index_of(b);
            if (!ib) cur.fail_at(at_b, "unknown basis element '" + b + "'");
            if (*ia == *ib) cur.fail_at(at_a, "bracket of an element with itself");
            auto key = std::minmax(*ia, *ib);
            if (!declared.insert(key).second) cur.fail_at(at_a, "duplicate bracket declaration");
            Vec v = lincomb(cur, A.F(), A.names(), {});
            A.set_bracket(*ia, *ib, v);
            continue;
        }
        std::size_t at_key = cur.pos();
        std::string key = cur.name();
        if (key == "pmap") {
            LieAlgebra& A = ensure_algebra(cur);
            std::size_t at_n = cur.pos();
            std::string nm = cur.name();
            auto idx = A.index_of(nm);
            if (!idx) cur.fail_at(at_n, "unknown basis element '" + nm + "'");
            if (!mapped.insert(*idx).second) cur.fail_at(at_n, "duplicate pmap declaration");
            cur.expect('=');
            if (!pmap) pmap.emplace(A.dim(), A.zero());
            (*pmap)[*idx] = lincomb(cur, A.F(), A.names(), {});
            continue;
        }
        cur.expect('=');
        if (L) cur.fail_at(at_key, "header line after structure lines");
        if (key == "p" || key == "k" || key == "dim") {
            std::size_t at_v = cur.pos();
            auto value = cur.number();
            if (!cur.done()) cur.fail("unexpected text after value");
            if (key == "p") {
                if (p) cur.fail_at(at_key, "duplicate 'p'");
                if (!is_prime(value)) cur.fail_at(at_v, "characteristic " + std::to_string(value) + " is not prime");
                p = unsigned(value);
            } else if (key == "k") {
                if (k) cur.fail_at(at_key, "duplicate 'k'");
                if (value < 1) cur.fail_at(at_v, "degree must be at least 1");
                k = unsigned(value);
            } else {
                if (dim) cur.fail_at(at_key, "duplicate 'dim'");
                if (value < 1 || value > kMaxLieDim) cur.fail_at(at_v, "dim must be between 1 and 8");
                dim = unsigned(value);
            }
        } else if (key == "basis") {
            if (!basis.empty()) cur.fail_at(at_key, "duplicate 'basis'");
            if (!dim) cur.fail_at(at_key, "'dim' must precede 'basis'");
            while (!cur.done()) {
                std::size_t at_n = cur.pos();
                std::string nm = cur.name();
                if (std::find(basis.begin(), basis.end(), nm) != basis.end())
                    cur.fail_at(at_n, "duplicate basis name '" + nm + "'");
                basis.push_back(nm);
            }
            if (basis.size() != *dim)
                cur.fail("basis has " + std::to_string(basis.size()) + " names but dim is " + std::to_string(*dim));
        } else {
            cur.fail_at(at_key, "unknown key '" + key + "'");
        }
    }
    Cursor end("", lineno + 1, 0);
    ensure_algebra(end);
    return {*L, pmap};
}

LieAlgebra parse_algebra(const std::string& text) { return parse_algebra_file(text).algebra; }

std::string write_algebra_file(const LieAlgebra& L, const std::vector<Vec>* pmap) {
    std::ostringstream os;
    const Field& F = L.F();
    os << "p = " << F.p() << "\n";
    if (F.k() > 1) os << "k = " << F.k() << "\n";
    os << "dim = " << L.dim() << "\nbasis =";
    for (const auto& nm : L.names()) os << " " << nm;
    os << "\n";
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Vec v = L.structure(j, i);
            if (!is_zero(v)) os << "[" << L.name(j) << "," << L.name(i) << "] = " << L.format(v) << "\n";
        }
    if (pmap)
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (!is_zero((*pmap)[j])) os << "pmap " << L.name(j) << " = " << L.format((*pmap)[j]) << "\n";
    return os.str();
}

}  // namespace rlie

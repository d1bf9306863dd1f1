#include "rlie/mpoly.hpp"

#include <algorithm>
#include <cctype>

#include "rlie/error.hpp"

namespace rlie {

void RatMPoly::check_compatible(const RatMPoly& o) const {
    if (vars_ != o.vars_) throw DomainError("variable lists differ");
}

void RatMPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

RatMPoly RatMPoly::constant(const std::vector<std::string>& vars, const mpq_class& c) {
    RatMPoly r(vars);
    r.add_term(Exponents(vars.size(), 0), c);
    return r;
}

RatMPoly RatMPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw DomainError("unknown variable " + name);
    RatMPoly r(vars);
    Exponents e(vars.size(), 0);
    e[std::size_t(it - vars.begin())] = 1;
    r.add_term(e, 1);
    return r;
}

RatMPoly RatMPoly::operator+(const RatMPoly& o) const {
    check_compatible(o);
    RatMPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

RatMPoly RatMPoly::operator-(const RatMPoly& o) const {
    check_compatible(o);
    RatMPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

RatMPoly RatMPoly::operator-() const { return scaled(-1); }

RatMPoly RatMPoly::operator*(const RatMPoly& o) const {
    check_compatible(o);
    RatMPoly r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

RatMPoly RatMPoly::scaled(const mpq_class& c) const {
    RatMPoly r(vars_);
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

RatMPoly RatMPoly::pow(unsigned e) const {
    RatMPoly r = constant(vars_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool RatMPoly::operator==(const RatMPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

std::string RatMPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class mag = abs(c);
        s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += mag.get_str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.get_str() + "*" + mono;
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(const std::vector<std::string>& vars, const std::string& text) : vars_(vars), s_(text) {}

    RatMPoly run() {
        RatMPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(1, pos_ + 1, msg); }

    RatMPoly expr() {
        RatMPoly r(vars_);
        bool neg = eat('-');
        if (!neg) eat('+');
        r = term();
        if (neg) r = -r;
        while (true) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
    RatMPoly term() {
        RatMPoly r = power();
        while (eat('*')) r = r * power();
        return r;
    }
    RatMPoly power() {
        RatMPoly b = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            b = b.pow(unsigned(std::stoul(s_.substr(start, pos_ - start))));
        }
        return b;
    }
    RatMPoly atom() {
        skip();
        if (eat('(')) {
            RatMPoly r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpq_class v(s_.substr(start, pos_ - start));
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t d0 = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (d0 == pos_) fail("expected denominator");
                v /= mpq_class(s_.substr(d0, pos_ - d0));
            }
            return RatMPoly::constant(vars_, v);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected operand");
        std::string name = s_.substr(start, pos_ - start);
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) fail("unknown variable " + name);
        return RatMPoly::variable(vars_, name);
    }

    const std::vector<std::string>& vars_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatMPoly RatMPoly::parse(const std::vector<std::string>& vars, const std::string& text) {
    return Parser(vars, text).run();
}

}  // namespace rlie

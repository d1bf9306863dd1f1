#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace rlie {

// Multivariate polynomial over Q. Terms keyed by exponent vector in
// lexicographic order; zero coefficients are never stored.
class RatMPoly {
public:
    using Exponents = std::vector<unsigned>;

    RatMPoly() = default;
    explicit RatMPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    static RatMPoly constant(const std::vector<std::string>& vars, const mpq_class& c);
    static RatMPoly variable(const std::vector<std::string>& vars, const std::string& name);
    // Accepts + - * ^, parentheses, integers and a/b rationals, e.g. "-1/2*a3*(a2*c1-2*a3)".
    static RatMPoly parse(const std::vector<std::string>& vars, const std::string& text);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatMPoly operator+(const RatMPoly& o) const;
    RatMPoly operator-(const RatMPoly& o) const;
    RatMPoly operator*(const RatMPoly& o) const;
    RatMPoly operator-() const;
    RatMPoly scaled(const mpq_class& c) const;
    RatMPoly pow(unsigned e) const;

    bool operator==(const RatMPoly& o) const;
    bool operator!=(const RatMPoly& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    void check_compatible(const RatMPoly& o) const;
    void add_term(const Exponents& e, const mpq_class& c);

    std::vector<std::string> vars_;
    std::map<Exponents, mpq_class> terms_;
};

}  // namespace rlie

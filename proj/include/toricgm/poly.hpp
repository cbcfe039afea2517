#ifndef TORICGM_POLY_HPP
#define TORICGM_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace toricgm {

using Rational = mpq_class;

enum class VarKind : std::uint8_t { A = 0, K = 1, Sigma = 2 };

// A ring variable: a_i, k_ij or sigma_ij with i <= j enforced at construction.
// The packed id orders variables canonically: a_1..a_n, then k_ij (i,j) lex,
// then sigma_ij (i,j) lex.
class Var {
public:
    static Var a(int i);
    static Var k(int i, int j);
    static Var sigma(int i, int j);

    VarKind kind() const { return static_cast<VarKind>(id_ >> 20); }
    int i() const { return static_cast<int>((id_ >> 10) & 0x3ff); }
    int j() const { return static_cast<int>(id_ & 0x3ff); }
    std::uint32_t id() const { return id_; }
    bool is_diagonal() const { return kind() != VarKind::A && i() == j(); }

    // "a1", "k34", "s12"; indices >= 10 use "k_3_10".
    std::string name() const;

    auto operator<=>(const Var&) const = default;

private:
    Var(VarKind kind, int i, int j);
    std::uint32_t id_ = 0;
};

class Monomial {
public:
    using Factor = std::pair<Var, int>;

    Monomial() = default;
    explicit Monomial(Var v, int exponent = 1);
    // Factors in any order; exponents of repeated variables add up.
    explicit Monomial(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const;
    int exponent(Var v) const;
    bool is_one() const { return factors_.empty(); }

    bool divides(const Monomial& other) const;
    // Throws InvalidArgument when `divisor` does not divide *this.
    Monomial quotient(const Monomial& divisor) const;
    Monomial operator*(const Monomial& other) const;

    std::string to_string() const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;  // sorted by Var, exponents > 0
};

Monomial lcm(const Monomial& x, const Monomial& y);
Monomial gcd(const Monomial& x, const Monomial& y);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT: implicit by design of ring constants
    Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
    explicit Polynomial(const Monomial& m, const Rational& coeff = 1);
    explicit Polynomial(Var v) : Polynomial(Monomial(v)) {}

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;
    std::vector<Var> variables() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);
    Polynomial operator-() const;
    void add_term(const Monomial& m, const Rational& coeff);

    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator*(Polynomial x, const Rational& s) { return x *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial x) { return x *= s; }
    friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }

    // Coefficient-explicit text: "-1*k11*k22*k34 + 1*k12^2*k34".
    std::string to_string() const;

private:
    TermMap terms_;
};

Polynomial add(const Polynomial& x, const Polynomial& y);
Polynomial sub(const Polynomial& x, const Polynomial& y);
Polynomial mul(const Polynomial& x, const Polynomial& y);
Polynomial scalar_mul(const Polynomial& x, const Rational& s);
Polynomial pow(const Polynomial& x, int e);

// Parses the text format written by to_string and the usual hand-written
// variants ("s14*s25*s46 - s15*s24^2", "3/2*a1", "k_3_10"). Throws ParseError.
Polynomial parse_polynomial(std::string_view text);
Var parse_var(std::string_view token);

using Assignment = std::map<Var, Rational>;

// Throws MissingVariable when the assignment lacks a variable of p.
Rational evaluate(const Polynomial& p, const Assignment& values);

// Replaces each variable v of p that is a key of `images` by images.at(v).
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images);

// Weight order refined by graded reverse lexicographic order on the canonical
// variable sequence (the last variable in the sequence is the smallest).
class TermOrder {
public:
    using WeightFn = std::function<long long(const Var&)>;

    static TermOrder grevlex();
    static TermOrder weighted(WeightFn weight, std::string name = "weighted");
    // Weight 1 on every diagonal k_ii, 0 elsewhere.
    static TermOrder diagonal_count();

    long long weight(const Monomial& m) const;
    std::strong_ordering compare(const Monomial& x, const Monomial& y) const;
    bool less(const Monomial& x, const Monomial& y) const { return compare(x, y) < 0; }
    const std::string& name() const { return name_; }

private:
    TermOrder(WeightFn weight, std::string name) : weight_(std::move(weight)), name_(std::move(name)) {}
    WeightFn weight_;
    std::string name_;
};

struct Term {
    Monomial monomial;
    Rational coefficient;
};

// The order-maximal term. Throws ZeroPolynomial.
Term leading_term(const Polynomial& p, const TermOrder& order);

// {"coeff": "p/q", "vars": [["k",3,4], ...]}; powers repeat the variable.
nlohmann::ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Var& v);

}  // namespace toricgm

#endif  // TORICGM_POLY_HPP

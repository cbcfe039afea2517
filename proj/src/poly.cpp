#include "toricgm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "toricgm/error.hpp"

namespace toricgm {

// ---------------------------------------------------------------- Var

Var::Var(VarKind kind, int i, int j) {
    if (i < 1 || j < 0 || i > 1023 || j > 1023)
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    id_ = (static_cast<std::uint32_t>(kind) << 20) | (static_cast<std::uint32_t>(i) << 10) |
          static_cast<std::uint32_t>(j);
}

Var Var::a(int i) { return Var(VarKind::A, i, 0); }
Var Var::k(int i, int j) {
    if (j < 1) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    return Var(VarKind::K, std::min(i, j), std::max(i, j));
}
Var Var::sigma(int i, int j) {
    if (j < 1) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    return Var(VarKind::Sigma, std::min(i, j), std::max(i, j));
}

std::string Var::name() const {
    switch (kind()) {
        case VarKind::A: return "a" + std::to_string(i());
        case VarKind::K:
        case VarKind::Sigma: {
            const char prefix = kind() == VarKind::K ? 'k' : 's';
            if (i() < 10 && j() < 10) return std::string(1, prefix) + std::to_string(i()) + std::to_string(j());
            return std::string(1, prefix) + "_" + std::to_string(i()) + "_" + std::to_string(j());
        }
    }
    return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int exponent) {
    if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [v, e] : factors) {
        if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v)
            factors_.back().second += e;
        else
            factors_.emplace_back(v, e);
    }
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

int Monomial::exponent(Var v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Var& x) { return f.first < x; });
    return it != factors_.end() && it->first == v ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (it != other.factors_.end() && it->first < v) ++it;
        if (it == other.factors_.end() || it->first != v || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw Error(ErrorCode::InvalidArgument, "monomial does not divide");
    Monomial out;
    auto it = divisor.factors_.begin();
    for (const auto& [v, e] : factors_) {
        int d = 0;
        if (it != divisor.factors_.end() && it->first == v) d = (it++)->second;
        if (e > d) out.factors_.emplace_back(v, e - d);
    }
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto x = factors_.begin();
    auto y = other.factors_.begin();
    while (x != factors_.end() || y != other.factors_.end()) {
        if (y == other.factors_.end() || (x != factors_.end() && x->first < y->first)) {
            out.factors_.push_back(*x++);
        } else if (x == factors_.end() || y->first < x->first) {
            out.factors_.push_back(*y++);
        } else {
            out.factors_.emplace_back(x->first, x->second + y->second);
            ++x;
            ++y;
        }
    }
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty()) out += '*';
        out += v.name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

template <typename Pick>
Monomial merge_exponents(const Monomial& x, const Monomial& y, Pick pick) {
    std::vector<Monomial::Factor> out;
    auto a = x.factors().begin();
    auto b = y.factors().begin();
    while (a != x.factors().end() || b != y.factors().end()) {
        if (b == y.factors().end() || (a != x.factors().end() && a->first < b->first)) {
            out.emplace_back(a->first, pick(a->second, 0));
            ++a;
        } else if (a == x.factors().end() || b->first < a->first) {
            out.emplace_back(b->first, pick(0, b->second));
            ++b;
        } else {
            out.emplace_back(a->first, pick(a->second, b->second));
            ++a;
            ++b;
        }
    }
    return Monomial(std::move(out));
}

}  // namespace

Monomial lcm(const Monomial& x, const Monomial& y) {
    return merge_exponents(x, y, [](int p, int q) { return std::max(p, q); });
}

Monomial gcd(const Monomial& x, const Monomial& y) {
    return merge_exponents(x, y, [](int p, int q) { return std::min(p, q); });
}

// ---------------------------------------------------------------- Polynomial

// GMP leaves user-built fractions such as 2/2 uncanonicalized, and comparisons
// assume canonical form, so every coefficient is normalized on entry.
namespace {
Rational canonical(const Rational& q) {
    Rational out = q;
    out.canonicalize();
    return out;
}
}  // namespace

Polynomial::Polynomial(const Rational& constant) : Polynomial(Monomial(), constant) {}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
    Rational c = canonical(coeff);
    if (c != 0) terms_.emplace(m, std::move(c));
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> out;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) out.push_back(f.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    Rational c = canonical(coeff);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    const Rational s = canonical(scalar);
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    Polynomial out;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (m.is_one()) out += mag.get_str();
        else if (mag == 1) out += m.to_string();
        else out += mag.get_str() + "*" + m.to_string();
        first = false;
    }
    return out;
}

Polynomial add(const Polynomial& x, const Polynomial& y) { return x + y; }
Polynomial sub(const Polynomial& x, const Polynomial& y) { return x - y; }
Polynomial mul(const Polynomial& x, const Polynomial& y) { return x * y; }
Polynomial scalar_mul(const Polynomial& x, const Rational& s) { return x * s; }

Polynomial pow(const Polynomial& x, int e) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
    Polynomial result(1);
    Polynomial base = x;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------- parsing

Var parse_var(std::string_view token) {
    auto fail = [&] { return Error(ErrorCode::ParseError, "bad variable '" + std::string(token) + "'"); };
    if (token.size() < 2) throw fail();
    const char kind = token[0];
    std::string_view rest = token.substr(1);
    auto all_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    if (kind == 'a') {
        if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
        if (!all_digits(rest)) throw fail();
        return Var::a(std::stoi(std::string(rest)));
    }
    if (kind != 'k' && kind != 's') throw fail();
    int i = 0, j = 0;
    if (rest[0] == '_') {
        auto sep = rest.find('_', 1);
        if (sep == std::string_view::npos) throw fail();
        auto si = rest.substr(1, sep - 1);
        auto sj = rest.substr(sep + 1);
        if (!all_digits(si) || !all_digits(sj)) throw fail();
        i = std::stoi(std::string(si));
        j = std::stoi(std::string(sj));
    } else {
        if (rest.size() != 2 || !all_digits(rest)) throw fail();
        i = rest[0] - '0';
        j = rest[1] - '0';
    }
    return kind == 'k' ? Var::k(i, j) : Var::sigma(i, j);
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial out;
        skip_ws();
        if (at_end()) throw error("empty input");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            first = false;
            out += parse_term() * Rational(sign);
            skip_ws();
        }
        return out;
    }

private:
    Polynomial parse_term() {
        Rational coeff = 1;
        std::vector<Monomial::Factor> factors;
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (at_end()) throw error("unexpected end of input");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_rational();
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                std::size_t start = pos_;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
                Var v = parse_var(text_.substr(start, pos_ - start));
                int e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = static_cast<int>(parse_integer());
                }
                factors.emplace_back(v, e);
            } else {
                throw error("unexpected character");
            }
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) ++pos_;
        }
        return Polynomial(Monomial(std::move(factors)), coeff);
    }

    long parse_integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Rational parse_rational() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::size_t den = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (den == pos_) throw error("bad rational");
        }
        Rational r(std::string(text_.substr(start, pos_ - start)));
        if (r.get_den() == 0) throw error("zero denominator");
        r.canonicalize();
        return r;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    Error error(const std::string& msg) const {
        return Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- evaluation

Rational evaluate(const Polynomial& p, const Assignment& values) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end()) throw Error(ErrorCode::MissingVariable, v.name());
            const Rational base = canonical(it->second);
            Rational power;
            mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
            term *= power;
        }
        total += term;
    }
    return total;
}

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& images) {
    std::map<std::pair<Var, int>, Polynomial> powers;
    auto power_of = [&](Var v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        auto img = images.find(v);
        Polynomial base = img == images.end() ? Polynomial(v) : img->second;
        return powers.emplace(key, pow(base, e)).first->second;
    };
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        for (const auto& [v, e] : m.factors()) {
            term = term * power_of(v, e);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

// ---------------------------------------------------------------- term orders

TermOrder TermOrder::grevlex() {
    return TermOrder([](const Var&) { return 0LL; }, "grevlex");
}

TermOrder TermOrder::weighted(WeightFn weight, std::string name) { return TermOrder(std::move(weight), std::move(name)); }

TermOrder TermOrder::diagonal_count() {
    return TermOrder([](const Var& v) { return v.kind() == VarKind::K && v.i() == v.j() ? 1LL : 0LL; },
                     "diagonal-count");
}

long long TermOrder::weight(const Monomial& m) const {
    long long w = 0;
    for (const auto& [v, e] : m.factors()) w += weight_(v) * e;
    return w;
}

std::strong_ordering TermOrder::compare(const Monomial& x, const Monomial& y) const {
    if (auto c = weight(x) <=> weight(y); c != 0) return c;
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    // Reverse lexicographic: the last variable in the canonical sequence where
    // the exponents differ decides, and the smaller exponent wins.
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    auto ix = fx.rbegin();
    auto iy = fy.rbegin();
    while (ix != fx.rend() && iy != fy.rend()) {
        if (iy->first < ix->first) return std::strong_ordering::less;
        if (ix->first < iy->first) return std::strong_ordering::greater;
        if (ix->second != iy->second)
            return ix->second < iy->second ? std::strong_ordering::greater : std::strong_ordering::less;
        ++ix;
        ++iy;
    }
    if (ix != fx.rend()) return std::strong_ordering::less;
    if (iy != fy.rend()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Term leading_term(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

// ---------------------------------------------------------------- JSON

nlohmann::ordered_json to_json(const Var& v) {
    switch (v.kind()) {
        case VarKind::A: return nlohmann::ordered_json::array({"a", v.i()});
        case VarKind::K: return nlohmann::ordered_json::array({"k", v.i(), v.j()});
        case VarKind::Sigma: return nlohmann::ordered_json::array({"s", v.i(), v.j()});
    }
    return {};
}

nlohmann::ordered_json to_json(const Polynomial& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = c.get_str();
        auto vars = nlohmann::ordered_json::array();
        for (const auto& [v, e] : m.factors())
            for (int t = 0; t < e; ++t) vars.push_back(to_json(v));
        term["vars"] = std::move(vars);
        out.push_back(std::move(term));
    }
    return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial JSON must be an array");
    Polynomial out;
    for (const auto& term : j) {
        if (!term.contains("coeff") || !term.contains("vars"))
            throw Error(ErrorCode::ParseError, "term needs coeff and vars");
        Rational c(term.at("coeff").get<std::string>());
        c.canonicalize();
        std::vector<Monomial::Factor> factors;
        for (const auto& v : term.at("vars")) {
            const auto kind = v.at(0).get<std::string>();
            if (kind == "a")
                factors.emplace_back(Var::a(v.at(1).get<int>()), 1);
            else if (kind == "k")
                factors.emplace_back(Var::k(v.at(1).get<int>(), v.at(2).get<int>()), 1);
            else if (kind == "s")
                factors.emplace_back(Var::sigma(v.at(1).get<int>(), v.at(2).get<int>()), 1);
            else
                throw Error(ErrorCode::ParseError, "unknown variable kind '" + kind + "'");
        }
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

}  // namespace toricgm

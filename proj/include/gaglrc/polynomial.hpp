/*
   Copyright 2026 The gaglrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GAGLRC_POLYNOMIAL_HPP
#define GAGLRC_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finite_field.hpp"

namespace gaglrc {

/// Dense univariate polynomial over a Field, coefficients low degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(Field f) : field_(std::move(f)) {}
    Polynomial(Field f, std::vector<Symbol> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
        for (Symbol c : coeffs_)
            if (c >= field_.order()) throw std::invalid_argument("polynomial coefficient out of range");
        trim();
    }
    Polynomial(Field f, std::initializer_list<Symbol> coeffs) : Polynomial(std::move(f), std::vector<Symbol>(coeffs)) {}

    static Polynomial constant(Field f, Symbol c) { return Polynomial(std::move(f), std::vector<Symbol>{c}); }
    /// c * x^e
    static Polynomial monomial(Field f, std::size_t e, Symbol c = 1) {
        std::vector<Symbol> v(e + 1, 0);
        v[e] = c;
        return Polynomial(std::move(f), std::move(v));
    }

    const Field& field() const noexcept { return field_; }
    const std::vector<Symbol>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    Symbol leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    Symbol operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Symbol evaluate(Symbol a) const noexcept {
        Symbol r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_.add(field_.mul(r, a), coeffs_[i]);
        return r;
    }

    Polynomial& operator+=(const Polynomial& b) {
        check(b);
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], b.coeffs_[i]);
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& b) {
        check(b);
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], b.coeffs_[i]);
        trim();
        return *this;
    }
    Polynomial scaled(Symbol c) const {
        Polynomial r = *this;
        for (auto& v : r.coeffs_) v = field_.mul(v, c);
        r.trim();
        return r;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<Symbol> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        const Field& f = a.field_;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return Polynomial(f, std::move(c));
    }

    /// Quotient and remainder. @throws std::domain_error on division by zero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        const Field& f = a.field_;
        std::vector<Symbol> r = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        if (r.size() <= db) return {Polynomial(f), a};
        std::vector<Symbol> quo(r.size() - db, 0);
        const Symbol lead_inv = f.inv(b.coeffs_.back());
        for (std::size_t top = r.size(); top-- > db;) {
            const Symbol c = f.mul(r[top], lead_inv);
            if (c == 0) continue;
            const std::size_t shift = top - db;
            quo[shift] = c;
            for (std::size_t i = 0; i <= db; ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b.coeffs_[i]));
        }
        r.resize(db);
        return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(r))};
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) noexcept { return !(a == b); }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    void check(const Polynomial& b) const {
        if (field_ != b.field_) throw std::invalid_argument("polynomials over different fields");
    }

    Field field_;
    std::vector<Symbol> coeffs_;
};

inline Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return (a * b) % m; }

inline Polynomial pow_mod(Polynomial base, std::uint64_t e, const Polynomial& m) {
    Polynomial result = Polynomial::constant(m.field(), 1) % m;
    base = base % m;
    while (e) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.field().inv(a.leading()));
    return a;
}

/// Rabin's test: f of degree r >= 1 over GF(q) is irreducible iff
/// x^(q^r) = x mod f and gcd(x^(q^(r/d)) - x, f) = 1 for every prime d | r.
inline bool is_irreducible(const Polynomial& f) {
    const int r = f.degree();
    if (r < 1) return false;
    if (r == 1) return true;
    const Field& F = f.field();
    const Polynomial x = Polynomial::monomial(F, 1);
    std::vector<Polynomial> frob;  // frob[k] = x^(q^k) mod f
    frob.push_back(x % f);
    for (int k = 1; k <= r; ++k) frob.push_back(pow_mod(frob.back(), F.order(), f));
    if (frob[static_cast<std::size_t>(r)] != x % f) return false;
    int n = r;
    for (int d = 2; d <= n; ++d) {
        if (n % d) continue;
        while (n % d == 0) n /= d;
        if (gcd(f, frob[static_cast<std::size_t>(r / d)] - x).degree() != 0) return false;
    }
    return true;
}

/// Human-readable form, e.g. "2 + 2*x + x^2". Extension-field coefficients are parenthesised.
inline std::string to_pretty(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    const Field& F = f.field();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Symbol c = f.coeffs()[i];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        std::string cs = F.is_prime_field() ? F.render(c) : "(" + F.render(c) + ")";
        if (i == 0) {
            s += cs;
            continue;
        }
        if (c != 1) s += cs + "*";
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

/// Compact coefficient list, low degree first. Prime fields: "2,2,1".
/// Extension fields bracket each coefficient: "[1,0],[0,1],[1,0]".
inline std::string to_compact(const Polynomial& f) {
    const Field& F = f.field();
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s += ',';
        s += F.is_prime_field() ? F.render(f.coeffs()[i]) : "[" + F.render(f.coeffs()[i]) + "]";
    }
    return s.empty() ? "0" : s;
}

namespace detail {

inline std::string strip_spaces(std::string_view t) {
    std::string s;
    for (char c : t)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    return s;
}

inline Polynomial parse_pretty_prime(const Field& F, const std::string& s) {
    // Terms separated by '+': "c", "c*x", "cx", "x", "x^e", "c*x^e".
    std::vector<Symbol> coeffs;
    std::size_t pos = 0;
    auto bad = [&] { return std::invalid_argument("malformed polynomial '" + s + "'"); };
    while (pos <= s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) throw bad();
        std::uint64_t c = 1;
        std::size_t e = 0;
        std::size_t xpos = term.find('x');
        std::string cpart = xpos == std::string::npos ? term : term.substr(0, xpos);
        if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        if (!cpart.empty()) {
            if (!std::all_of(cpart.begin(), cpart.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                throw bad();
            c = std::stoull(cpart);
        } else if (xpos == std::string::npos) {
            throw bad();
        }
        if (xpos != std::string::npos) {
            std::string rest = term.substr(xpos + 1);
            if (rest.empty()) {
                e = 1;
            } else {
                if (rest[0] != '^' || rest.size() < 2 ||
                    !std::all_of(rest.begin() + 1, rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                    throw bad();
                e = std::stoul(rest.substr(1));
            }
        }
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] = F.add(coeffs[e], static_cast<Symbol>(c % F.characteristic()));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Polynomial(F, std::move(coeffs));
}

}  // namespace detail

/// Parses either the compact coefficient list or, over prime fields, the pretty form.
inline Polynomial parse_polynomial(const Field& F, std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    if (s.find('x') != std::string::npos) {
        if (!F.is_prime_field()) throw std::invalid_argument("pretty polynomial form is only accepted over prime fields");
        return detail::parse_pretty_prime(F, s);
    }
    std::vector<Symbol> coeffs;
    if (s.front() == '[') {
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '[') throw std::invalid_argument("malformed polynomial '" + s + "'");
            const std::size_t close = s.find(']', pos);
            if (close == std::string::npos) throw std::invalid_argument("malformed polynomial '" + s + "'");
            coeffs.push_back(F.parse(s.substr(pos + 1, close - pos - 1)));
            pos = close + 1;
            if (pos < s.size()) {
                if (s[pos] != ',') throw std::invalid_argument("malformed polynomial '" + s + "'");
                ++pos;
            }
        }
    } else {
        if (!F.is_prime_field()) throw std::invalid_argument("extension-field coefficients must be bracketed");
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = s.find(',', pos);
            coeffs.push_back(F.parse(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Polynomial(F, std::move(coeffs));
}

}  // namespace gaglrc

#endif  // GAGLRC_POLYNOMIAL_HPP

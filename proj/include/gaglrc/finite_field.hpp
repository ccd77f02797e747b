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

/**
 * @file finite_field.hpp
 * @brief Runtime finite fields GF(p^m) with q <= 2^16.
 *
 * Elements are stored as a single integer index: the coefficient vector
 * (c_0, ..., c_{m-1}) of the polynomial-basis representation read as a base-p
 * number with c_0 least significant. Index 0 is zero, index 1 is one, index p
 * is the class of x. Hot loops (matrix algebra, distance search) work on these
 * raw symbols through Field::add / Field::mul; the Element wrapper gives a
 * checked value type for everything else.
 *
 * The modulus of GF(p^m) is the least monic irreducible of degree m, with
 * coefficient vectors compared lexicographically starting from c_0.
 */

#ifndef GAGLRC_FINITE_FIELD_HPP
#define GAGLRC_FINITE_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaglrc {

using Symbol = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Writes q = p^m; returns false if q is not a prime power.
inline bool prime_power_decompose(std::uint64_t q, std::uint32_t& p, std::uint32_t& m) noexcept {
    if (q < 2) return false;
    std::uint64_t d = 2;
    while (q % d != 0) ++d;
    std::uint32_t e = 0;
    while (q % d == 0) {
        q /= d;
        ++e;
    }
    if (q != 1) return false;
    p = static_cast<std::uint32_t>(d);
    m = e;
    return true;
}

namespace detail {

// Dense polynomial arithmetic over GF(p) on coefficient vectors, low degree
// first. Only used to find and apply the extension modulus.
using PrimePoly = std::vector<std::uint32_t>;

inline void prime_poly_trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t prime_inv(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

inline PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& f, std::uint32_t p) {
    prime_poly_trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = prime_inv(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
        prime_poly_trim(a);
    }
    return a;
}

inline PrimePoly prime_poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return prime_poly_mod(std::move(c), f, p);
}

inline PrimePoly prime_poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
    prime_poly_trim(a);
    prime_poly_trim(b);
    while (!b.empty()) {
        PrimePoly r = prime_poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f by repeated p-th powering.
inline PrimePoly prime_poly_frobenius_x(const PrimePoly& f, std::uint32_t p, std::uint32_t k) {
    PrimePoly acc = prime_poly_mod({0, 1}, f, p);
    for (std::uint32_t step = 0; step < k; ++step) {
        PrimePoly result{1};
        PrimePoly base = acc;
        std::uint32_t e = p;
        while (e) {
            if (e & 1) result = prime_poly_mulmod(result, base, f, p);
            base = prime_poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        acc = std::move(result);
    }
    return acc;
}

// Rabin's irreducibility test for a monic f of degree m over GF(p).
inline bool prime_poly_is_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m == 0) return false;
    if (m == 1) return true;
    auto x_pow_minus_x = [&](std::uint32_t k) {
        PrimePoly t = prime_poly_frobenius_x(f, p, k);
        t.resize(std::max<std::size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        prime_poly_trim(t);
        return t;
    };
    if (!x_pow_minus_x(m).empty()) return false;
    std::uint32_t n = m;
    for (std::uint32_t d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        const PrimePoly g = prime_poly_gcd(f, x_pow_minus_x(m / d), p);
        if (g.size() != 1) return false;
    }
    return true;
}

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // monic, degree m, low first; empty for m == 1
    std::vector<std::uint32_t> exp;      // exp[i] = g^i, length 2(q-1)
    std::vector<std::uint32_t> log;      // log[a] for a != 0
    std::vector<std::uint32_t> add;      // q*q table when q is small, else empty
    std::vector<std::uint32_t> neg;
};

inline std::uint32_t digit_add(const FieldData& f, std::uint32_t a, std::uint32_t b) {
    if (f.p == 2) return a ^ b;
    if (f.m == 1) return (a + b) % f.p;
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < f.m; ++i) {
        r += ((a % f.p + b % f.p) % f.p) * scale;
        a /= f.p;
        b /= f.p;
        scale *= f.p;
    }
    return r;
}

inline std::vector<std::uint32_t> to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

inline std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

inline std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t m) {
    // Enumerate (c_0, ..., c_{m-1}) in lexicographic order, c_0 most significant.
    std::vector<std::uint32_t> c(m, 0);
    while (true) {
        PrimePoly f(c.begin(), c.end());
        f.push_back(1);
        if (prime_poly_is_irreducible(f, p)) return f;
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

inline std::shared_ptr<const FieldData> build_field(std::uint32_t p, std::uint32_t m) {
    auto f = std::make_shared<FieldData>();
    f->p = p;
    f->m = m;
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    f->q = q;
    if (m > 1) f->modulus = least_irreducible(p, m);

    auto mul_slow = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (m == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
        PrimePoly pa = to_digits(a, p, m), pb = to_digits(b, p, m);
        prime_poly_trim(pa);
        prime_poly_trim(pb);
        PrimePoly r = prime_poly_mulmod(pa, pb, f->modulus, p);
        r.resize(m, 0);
        return from_digits(r, p);
    };

    // Find a primitive element: order exactly q-1.
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t n = q - 1;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d) continue;
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
        if (n > 1) prime_factors.push_back(n);
    }
    auto pow_slow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t cand = 1; cand < q && gen == 0; ++cand) {
        if (q == 2) {
            gen = 1;
            break;
        }
        bool ok = true;
        for (std::uint32_t pf : prime_factors)
            if (pow_slow(cand, (q - 1) / pf) == 1) {
                ok = false;
                break;
            }
        if (ok) gen = cand;
    }

    f->exp.assign(2 * (q - 1), 0);
    f->log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        f->exp[i] = x;
        f->exp[i + q - 1] = x;
        f->log[x] = i;
        x = mul_slow(x, gen);
    }

    f->neg.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        auto d = to_digits(a, p, m);
        for (auto& c : d) c = (p - c) % p;
        f->neg[a] = from_digits(d, p);
    }
    if (q <= 256) {
        f->add.resize(static_cast<std::size_t>(q) * q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) f->add[a * q + b] = digit_add(*f, a, b);
    }
    return f;
}

}  // namespace detail

class Element;

/**
 * @brief Descriptor of GF(p^m); cheap to copy, immutable.
 *
 * Two Field values compare equal iff they have the same (p, m); the modulus is
 * a deterministic function of (p, m) and the underlying tables are shared.
 */
class Field {
   public:
    Field() = default;

    /// @throws std::invalid_argument if p is not prime, m < 1, or p^m > 2^16.
    static Field create(std::uint32_t p, std::uint32_t m) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxFieldOrder)
                throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                            " exceeds the supported maximum 2^16");
        }
        static std::mutex mutex;
        static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[{p, m}];
        if (!slot) slot = detail::build_field(p, m);
        return Field(slot);
    }

    /// GF(q) for a prime power q.
    static Field of_order(std::uint64_t q) {
        std::uint32_t p = 0, m = 0;
        if (!prime_power_decompose(q, p, m))
            throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
        return create(p, m);
    }

    bool valid() const noexcept { return data_ != nullptr; }
    std::uint32_t characteristic() const noexcept { return data_->p; }
    std::uint32_t degree() const noexcept { return data_->m; }
    std::uint32_t order() const noexcept { return data_->q; }
    bool is_prime_field() const noexcept { return data_->m == 1; }
    /// Monic modulus, low degree first; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

    /// The prime subfield GF(p).
    Field prime_field() const { return create(data_->p, 1); }

    // Raw symbol arithmetic; arguments must be < order().
    Symbol add(Symbol a, Symbol b) const noexcept {
        if (!data_->add.empty()) return data_->add[a * data_->q + b];
        return detail::digit_add(*data_, a, b);
    }
    Symbol neg(Symbol a) const noexcept { return data_->neg[a]; }
    Symbol sub(Symbol a, Symbol b) const noexcept { return add(a, data_->neg[b]); }
    Symbol mul(Symbol a, Symbol b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return data_->exp[data_->log[a] + data_->log[b]];
    }
    /// @throws std::domain_error for a == 0.
    Symbol inv(Symbol a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return data_->exp[(data_->q - 1 - data_->log[a]) % (data_->q - 1)];
    }
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return data_->exp[(static_cast<std::uint64_t>(data_->log[a]) * (e % (data_->q - 1))) % (data_->q - 1)];
    }

    /// Coefficients (c_0, ..., c_{m-1}) over GF(p).
    std::vector<std::uint32_t> coefficients(Symbol a) const { return detail::to_digits(a, data_->p, data_->m); }
    Symbol from_coefficients(const std::vector<std::uint32_t>& c) const {
        if (c.size() != data_->m) throw std::invalid_argument("coefficient vector has wrong length");
        for (auto v : c)
            if (v >= data_->p) throw std::invalid_argument("coefficient out of range");
        return detail::from_digits(c, data_->p);
    }

    /// Element rendering: "c" for prime fields, "c0,c1,...,c_{m-1}" otherwise.
    std::string render(Symbol a) const {
        if (is_prime_field()) return std::to_string(a);
        std::string s;
        auto c = coefficients(a);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        return s;
    }

    /// Inverse of render(); a lone integer is also accepted for extension fields as a raw index.
    Symbol parse(std::string_view text) const {
        std::vector<std::uint32_t> parts;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(cur, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != cur.size()) throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
            parts.push_back(static_cast<std::uint32_t>(v));
            cur.clear();
        };
        for (char ch : text) {
            if (ch == ',') {
                flush();
            } else if (ch != ' ') {
                cur += ch;
            }
        }
        flush();
        if (parts.size() == 1) {
            if (is_prime_field() ? parts[0] >= data_->p : parts[0] >= data_->q)
                throw std::invalid_argument("field element '" + std::string(text) + "' out of range");
            return parts[0];
        }
        return from_coefficients(parts);
    }

    /// All q elements in index order: zero first, then by coefficient vector
    /// read with the highest-degree coefficient most significant.
    std::vector<Symbol> enumerate() const {
        std::vector<Symbol> out(data_->q);
        for (std::uint32_t i = 0; i < data_->q; ++i) out[i] = i;
        return out;
    }

    std::vector<Element> elements() const;
    Element element(Symbol s) const;
    Element zero() const;
    Element one() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->p == b.data_->p && a.data_->m == b.data_->m;
    }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

    std::string name() const {
        return is_prime_field() ? "GF(" + std::to_string(data_->p) + ")"
                                : "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->m) + ")";
    }

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

inline Field field_create(std::uint32_t p, std::uint32_t m) { return Field::create(p, m); }

/// A checked element of some Field. Arithmetic between different fields throws.
class Element {
   public:
    Element() = default;
    Element(Field f, Symbol v) : field_(std::move(f)), value_(v) {
        if (!field_.valid() || v >= field_.order()) throw std::invalid_argument("element index out of range");
    }

    const Field& field() const noexcept { return field_; }
    Symbol value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_.coefficients(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    Element operator+(const Element& b) const { return {same(b), field_.add(value_, b.value_)}; }
    Element operator-(const Element& b) const { return {same(b), field_.sub(value_, b.value_)}; }
    Element operator*(const Element& b) const { return {same(b), field_.mul(value_, b.value_)}; }
    Element operator/(const Element& b) const { return {same(b), field_.div(value_, b.value_)}; }
    Element operator-() const { return {field_, field_.neg(value_)}; }
    Element inv() const { return {field_, field_.inv(value_)}; }
    Element pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

    friend bool operator==(const Element& a, const Element& b) noexcept {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Element& a, const Element& b) noexcept { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.field_.render(e.value_); }

   private:
    const Field& same(const Element& b) const {
        if (field_ != b.field_) throw std::invalid_argument("arithmetic on elements of different fields");
        return field_;
    }
    Field field_;
    Symbol value_ = 0;
};

inline Element Field::element(Symbol s) const { return Element(*this, s); }
inline Element Field::zero() const { return Element(*this, 0); }
inline Element Field::one() const { return Element(*this, 1); }
inline std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(order());
    for (Symbol s : enumerate()) out.emplace_back(*this, s);
    return out;
}

}  // namespace gaglrc

#endif  // GAGLRC_FINITE_FIELD_HPP

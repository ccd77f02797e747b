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
 * @file bounds.hpp
 * @brief Parameter bounds for locally recoverable codes.
 *
 * - Singleton-like bound d <= n - k - ceil(k/r) + 2 and the rate cap r/(r+1).
 * - Gilbert-Varshamov-type rate bound for locality r, minimised numerically over s.
 * - Drinfeld-Vladut bound of order r, (q^(r/2) - 1)/r.
 * - Garcia-Stichtenoth tower genus / rational-place estimates.
 * - Asymptotic rate floors of the concatenated (outer AG, inner parity) and
 *   generalized-AG (degree-r places, inner parity) families.
 *
 * Closed forms are exact rationals wherever the formula is rational.
 */

#ifndef GAGLRC_BOUNDS_HPP
#define GAGLRC_BOUNDS_HPP

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finite_field.hpp"

namespace gaglrc {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "a", "a/b" or a terminating decimal such as "0.125" exactly.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed rational '" + text + "'"); };
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        if (s.empty()) throw bad();
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != s.size()) throw bad();
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
        const bool negative = !ip.empty() && ip[0] == '-';
        if (ip.empty() || ip == "-") ip += "0";
        if (fp.empty() || fp.size() > 15) throw bad();
        for (char c : fp)
            if (c < '0' || c > '9') throw bad();
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        const std::int64_t whole = parse_int(ip);
        const std::int64_t frac = parse_int(fp);
        return Rational(whole) + Rational(negative ? -frac : frac, scale);
    }
    return Rational(parse_int(text));
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (base != 0 && std::abs(r) > (std::int64_t{1} << 62) / std::abs(base))
            throw std::overflow_error("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

inline void require_prime_power(std::int64_t q) {
    std::uint32_t p = 0, m = 0;
    if (q < 2 || !prime_power_decompose(static_cast<std::uint64_t>(q), p, m))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

// ---------------------------------------------------------------- Singleton

/// n - k - ceil(k/r) + 2
inline std::int64_t singleton_lrc(std::int64_t n, std::int64_t k, std::int64_t r) {
    if (k < 1 || k > n) throw std::invalid_argument("Singleton-like bound needs 1 <= k <= n");
    if (r < 1) throw std::invalid_argument("locality must be at least 1");
    return n - k - (k + r - 1) / r + 2;
}

/// Distance from the Singleton-like bound; 0 means optimal.
inline std::int64_t lrc_defect(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r) {
    const std::int64_t dmax = singleton_lrc(n, k, r);
    if (d > dmax)
        throw std::invalid_argument("d = " + std::to_string(d) + " exceeds the Singleton-like bound " +
                                    std::to_string(dmax));
    if (d < 1) throw std::invalid_argument("minimum distance must be positive");
    return dmax - d;
}

inline Rational lrc_rate_cap(std::int64_t r) {
    if (r < 1) throw std::invalid_argument("locality must be at least 1");
    return Rational(r, r + 1);
}

// ---------------------------------------------------------- GV-type bound

/// (1/(r+1)) log_q((1+(q-1)s)^(r+1) + (q-1)(1-s)^(r+1)) - delta log_q s; the delta term is 0 when delta == 0.
inline double gv_objective(double q, double r, double delta, double s) {
    const double inner = std::pow(1.0 + (q - 1.0) * s, r + 1.0) + (q - 1.0) * std::pow(1.0 - s, r + 1.0);
    const double lq = std::log(q);
    double v = std::log(inner) / ((r + 1.0) * lq);
    if (delta != 0.0) v -= delta * std::log(s) / lq;
    return v;
}

struct GvResult {
    double value = 0;      // reported bound (clamped to >= 0)
    double raw = 0;        // 1 - min objective, before clamping
    double argmin_s = 0;   // minimising s (0 for the delta = 0 limit)
    bool clamped = false;  // raw < 0
};

inline constexpr double kGvLowerS = 1e-9;

/**
 * @brief Rate floor R_q(r, delta) >= 1 - min_{0 <= s <= 1} objective(s).
 *
 * delta == 0 uses the s -> 0 limit (objective = 1/(r+1)); the inner term is
 * convex with zero slope at 0, so that limit is the minimum. Otherwise a
 * 10^4-point grid on (0, 1] brackets the minimum and golden-section search
 * refines it to 1e-9 in s.
 */
inline GvResult gv_lrc_rate(std::int64_t q, std::int64_t r, double delta) {
    require_prime_power(q);
    if (r < 1) throw std::invalid_argument("locality must be at least 1");
    if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("relative distance must lie in [0, 1]");
    const double dq = static_cast<double>(q), dr = static_cast<double>(r);
    GvResult res;
    if (delta == 0.0) {
        res.argmin_s = 0.0;
        res.raw = 1.0 - gv_objective(dq, dr, 0.0, 0.0);
    } else {
        auto f = [&](double s) { return gv_objective(dq, dr, delta, s); };
        constexpr int kGrid = 10000;
        int best_i = 1;
        double best = f(1.0 / kGrid);
        for (int i = 2; i <= kGrid; ++i) {
            const double v = f(static_cast<double>(i) / kGrid);
            if (v < best) {
                best = v;
                best_i = i;
            }
        }
        double lo = std::max(kGvLowerS, static_cast<double>(best_i - 1) / kGrid);
        double hi = std::min(1.0, static_cast<double>(best_i + 1) / kGrid);
        const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = hi - invphi * (hi - lo), b = lo + invphi * (hi - lo);
        double fa = f(a), fb = f(b);
        while (hi - lo > 1e-9) {
            if (fa < fb) {
                hi = b;
                b = a;
                fb = fa;
                a = hi - invphi * (hi - lo);
                fa = f(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + invphi * (hi - lo);
                fb = f(b);
            }
        }
        double s = 0.5 * (lo + hi);
        double v = f(s);
        if (best < v) {
            v = best;
            s = static_cast<double>(best_i) / kGrid;
        }
        res.argmin_s = s;
        res.raw = 1.0 - v;
    }
    res.clamped = res.raw < 0.0;
    res.value = res.clamped ? 0.0 : res.raw;
    return res;
}

// ------------------------------------------------------- Drinfeld-Vladut

struct DvResult {
    double value = 0;
    std::optional<Rational> exact;  // present when q^(r/2) is an integer
};

/// (q^(r/2) - 1)/r
inline DvResult dv_order_r(std::int64_t q, std::int64_t r) {
    require_prime_power(q);
    if (r < 1) throw std::invalid_argument("place degree must be at least 1");
    DvResult out;
    std::optional<std::int64_t> root;  // q^(r/2) when integral
    if (r % 2 == 0) {
        root = checked_pow(q, r / 2);
    } else {
        const auto sq = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
        if (sq * sq == q) root = checked_pow(sq, r);
    }
    if (root) {
        out.exact = Rational(*root - 1, r);
        out.value = to_double(*out.exact);
    } else {
        out.value = (std::pow(static_cast<double>(q), static_cast<double>(r) / 2.0) - 1.0) / static_cast<double>(r);
    }
    return out;
}

// ------------------------------------------------- Garcia-Stichtenoth tower

struct GsTowerParams {
    std::int64_t genus_upper = 0;  // q^l + q^(l-1)
    std::int64_t b1_lower = 0;     // (q^2 - 1) q^(l-1) + 2q
    Rational ratio_lower;          // q - 1
};

inline GsTowerParams gs_tower_params(std::int64_t q, std::int64_t level) {
    require_prime_power(q);
    if (level < 3) throw std::invalid_argument("tower estimates need level >= 3");
    GsTowerParams p;
    const std::int64_t ql1 = checked_pow(q, level - 1);
    p.genus_upper = ql1 * q + ql1;
    p.b1_lower = (q * q - 1) * ql1 + 2 * q;
    p.ratio_lower = Rational(q - 1);
    if (Rational(p.b1_lower, p.genus_upper) < p.ratio_lower)
        throw std::logic_error("tower place/genus ratio estimate violated");
    return p;
}

// -------------------------------------------------------- Asymptotic floors

struct AsymptoticQuery {
    std::int64_t q = 0;
    std::int64_t r = 2;
    Rational delta{0};
    std::optional<std::int64_t> level;  // tower level for the descended-tower ratio
    std::optional<Rational> b;          // B_1/g lower bound for a generic outer sequence
    std::optional<Rational> b_r;        // B_r/(r g) lower bound for a generic degree-r sequence
};

struct RateFloor {
    std::string name;
    bool applicable = false;
    std::string reason;  // why not applicable
    Rational value{0};
    std::vector<std::string> flags;
};

struct AsymptoticReport {
    std::vector<RateFloor> floors;
    std::optional<Rational> b2_at_level;  // (q-1)/2 - q^2/(q^l + q^(l-1))
    Rational b2_floor{0};                 // (q-1)/2 - 1/q, valid for l >= 3

    const RateFloor* find(const std::string& name) const {
        for (const auto& f : floors)
            if (f.name == name) return &f;
        return nullptr;
    }
};

/// r/(r+1) (1 - (r+1)/2 delta - 1/x)
inline Rational concatenated_floor(std::int64_t r, const Rational& delta, const Rational& x) {
    return Rational(r, r + 1) * (Rational(1) - Rational(r + 1, 2) * delta - Rational(1) / x);
}

/// (q-1)/2 - q^2/(q^l + q^(l-1))
inline Rational descended_tower_ratio(std::int64_t q, std::int64_t level) {
    if (level < 1) throw std::invalid_argument("tower level must be positive");
    const std::int64_t ql1 = checked_pow(q, level - 1);
    return Rational(q - 1, 2) - Rational(q * q, ql1 * q + ql1);
}

inline Rational descended_tower_floor(std::int64_t q) { return Rational(q - 1, 2) - Rational(1, q); }

/// 2/3 (1 - q/(q^2 - q - 2)) - delta, the locality-2 floor from the descended tower.
inline Rational locality2_floor(std::int64_t q, const Rational& delta) {
    return Rational(2, 3) * (Rational(1) - Rational(q, q * q - q - 2)) - delta;
}

inline AsymptoticReport asymptotic_rates(const AsymptoticQuery& query) {
    const std::int64_t q = query.q, r = query.r;
    require_prime_power(q);
    if (r < 1) throw std::invalid_argument("locality must be at least 1");
    if (query.delta < Rational(0) || query.delta > Rational(1))
        throw std::invalid_argument("relative distance must lie in [0, 1]");
    AsymptoticReport rep;
    auto finish = [&](RateFloor f) {
        if (f.applicable && f.value < Rational(0)) f.flags.push_back("vacuous");
        rep.floors.push_back(std::move(f));
    };

    {
        RateFloor f;
        f.name = "construction1_gs_tower";
        const std::int64_t qr = checked_pow(q, r);
        const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(qr))));
        if (root * root != qr) {
            f.reason = "q^r is not a square";
        } else if (q == 2 && r == 2) {
            f.reason = "excluded case q = r = 2";
        } else {
            f.applicable = true;
            f.value = concatenated_floor(r, query.delta, Rational(root - 1));
            if (q == 4 && r == 2)
                f.flags.push_back("quoted_constant_mismatch: closed form gives 4/9 - delta, not the 1/3 - delta sometimes quoted");
        }
        finish(std::move(f));
    }
    {
        RateFloor f;
        f.name = "construction1_generic";
        if (!query.b) {
            f.reason = "needs b";
        } else if (*query.b < Rational(2)) {
            f.reason = "needs b >= 2";
        } else {
            f.applicable = true;
            f.value = concatenated_floor(r, query.delta, *query.b);
        }
        finish(std::move(f));
    }
    {
        RateFloor f;
        f.name = "construction2_generic";
        if (!query.b_r) {
            f.reason = "needs b_r";
        } else if (Rational(r) * *query.b_r < Rational(2)) {
            f.reason = "needs r * b_r >= 2";
        } else {
            f.applicable = true;
            f.value = concatenated_floor(r, query.delta, Rational(r) * *query.b_r);
        }
        finish(std::move(f));
    }
    {
        RateFloor f;
        f.name = "construction2_locality2";
        if (q <= 3) {
            f.reason = "needs q > 3";
        } else {
            f.applicable = true;
            f.value = locality2_floor(q, query.delta);
            if (r != 2) f.flags.push_back("locality_fixed_at_2");
        }
        finish(std::move(f));
    }
    if (query.level) rep.b2_at_level = descended_tower_ratio(q, *query.level);
    rep.b2_floor = descended_tower_floor(q);
    return rep;
}

}  // namespace gaglrc

#endif  // GAGLRC_BOUNDS_HPP

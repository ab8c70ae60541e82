#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace diagalg {

using Label = std::string;

/// Indeterminate kinds, declared in canonical print order.
enum class ParamKind : std::uint8_t {
    Beta,
    Kappa,
    AlphaUp,
    DeltaDown,
    Gamma,
    GhostAlpha,
    GhostDelta,
    GhostGamma12,
    GhostGamma3,
    SbAlpha,
    SbDelta,
};

struct ParamId {
    ParamKind kind = ParamKind::Beta;
    Label a;
    Label b;
    int k = 0;

    auto operator<=>(const ParamId&) const = default;
    bool operator==(const ParamId&) const = default;

    static ParamId beta() { return {ParamKind::Beta, {}, {}, 0}; }
    static ParamId kappa() { return {ParamKind::Kappa, {}, {}, 0}; }
    static ParamId alpha(Label a, Label b) { return {ParamKind::AlphaUp, std::move(a), std::move(b), 0}; }
    static ParamId delta(Label a, Label b) { return {ParamKind::DeltaDown, std::move(a), std::move(b), 0}; }
    static ParamId gamma(Label a, Label b) { return {ParamKind::Gamma, std::move(a), std::move(b), 0}; }
    static ParamId ghost_alpha(int k) { return {ParamKind::GhostAlpha, {}, {}, k}; }
    static ParamId ghost_delta(int k) { return {ParamKind::GhostDelta, {}, {}, k}; }
    static ParamId ghost_gamma12() { return {ParamKind::GhostGamma12, {}, {}, 0}; }
    static ParamId ghost_gamma3() { return {ParamKind::GhostGamma3, {}, {}, 0}; }
    static ParamId sb_alpha(int k) { return {ParamKind::SbAlpha, {}, {}, k}; }
    static ParamId sb_delta(int k) { return {ParamKind::SbDelta, {}, {}, k}; }

    std::string str() const {
        switch (kind) {
        case ParamKind::Beta: return "b";
        case ParamKind::Kappa: return "k";
        case ParamKind::AlphaUp: return "aup[" + a + "," + b + "]";
        case ParamKind::DeltaDown: return "ddn[" + a + "," + b + "]";
        case ParamKind::Gamma: return "g[" + a + "," + b + "]";
        case ParamKind::GhostAlpha: return "a" + std::to_string(k);
        case ParamKind::GhostDelta: return "d" + std::to_string(k);
        case ParamKind::GhostGamma12: return "g12";
        case ParamKind::GhostGamma3: return "g3";
        case ParamKind::SbAlpha: return "sa" + std::to_string(k);
        case ParamKind::SbDelta: return "sd" + std::to_string(k);
        }
        return "?";
    }
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const ParamId& p, unsigned e = 1) {
        if (e) exps_[p] = e;
    }

    const std::map<ParamId, unsigned>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    unsigned degree() const {
        unsigned d = 0;
        for (auto& [p, e] : exps_) d += e;
        return d;
    }
    unsigned exponent(const ParamId& p) const {
        auto it = exps_.find(p);
        return it == exps_.end() ? 0 : it->second;
    }

    Monomial& operator*=(const Monomial& o) {
        for (auto& [p, e] : o.exps_) exps_[p] += e;
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    Monomial& operator*=(const ParamId& p) {
        ++exps_[p];
        return *this;
    }

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    /// `1` for the identity, else factors joined by `*` with `^e` for e > 1.
    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (auto& [p, e] : exps_) {
            if (!s.empty()) s += '*';
            s += p.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::map<ParamId, unsigned> exps_;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) { return a * b; }

class UnmappedParameter : public std::runtime_error {
public:
    explicit UnmappedParameter(const ParamId& p)
        : std::runtime_error("unmapped parameter " + p.str()), param(p) {}
    ParamId param;
};

class Polynomial {
public:
    using Coeff = std::int64_t;

    Polynomial() = default;
    Polynomial(Coeff c) {  // NOLINT(google-explicit-constructor)
        if (c) terms_[Monomial{}] = c;
    }
    Polynomial(const Monomial& m, Coeff c = 1) {  // NOLINT(google-explicit-constructor)
        if (c) terms_[m] = c;
    }

    const std::map<Monomial, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second == 1; }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, checked_neg(c));
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Coeff mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                s += std::to_string(mag);
            } else {
                if (mag != 1) s += std::to_string(mag) + "*";
                s += m.str();
            }
        }
        return s;
    }

private:
    static Coeff checked_mul(Coeff a, Coeff b) {
        Coeff r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
        return r;
    }
    static Coeff checked_neg(Coeff a) {
        if (a == INT64_MIN) throw std::overflow_error("polynomial coefficient overflow");
        return -a;
    }
    void add_term(const Monomial& m, Coeff c) {
        if (!c) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (fresh) return;
        if (__builtin_add_overflow(it->second, c, &it->second))
            throw std::overflow_error("polynomial coefficient overflow");
        if (!it->second) terms_.erase(it);
    }

    std::map<Monomial, Coeff> terms_;
};

enum class ArithOp { Add, Mul };

inline Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
    return op == ArithOp::Add ? a + b : a * b;
}

using ParamMap = std::map<ParamId, Monomial>;

inline Monomial specialize(const Monomial& m, const ParamMap& map) {
    Monomial r;
    for (auto& [p, e] : m.exponents()) {
        auto it = map.find(p);
        if (it == map.end()) throw UnmappedParameter(p);
        for (unsigned i = 0; i < e; ++i) r *= it->second;
    }
    return r;
}

inline Polynomial specialize(const Polynomial& p, const ParamMap& map) {
    Polynomial r;
    for (auto& [m, c] : p.terms()) r += Polynomial(specialize(m, map), c);
    return r;
}

/// Applies `f` to every indeterminate; used for the reflection symmetries.
inline Monomial map_params(const Monomial& m, const std::function<ParamId(const ParamId&)>& f) {
    Monomial r;
    for (auto& [p, e] : m.exponents()) r *= Monomial(f(p), e);
    return r;
}

}  // namespace diagalg

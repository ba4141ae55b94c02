#include "bicoeff/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace bicoeff {

namespace {
constexpr std::array<std::string_view, kSymbolCount> kNames = {"a2", "a3", "a4", "p1",
                                                               "p2", "q1", "q2"};
}

std::string_view symbol_name(Symbol s) { return kNames[static_cast<std::size_t>(s)]; }

MultiPoly::MultiPoly(Rational constant) {
    if (constant != 0) terms_.emplace(ExpVec{}, std::move(constant));
}

MultiPoly MultiPoly::variable(Symbol s, unsigned power) {
    MultiPoly p;
    if (power == 0) return MultiPoly(Rational(1));
    ExpVec e{};
    e[static_cast<std::size_t>(s)] = power;
    p.terms_.emplace(e, Rational(1));
    return p;
}

void MultiPoly::add_term(const ExpVec& exps, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    MultiPoly r(*this);
    r += other;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    MultiPoly r(*this);
    r -= other;
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    MultiPoly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            ExpVec e;
            for (std::size_t i = 0; i < kSymbolCount; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly MultiPoly::scaled(const Rational& factor) const {
    MultiPoly r;
    if (factor == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * factor);
    return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly r(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) r *= *this;
    return r;
}

MultiPoly MultiPoly::substituted(const std::map<Symbol, MultiPoly>& bindings) const {
    MultiPoly result;
    for (const auto& [e, c] : terms_) {
        MultiPoly term(c);
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (e[i] == 0) continue;
            const Symbol s = static_cast<Symbol>(i);
            auto it = bindings.find(s);
            if (it != bindings.end())
                term *= it->second.pow(e[i]);
            else
                term *= MultiPoly::variable(s, e[i]);
        }
        result += term;
    }
    return result;
}

Rational MultiPoly::evaluate(const std::map<Symbol, Rational>& values) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(static_cast<Symbol>(i));
            if (it == values.end())
                throw std::domain_error("evaluate: symbol '" +
                                        std::string(symbol_name(static_cast<Symbol>(i))) +
                                        "' is unbound");
            for (unsigned k = 0; k < e[i]; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::complex<double> MultiPoly::evaluate_complex(
    const std::map<Symbol, std::complex<double>>& values) const {
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = to_double(c);
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(static_cast<Symbol>(i));
            if (it == values.end())
                throw std::domain_error("evaluate_complex: symbol '" +
                                        std::string(symbol_name(static_cast<Symbol>(i))) +
                                        "' is unbound");
            for (unsigned k = 0; k < e[i]; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

unsigned MultiPoly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (auto x : e) d += x;
        if (d > deg) deg = d;
    }
    return deg;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        const Rational mag = c < 0 ? Rational(-c) : c;
        bool printed_coeff = false;
        bool has_vars = false;
        for (auto x : e)
            if (x > 0) has_vars = true;
        if (!has_vars || mag != 1) {
            out << mag.str();
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff) out << "*";
            out << kNames[i];
            if (e[i] > 1) out << "^" << e[i];
            printed_coeff = true;
        }
    }
    return out.str();
}

}  // namespace bicoeff

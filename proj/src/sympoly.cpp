#include "sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fca {

SymPoly SymPoly::constant(GaussianRational c) {
    SymPoly p;
    p.insert({}, c);
    return p;
}

SymPoly SymPoly::variable(const std::string& name, bool conjugated) {
    SymPoly p;
    p.insert({Variable{name, conjugated}}, GaussianRational(1));
    return p;
}

bool SymPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussianRational SymPoly::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void SymPoly::insert(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
    SymPoly r = a;
    for (const auto& [m, c] : b.terms_) r.insert(m, c);
    return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
    SymPoly r = a;
    for (const auto& [m, c] : b.terms_) r.insert(m, -c);
    return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.insert(m, ca * cb);
        }
    }
    return r;
}

SymPoly SymPoly::scaled(const GaussianRational& c) const {
    SymPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

SymPoly SymPoly::conjugate() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial cm = m;
        for (Variable& v : cm) v.conjugated = !v.conjugated;
        std::sort(cm.begin(), cm.end());
        r.insert(cm, c.conj());
    }
    return r;
}

SymPoly SymPoly::normalized() const {
    if (terms_.empty()) return {};
    const GaussianRational lead = terms_.begin()->second;
    SymPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lead);
    return r;
}

std::complex<double> SymPoly::evaluate(
    const std::map<std::string, std::complex<double>>& assignment) const {
    std::complex<double> total{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        std::complex<double> prod = c.to_complex();
        for (const Variable& v : m) {
            auto it = assignment.find(v.name);
            if (it == assignment.end())
                throw std::out_of_range("no value assigned to symbol '" + v.name + "'");
            prod *= v.conjugated ? std::conj(it->second) : it->second;
        }
        total += prod;
    }
    return total;
}

std::set<std::string> SymPoly::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const Variable& v : m) out.insert(v.name);
    return out;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")";
        for (const Variable& v : m) out += "*" + v.to_string();
    }
    return out;
}

}  // namespace fca

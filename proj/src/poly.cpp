#include "bilcert/poly.hpp"

#include <algorithm>

namespace bilcert {

// --- Monomial -----------------------------------------------------------------

Monomial Monomial::variable(EdgeId id) {
    Monomial m;
    m.exps_[id] = 1;
    return m;
}

Monomial::Monomial(std::map<EdgeId, int> exponents) : exps_(std::move(exponents)) {
    for (auto it = exps_.begin(); it != exps_.end();) {
        if (it->second < 0) throw Error("negative exponent");
        it = it->second == 0 ? exps_.erase(it) : std::next(it);
    }
}

int Monomial::exponent(EdgeId id) const {
    auto it = exps_.find(id);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (auto [id, e] : exps_) d += e;
    return d;
}

bool Monomial::is_variable() const {
    return exps_.size() == 1 && exps_.begin()->second == 1;
}

bool Monomial::is_squarefree() const {
    for (auto [id, e] : exps_)
        if (e > 1) return false;
    return true;
}

std::vector<EdgeId> Monomial::support() const {
    std::vector<EdgeId> s;
    s.reserve(exps_.size());
    for (auto [id, e] : exps_) s.push_back(id);
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    for (auto [id, e] : other.exps_) out.exps_[id] += e;
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (auto [id, e] : exps_)
        if (other.exponent(id) < e) return false;
    return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& divisor) const {
    if (!divisor.divides(*this)) return std::nullopt;
    Monomial out = *this;
    for (auto [id, e] : divisor.exps_) {
        out.exps_[id] -= e;
        if (out.exps_[id] == 0) out.exps_.erase(id);
    }
    return out;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (auto [id, e] : exps_) {
        if (!out.empty()) out += "*";
        out += "e" + std::to_string(id);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::map<EdgeId, int> exps = a.exponents();
    for (auto [id, e] : b.exponents())
        exps[id] = std::max(exps[id], e);
    return Monomial(std::move(exps));
}

// --- LexOrder ------------------------------------------------------------------

LexOrder::LexOrder(std::vector<EdgeId> priority_high_first)
    : priority_(std::move(priority_high_first)) {
    for (std::size_t i = 0; i < priority_.size(); ++i) {
        if (!rank_.emplace(priority_[i], static_cast<int>(i)).second)
            throw Error("duplicate variable e" + std::to_string(priority_[i]) +
                        " in term order");
    }
}

LexOrder LexOrder::descending_ids(const Graph& g) {
    std::vector<EdgeId> ids = g.edge_ids();
    std::sort(ids.rbegin(), ids.rend());
    return LexOrder(std::move(ids));
}

LexOrder LexOrder::pom_promoted(const Graph& g, const std::vector<EdgeId>& pom_edges) {
    std::vector<EdgeId> priority(pom_edges.rbegin(), pom_edges.rend());
    std::set<EdgeId> promoted(pom_edges.begin(), pom_edges.end());
    std::vector<EdgeId> rest;
    for (EdgeId id : g.edge_ids())
        if (!promoted.count(id)) rest.push_back(id);
    std::sort(rest.rbegin(), rest.rend());
    priority.insert(priority.end(), rest.begin(), rest.end());
    return LexOrder(std::move(priority));
}

std::strong_ordering LexOrder::compare(const Monomial& a, const Monomial& b) const {
    for (auto [id, e] : a.exponents())
        if (!rank_.count(id)) throw ForeignVariableError(id);
    for (auto [id, e] : b.exponents())
        if (!rank_.count(id)) throw ForeignVariableError(id);
    for (EdgeId id : priority_) {
        int ea = a.exponent(id), eb = b.exponent(id);
        if (ea != eb) return ea < eb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// --- TwoTermPoly -----------------------------------------------------------------

TwoTermPoly TwoTermPoly::monomial(int sign, Monomial m) {
    if (sign != 1 && sign != -1) throw Error("coefficient must be +-1");
    TwoTermPoly p;
    p.kind_ = Kind::Mono;
    p.sign_ = sign;
    p.lead_ = std::move(m);
    return p;
}

TwoTermPoly TwoTermPoly::difference(const Monomial& a, const Monomial& b,
                                    const LexOrder& ord, int sign) {
    auto cmp = ord.compare(a, b);
    if (cmp == std::strong_ordering::equal) return zero();
    TwoTermPoly p;
    p.kind_ = Kind::Bino;
    if (cmp == std::strong_ordering::greater) {
        p.sign_ = sign;
        p.lead_ = a;
        p.trail_ = b;
    } else {
        p.sign_ = -sign;
        p.lead_ = b;
        p.trail_ = a;
    }
    return p;
}

const Monomial& TwoTermPoly::lead() const {
    if (kind_ == Kind::Zero) throw Error("zero polynomial has no lead monomial");
    return lead_;
}

const Monomial& TwoTermPoly::trail() const {
    if (kind_ != Kind::Bino) throw Error("only a binomial has a trail monomial");
    return trail_;
}

int TwoTermPoly::degree() const {
    return kind_ == Kind::Zero ? 0 : lead_.degree();
}

TwoTermPoly TwoTermPoly::scaled(const Monomial& m) const {
    TwoTermPoly out = *this;
    if (kind_ == Kind::Zero) return out;
    out.lead_ = lead_ * m;
    if (kind_ == Kind::Bino) out.trail_ = trail_ * m;
    return out;
}

TwoTermPoly TwoTermPoly::monic() const {
    TwoTermPoly out = *this;
    if (kind_ != Kind::Zero) out.sign_ = 1;
    return out;
}

TwoTermPoly TwoTermPoly::negated() const {
    TwoTermPoly out = *this;
    if (kind_ != Kind::Zero) out.sign_ = -out.sign_;
    return out;
}

std::set<EdgeId> TwoTermPoly::support() const {
    std::set<EdgeId> s;
    if (kind_ == Kind::Zero) return s;
    for (EdgeId id : lead_.support()) s.insert(id);
    if (kind_ == Kind::Bino)
        for (EdgeId id : trail_.support()) s.insert(id);
    return s;
}

std::string TwoTermPoly::str() const {
    switch (kind_) {
        case Kind::Zero:
            return "0";
        case Kind::Mono:
            return (sign_ < 0 ? "-" : "") + lead_.str();
        case Kind::Bino:
            if (sign_ < 0) return trail_.str() + " - " + lead_.str();
            return lead_.str() + " - " + trail_.str();
    }
    return "0";
}

TwoTermPoly orient(const Monomial& lead_candidate, const Monomial& trail_candidate,
                   const LexOrder& ord) {
    return TwoTermPoly::difference(lead_candidate, trail_candidate, ord).monic();
}

}  // namespace bilcert

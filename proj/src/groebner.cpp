#include "bilcert/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace bilcert {

namespace {

struct SignedTerm {
    int sign;
    Monomial m;
};

// Working form of a polynomial during division: at most two signed terms,
// kept sorted descending under the order, distinct monomials.
class TwoTermWork {
public:
    TwoTermWork(const TwoTermPoly& p, const LexOrder& ord) : ord_(&ord) {
        switch (p.kind()) {
            case TwoTermPoly::Kind::Zero:
                break;
            case TwoTermPoly::Kind::Mono:
                terms_.push_back({p.sign(), p.lead()});
                break;
            case TwoTermPoly::Kind::Bino:
                terms_.push_back({p.sign(), p.lead()});
                terms_.push_back({-p.sign(), p.trail()});
                break;
        }
    }

    bool empty() const { return terms_.empty(); }
    const SignedTerm& head() const { return terms_.front(); }
    void drop_head() { terms_.erase(terms_.begin()); }

    // Replace the head by a single strictly smaller term (a binomial rewrite).
    void rewrite_head(Monomial replacement) {
        SignedTerm t{terms_.front().sign, std::move(replacement)};
        drop_head();
        insert(std::move(t));
    }

    void insert(SignedTerm t) {
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            auto cmp = ord_->compare(t.m, it->m);
            if (cmp == std::strong_ordering::equal) {
                if (it->sign + t.sign != 0)
                    throw ClassEscapeError("coefficient " +
                                           std::to_string(it->sign + t.sign) +
                                           " on " + t.m.str());
                terms_.erase(it);
                return;
            }
            if (cmp == std::strong_ordering::greater) {
                terms_.insert(it, std::move(t));
                if (terms_.size() > 2)
                    throw ClassEscapeError("more than two terms");
                return;
            }
        }
        terms_.push_back(std::move(t));
        if (terms_.size() > 2) throw ClassEscapeError("more than two terms");
    }

private:
    const LexOrder* ord_;
    std::vector<SignedTerm> terms_;
};

TwoTermPoly assemble(std::vector<SignedTerm> terms, const LexOrder& ord) {
    if (terms.empty()) return TwoTermPoly::zero();
    if (terms.size() == 1) return TwoTermPoly::monomial(terms[0].sign, terms[0].m);
    if (terms.size() > 2 || terms[0].sign + terms[1].sign != 0)
        throw ClassEscapeError("remainder is not a signed pure difference");
    return TwoTermPoly::difference(terms[0].m, terms[1].m, ord, terms[0].sign);
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (auto [id, e] : a.exponents())
        if (b.exponent(id) > 0) return false;
    return true;
}

}  // namespace

TwoTermPoly normal_form(const TwoTermPoly& p, const std::vector<TwoTermPoly>& basis,
                        const LexOrder& ord) {
    TwoTermWork work(p, ord);
    std::vector<SignedTerm> remainder;
    while (!work.empty()) {
        const SignedTerm& head = work.head();
        const TwoTermPoly* divisor = nullptr;
        for (const TwoTermPoly& g : basis) {
            if (!g.is_zero() && g.lead().divides(head.m)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(head);
            work.drop_head();
        } else if (divisor->kind() == TwoTermPoly::Kind::Mono) {
            work.drop_head();
        } else {
            Monomial q = *head.m.divided_by(divisor->lead());
            work.rewrite_head(q * divisor->trail());
        }
    }
    return assemble(std::move(remainder), ord);
}

TwoTermPoly spolynomial(const TwoTermPoly& f, const TwoTermPoly& g, const LexOrder& ord) {
    if (f.is_zero() || g.is_zero()) return TwoTermPoly::zero();
    const TwoTermPoly fm = f.monic(), gm = g.monic();
    Monomial l = lcm(fm.lead(), gm.lead());
    Monomial qf = *l.divided_by(fm.lead());
    Monomial qg = *l.divided_by(gm.lead());
    const bool fb = fm.kind() == TwoTermPoly::Kind::Bino;
    const bool gb = gm.kind() == TwoTermPoly::Kind::Bino;
    if (fb && gb) return TwoTermPoly::difference(qg * gm.trail(), qf * fm.trail(), ord);
    if (fb) return TwoTermPoly::monomial(-1, qf * fm.trail());
    if (gb) return TwoTermPoly::monomial(1, qg * gm.trail());
    return TwoTermPoly::zero();
}

std::vector<TwoTermPoly> buchberger(std::vector<TwoTermPoly> gens, const LexOrder& ord) {
    std::vector<TwoTermPoly> basis;
    for (TwoTermPoly& g : gens) {
        if (g.is_zero()) continue;
        TwoTermPoly m = g.monic();
        if (std::find(basis.begin(), basis.end(), m) == basis.end())
            basis.push_back(std::move(m));
    }

    // Pair queue under the normal strategy.
    struct PairKey {
        Monomial l;
        std::size_t i, j;
    };
    struct PairCmp {
        const LexOrder* ord;
        bool operator()(const PairKey& a, const PairKey& b) const {
            auto c = ord->compare(a.l, b.l);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }
    };
    std::set<PairKey, PairCmp> pairs(PairCmp{&ord});
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.insert({lcm(basis[i].lead(), basis[j].lead()), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

    while (!pairs.empty()) {
        PairKey key = *pairs.begin();
        pairs.erase(pairs.begin());
        if (coprime(basis[key.i].lead(), basis[key.j].lead())) continue;
        TwoTermPoly s = spolynomial(basis[key.i], basis[key.j], ord);
        TwoTermPoly r = normal_form(s, basis, ord);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            push_pairs_with(basis.size() - 1);
        }
    }

    // Minimalize: keep only elements whose lead no kept lead divides.
    std::stable_sort(basis.begin(), basis.end(),
                     [&](const TwoTermPoly& a, const TwoTermPoly& b) {
                         return ord.less(a.lead(), b.lead());
                     });
    std::vector<TwoTermPoly> minimal;
    for (const TwoTermPoly& g : basis) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const TwoTermPoly& h) {
            return h.lead().divides(g.lead());
        });
        if (!redundant) minimal.push_back(g);
    }

    // Interreduce trails until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            if (minimal[i].kind() != TwoTermPoly::Kind::Bino) continue;
            std::vector<TwoTermPoly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            TwoTermPoly t = normal_form(TwoTermPoly::monomial(1, minimal[i].trail()),
                                        others, ord);
            TwoTermPoly replacement;
            if (t.is_zero())
                replacement = TwoTermPoly::monomial(1, minimal[i].lead());
            else
                replacement = TwoTermPoly::difference(minimal[i].lead(), t.lead(), ord).monic();
            if (!(replacement == minimal[i])) {
                minimal[i] = replacement;
                changed = true;
            }
        }
    }
    return minimal;
}

// --- IdealPresentation -----------------------------------------------------

IdealPresentation::IdealPresentation(std::vector<TwoTermPoly> generators, LexOrder order)
    : ord_(std::move(order)) {
    for (TwoTermPoly& g : generators) {
        if (g.is_zero()) continue;
        for (EdgeId id : g.support())
            if (!ord_.contains(id)) throw ForeignVariableError(id);
        gens_.push_back(g.monic());
    }
}

const std::vector<TwoTermPoly>& IdealPresentation::reduced_gb() const {
    if (!gb_) gb_ = buchberger(gens_, ord_);
    return *gb_;
}

bool is_groebner_basis(const std::vector<TwoTermPoly>& basis, const LexOrder& ord) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            TwoTermPoly s = spolynomial(basis[i], basis[j], ord);
            if (!normal_form(s, basis, ord).is_zero()) return false;
        }
    return true;
}

// --- MonomialIdeal -------------------------------------------------------------

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const Monomial& m : generators) {
        bool redundant = std::any_of(generators.begin(), generators.end(), [&](const Monomial& d) {
            return !(d == m) && d.divides(m);
        });
        if (!redundant) gens_.push_back(m);
    }
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& m) { return m.is_squarefree(); });
}

MonomialIdeal initial_ideal(const IdealPresentation& ip) {
    std::vector<Monomial> leads;
    for (const TwoTermPoly& g : ip.reduced_gb()) leads.push_back(g.lead());
    return MonomialIdeal(std::move(leads));
}

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(std::move(gens));
}

MonomialIdeal mi_scale(EdgeId v, const MonomialIdeal& a) {
    std::vector<Monomial> gens;
    const Monomial var = Monomial::variable(v);
    for (const Monomial& m : a.generators()) gens.push_back(m * var);
    return MonomialIdeal(std::move(gens));
}

bool mi_equal(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

bool mi_member(const Monomial& m, const MonomialIdeal& a) {
    return std::any_of(a.generators().begin(), a.generators().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::vector<std::vector<EdgeId>> minimal_primes(const MonomialIdeal& a) {
    if (!a.is_squarefree()) throw NotSquarefreeError("minimal_primes");
    std::vector<std::vector<EdgeId>> supports;
    for (const Monomial& m : a.generators()) {
        if (m.is_unit()) return {};  // the unit ideal has no primes over it
        supports.push_back(m.support());
    }

    std::set<std::vector<EdgeId>> found;
    std::set<EdgeId> current;
    auto hit = [&](const std::vector<EdgeId>& support) {
        return std::any_of(support.begin(), support.end(),
                           [&](EdgeId v) { return current.count(v) > 0; });
    };
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == supports.size()) {
            found.insert(std::vector<EdgeId>(current.begin(), current.end()));
            return;
        }
        if (hit(supports[idx])) {
            rec(idx + 1);
            return;
        }
        for (EdgeId v : supports[idx]) {
            current.insert(v);
            rec(idx + 1);
            current.erase(v);
        }
    };
    rec(0);

    std::vector<std::vector<EdgeId>> minimal;
    for (const auto& t : found) {
        bool is_minimal = std::none_of(found.begin(), found.end(), [&](const auto& s) {
            return s.size() < t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (is_minimal) minimal.push_back(t);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

int height(const MonomialIdeal& a) {
    auto primes = minimal_primes(a);
    if (primes.empty()) throw Error("the unit ideal has no height");
    std::size_t h = primes.front().size();
    for (const auto& p : primes) h = std::min(h, p.size());
    return static_cast<int>(h);
}

bool is_unmixed(const MonomialIdeal& a) {
    auto primes = minimal_primes(a);
    if (primes.empty()) return false;
    return std::all_of(primes.begin(), primes.end(),
                       [&](const auto& p) { return p.size() == primes.front().size(); });
}

int height(const IdealPresentation& ip) {
    MonomialIdeal in = initial_ideal(ip);
    if (!in.is_squarefree()) throw NotSquarefreeError("height");
    return height(in);
}

bool is_nzd_variable(EdgeId v, const IdealPresentation& ip) {
    MonomialIdeal in = initial_ideal(ip);
    if (!in.is_squarefree()) throw NotSquarefreeError("is_nzd_variable");
    for (const auto& p : minimal_primes(in))
        if (std::find(p.begin(), p.end(), v) != p.end()) return false;
    return true;
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b) {
    if (!(a.order() == b.order())) throw AmbientMismatchError();
    return a.reduced_gb() == b.reduced_gb();
}

}  // namespace bilcert

#include "lva/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace lva {

PSMonomial::PSMonomial(std::vector<Factor> f) : factors_(std::move(f)) {
    for (auto& fac : factors_)
        if (fac.mode < 1 || fac.exp < 1)
            throw std::invalid_argument("PSMonomial factors need mode >= 1 and exp >= 1");
    std::sort(factors_.begin(), factors_.end());
    // merge duplicates
    std::vector<Factor> merged;
    for (auto& fac : factors_) {
        if (!merged.empty() && merged.back().dir == fac.dir && merged.back().mode == fac.mode)
            merged.back().exp += fac.exp;
        else
            merged.push_back(fac);
    }
    factors_ = std::move(merged);
}

int PSMonomial::degree() const {
    int d = 0;
    for (auto& f : factors_) d += f.mode * f.exp;
    return d;
}

int PSMonomial::max_mode() const {
    int m = 0;
    for (auto& f : factors_) m = std::max(m, f.mode);
    return m;
}

PSMonomial PSMonomial::times(int dir, int mode) const {
    std::vector<Factor> f = factors_;
    f.push_back({dir, mode, 1});
    return PSMonomial(std::move(f));
}

FockElement::FockElement(LatticePtr lattice, LatticeVector coset)
    : lattice_(std::move(lattice)), coset_(std::move(coset)) {
    if (!lattice_) throw std::invalid_argument("FockElement needs a lattice");
    if (static_cast<int>(coset_.size()) != lattice_->rank())
        throw std::invalid_argument("coset rank mismatch");
    if (!lattice_->dual_membership(coset_))
        throw std::invalid_argument("coset tag must lie in the dual lattice");
}

FockElement FockElement::vacuum(LatticePtr lattice) {
    int d = lattice->rank();
    FockElement e(std::move(lattice), zero_vector(d));
    e.add_term(PSMonomial{}, zero_vector(d), 1);
    return e;
}

FockElement FockElement::charge_vector(LatticePtr lattice, const LatticeVector& charge) {
    FockElement e(std::move(lattice), charge);
    e.add_term(PSMonomial{}, charge, 1);
    return e;
}

int FockElement::max_degree() const {
    int d = 0;
    for (auto& [key, c] : terms_) d = std::max(d, key.first.degree());
    return d;
}

void FockElement::check_charge(const LatticeVector& charge) const {
    if (!is_integral_vector(sub(charge, coset_)))
        throw std::invalid_argument("charge not congruent to coset tag mod L");
}

void FockElement::add_term(const PSMonomial& mono, const LatticeVector& charge,
                           const Rational& c) {
    if (c == 0) return;
    check_charge(charge);
    Key key{mono, charge};
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FockElement& FockElement::operator+=(const FockElement& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero() && !lattice_) {
        *this = rhs;
        return *this;
    }
    if (lattice_ != rhs.lattice_)
        throw std::invalid_argument("FockElement lattices differ");
    for (auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero() && !lattice_) {
        *this = rhs * Rational(-1);
        return *this;
    }
    if (lattice_ != rhs.lattice_)
        throw std::invalid_argument("FockElement lattices differ");
    for (auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
    return *this;
}

FockElement& FockElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

bool FockElement::operator==(const FockElement& rhs) const {
    if (is_zero() && rhs.is_zero()) return true;
    return lattice_ == rhs.lattice_ && terms_ == rhs.terms_;
}

namespace {

// per-direction partition split of a monomial: dir -> power-sum partition
std::map<int, Partition> split_by_direction(const PSMonomial& mono) {
    std::map<int, std::vector<int>> parts;
    for (auto& f : mono.factors())
        for (int e = 0; e < f.exp; ++e) parts[f.dir].push_back(f.mode);
    std::map<int, Partition> out;
    for (auto& [dir, v] : parts) out.emplace(dir, Partition::from_unsorted(v));
    return out;
}

// memoized expansion of p_mu in the H basis; built by peeling one part at a
// time so shared sub-partitions are reused across monomials
const SymPoly& p_partition_in_h(const Partition& mu) {
    static std::map<Partition, SymPoly> cache;
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    SymPoly e = SymPoly::one(Basis::H);
    if (!mu.empty()) {
        std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
        e = p_partition_in_h(Partition(rest)) * p_in_h(mu.parts().front());
    }
    return cache.emplace(mu, std::move(e)).first->second;
}

} // namespace

HBasisExpansion to_h_basis(const FockElement& elem) {
    HBasisExpansion out;
    for (auto& [key, c] : elem.terms()) {
        auto split = split_by_direction(key.first);
        // expand p_mu in H per direction, then form the tensor product
        std::vector<std::pair<std::vector<std::pair<int, Partition>>, Rational>> acc;
        acc.push_back({{}, c});
        for (auto& [dir, mu] : split) {
            const SymPoly& e = p_partition_in_h(mu);
            decltype(acc) next;
            for (auto& [dirs, coeff] : acc)
                for (auto& [hkey, hc] : e.terms()) {
                    auto d2 = dirs;
                    if (!hkey.empty()) d2.push_back({dir, hkey});
                    next.push_back({std::move(d2), coeff * hc});
                }
            acc = std::move(next);
        }
        for (auto& [dirs, coeff] : acc) {
            HBasisKey hk{dirs, key.second};
            auto [it, inserted] = out.emplace(std::move(hk), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

FockElement from_h_basis(const LatticePtr& lattice, const LatticeVector& coset,
                         const HBasisExpansion& h) {
    FockElement out(lattice, coset);
    for (auto& [key, c] : h) {
        // expand each per-direction h-partition into power sums
        std::vector<std::pair<PSMonomial, Rational>> acc;
        acc.push_back({PSMonomial{}, c});
        for (auto& [dir, mu] : key.dirs) {
            SymPoly e = SymPoly::one(Basis::P);
            for (int part : mu.parts()) e = e * h_in_p(part);
            decltype(acc) next;
            for (auto& [mono, coeff] : acc)
                for (auto& [pkey, pc] : e.terms()) {
                    std::vector<PSMonomial::Factor> f = mono.factors();
                    for (int part : pkey.parts()) f.push_back({dir, part, 1});
                    next.push_back({PSMonomial(std::move(f)), coeff * pc});
                }
            acc = std::move(next);
        }
        for (auto& [mono, coeff] : acc) out.add_term(mono, key.charge, coeff);
    }
    return out;
}

IntegralityVerdict integrality_check(const FockElement& elem) {
    for (auto& [key, c] : to_h_basis(elem))
        if (!is_integer(c)) return {false, key, c};
    return {true, {}, Rational(0)};
}

std::map<GradeKey, FockElement> grade(const FockElement& elem) {
    std::map<GradeKey, FockElement> out;
    for (auto& [key, c] : elem.terms()) {
        Rational wt = Rational(key.first.degree()) +
                      elem.lattice()->pairing(key.second, key.second) / 2;
        GradeKey gk{wt, key.second};
        auto it = out.find(gk);
        if (it == out.end())
            it = out.emplace(gk, FockElement(elem.lattice(), elem.coset())).first;
        it->second.add_term(key.first, key.second, c);
    }
    return out;
}

HBasisExpansion reduce_mod_p_h(const FockElement& elem, int p) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
    auto verdict = integrality_check(elem);
    if (!verdict.integral)
        throw std::invalid_argument("reduce_mod_p: element is not integral");
    HBasisExpansion out;
    for (auto& [key, c] : to_h_basis(elem)) {
        Integer r = mod_p(c, p);
        if (r != 0) out.emplace(key, Rational(r));
    }
    return out;
}

FockElement reduce_mod_p(const FockElement& elem, int p) {
    return from_h_basis(elem.lattice(), elem.coset(), reduce_mod_p_h(elem, p));
}

} // namespace lva

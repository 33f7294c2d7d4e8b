#include "lva/vertexops.hpp"

#include <algorithm>

namespace lva {

namespace {

void require_integral(const LatticeVector& alpha, const char* what) {
    if (!is_integral_vector(alpha))
        throw std::invalid_argument(std::string(what) + " requires a lattice vector (integer coordinates)");
}

// cocycle sign for e^alpha acting on a module charge eta in L + coset
int module_epsilon(const Lattice& lat, const LatticeVector& alpha, const LatticeVector& eta,
                   const LatticeVector& coset) {
    return lat.epsilon(alpha, sub(eta, coset));
}

PSMonomial merge_monomials(const PSMonomial& a, const PSMonomial& b) {
    std::vector<PSMonomial::Factor> f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return PSMonomial(std::move(f));
}

} // namespace

FockElement multiply_creation(const LatticeVector& alpha, int n, const FockElement& elem) {
    require_integral(alpha, "multiply_creation");
    FockElement out(elem.lattice(), elem.coset());
    for (auto& [key, c] : elem.terms())
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            out.add_term(key.first.times(static_cast<int>(i), n), key.second, c * alpha[i]);
        }
    return out;
}

namespace {

// alpha(n) for n >= 1: derivation e_i(-m) -> m <alpha, e_i> delta_{m,n}
FockElement annihilate(const LatticeVector& alpha, int n, const FockElement& elem) {
    const auto& lat = *elem.lattice();
    const int d = lat.rank();
    std::vector<Rational> pair_with_dir(d);
    for (int i = 0; i < d; ++i) {
        LatticeVector ei = zero_vector(d);
        ei[i] = 1;
        pair_with_dir[i] = lat.pairing(alpha, ei);
    }
    FockElement out(elem.lattice(), elem.coset());
    for (auto& [key, c] : elem.terms()) {
        for (std::size_t fi = 0; fi < key.first.factors().size(); ++fi) {
            const auto& f = key.first.factors()[fi];
            if (f.mode != n || pair_with_dir[f.dir] == 0) continue;
            std::vector<PSMonomial::Factor> rest = key.first.factors();
            if (--rest[fi].exp == 0) rest.erase(rest.begin() + fi);
            out.add_term(PSMonomial(std::move(rest)), key.second,
                         c * f.exp * n * pair_with_dir[f.dir]);
        }
    }
    return out;
}

FockElement charge_read(const LatticeVector& alpha, const FockElement& elem) {
    FockElement out(elem.lattice(), elem.coset());
    for (auto& [key, c] : elem.terms()) {
        Rational p = elem.lattice()->pairing(alpha, key.second);
        if (p != 0) out.add_term(key.first, key.second, c * p);
    }
    return out;
}

} // namespace

FockElement heis_mode(const LatticeVector& alpha, int n, const FockElement& elem) {
    require_integral(alpha, "heis_mode");
    if (n < 0) return multiply_creation(alpha, -n, elem);
    if (n > 0) return annihilate(alpha, n, elem);
    return charge_read(alpha, elem);
}

std::map<int, FockElement> eplus_apply(const LatticeVector& alpha, const FockElement& elem) {
    // exp(-sum_t alpha(t)/t z^{-t}) elem, applied mode by mode; finite since
    // annihilation is locally nilpotent
    std::map<int, FockElement> layers;
    layers.emplace(0, elem);
    const int maxmode = [&] {
        int m = 0;
        for (auto& [key, c] : elem.terms()) m = std::max(m, key.first.max_mode());
        return m;
    }();
    for (int t = 1; t <= maxmode; ++t) {
        std::map<int, FockElement> next;
        for (auto& [j, u] : layers) {
            FockElement d = u;
            Rational coeff = 1;
            for (int k = 0; !d.is_zero(); ++k) {
                if (k > 0) coeff *= Rational(-1, t * k);
                FockElement contrib = d * coeff;
                auto it = next.find(j + t * k);
                if (it == next.end())
                    next.emplace(j + t * k, std::move(contrib));
                else
                    it->second += contrib;
                d = annihilate(alpha, t, d);
            }
        }
        layers = std::move(next);
    }
    return layers;
}

std::vector<std::map<PSMonomial, Rational>> h_series(const LatticePtr& lattice,
                                                     const LatticeVector& alpha, int kmax) {
    using Poly = std::map<PSMonomial, Rational>;
    std::vector<Poly> h(kmax + 1);
    h[0].emplace(PSMonomial{}, 1);
    for (int k = 1; k <= kmax; ++k) {
        Poly acc;
        for (int m = 1; m <= k; ++m)
            for (auto& [mono, c] : h[k - m])
                for (std::size_t i = 0; i < alpha.size(); ++i) {
                    if (alpha[i] == 0) continue;
                    PSMonomial nm = mono.times(static_cast<int>(i), m);
                    Rational v = c * alpha[i];
                    auto [it, inserted] = acc.emplace(std::move(nm), v);
                    if (!inserted) it->second += v;
                }
        for (auto& [mono, c] : acc) {
            c /= k;
            if (c != 0) h[k].emplace(mono, c);
        }
    }
    return h;
}

ZSeries y_lattice_coeffs(const LatticeVector& alpha, const FockElement& elem, int max_exp,
                         int min_exp) {
    require_integral(alpha, "y_lattice_coeffs");
    const auto& lat = *elem.lattice();

    // group terms by charge so E^+ and the charge data are computed once per
    // charge rather than once per monomial
    struct Group {
        FockElement part;
        int b = 0;
        int sign = 1;
        LatticeVector new_charge;
        std::map<int, FockElement> layers;
    };
    std::map<LatticeVector, Group> groups;
    for (auto& [key, c] : elem.terms()) {
        auto [it, inserted] = groups.try_emplace(key.second);
        Group& g = it->second;
        if (inserted) {
            g.part = FockElement(elem.lattice(), elem.coset());
            Rational bq = lat.pairing(alpha, key.second);
            if (!is_integer(bq))
                throw std::invalid_argument("y_lattice: <alpha, charge> is not an integer");
            g.b = static_cast<int>(numerator(bq));
            g.sign = module_epsilon(lat, alpha, key.second, elem.coset());
            g.new_charge = add(key.second, alpha);
        }
        g.part.add_term(key.first, key.second, c);
    }

    int kmax = -1;
    for (auto& [charge, g] : groups) {
        g.layers = eplus_apply(alpha, g.part);
        for (auto& [j, u] : g.layers) kmax = std::max(kmax, max_exp - g.b + j);
    }
    ZSeries out;
    if (kmax < 0) return out;
    auto h = h_series(elem.lattice(), alpha, kmax);

    for (auto& [charge, g] : groups)
        for (auto& [j, u] : g.layers) {
            int klo = 0;
            if (min_exp != INT_MIN) klo = std::max(0, min_exp - g.b + j);
            for (int k = klo; k + g.b - j <= max_exp; ++k) {
                if (h[k].empty()) continue;
                int exp = g.b + k - j;
                auto it = out.find(exp);
                if (it == out.end())
                    it = out.emplace(exp, FockElement(elem.lattice(), elem.coset())).first;
                for (auto& [umono, uc] : u.terms())
                    for (auto& [hmono, hc] : h[k])
                        it->second.add_term(merge_monomials(umono.first, hmono), g.new_charge,
                                            uc * hc * g.sign);
            }
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

FockElement y_lattice_mode(const LatticeVector& alpha, int n, const FockElement& elem) {
    auto coeffs = y_lattice_coeffs(alpha, elem, -n - 1, -n - 1);
    auto it = coeffs.find(-n - 1);
    if (it == coeffs.end()) return FockElement(elem.lattice(), elem.coset());
    return it->second;
}

Integer a_mode_coeff(char sign, int m, int n) {
    if (m < 1) return 0;
    if (sign == '+') {
        if (n < 0) return 0;
        Integer b = binomial(n + m - 1, m - 1);
        return (m % 2 == 1) ? b : -b;
    }
    if (sign == '-') {
        if (n < 1) return 0;
        return binomial(n - 1, m - 1);
    }
    throw std::invalid_argument("a_mode_coeff: sign must be '+' or '-'");
}

ZSeries a_plus_apply(const LatticeVector& alpha, int m, const ZSeries& series) {
    ZSeries out;
    auto accumulate = [&](int exp, FockElement e) {
        if (e.is_zero()) return;
        auto it = out.find(exp);
        if (it == out.end())
            out.emplace(exp, std::move(e));
        else
            it->second += e;
    };
    for (auto& [s, u] : series) {
        int tmax = 0;
        for (auto& [key, c] : u.terms()) tmax = std::max(tmax, key.first.degree());
        for (int t = 0; t <= tmax; ++t) {
            FockElement e = heis_mode(alpha, t, u);
            if (e.is_zero()) continue;
            e *= Rational(a_mode_coeff('+', m, t));
            accumulate(s - t - m, std::move(e));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

ZSeries a_minus_apply(const LatticeVector& alpha, int m, const ZSeries& series, int max_exp) {
    ZSeries out;
    for (auto& [s, u] : series) {
        for (int t = 1; s + t - m <= max_exp; ++t) {
            Integer w = a_mode_coeff('-', m, t);
            if (w == 0) continue;
            FockElement e = multiply_creation(alpha, t, u);
            e *= Rational(w);
            if (e.is_zero()) continue;
            auto it = out.find(s + t - m);
            if (it == out.end())
                out.emplace(s + t - m, std::move(e));
            else
                it->second += e;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace {

ZSeries y_lattice_apply(const LatticeVector& gamma, const ZSeries& series, int max_exp,
                        int min_exp = INT_MIN) {
    ZSeries out;
    for (auto& [s, u] : series) {
        int lo = (min_exp == INT_MIN) ? INT_MIN : min_exp - s;
        auto coeffs = y_lattice_coeffs(gamma, u, max_exp - s, lo);
        for (auto& [e, w] : coeffs) {
            auto it = out.find(s + e);
            if (it == out.end())
                out.emplace(s + e, std::move(w));
            else
                it->second += w;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

FockElement y_general_mode(const VertexWord& v, int n, const FockElement& elem) {
    require_integral(v.gamma, "y_general_mode");
    for (auto& [a, m] : v.heis) {
        require_integral(a, "y_general_mode");
        if (m < 1) throw std::invalid_argument("VertexWord modes must be >= 1");
    }
    const int k = static_cast<int>(v.heis.size());
    const int target = -n - 1;
    FockElement result(elem.lattice(), elem.coset());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        // bits set: factors routed to A^- (applied left of Y), clear: A^+
        ZSeries series;
        series.emplace(0, elem);
        for (int j = k - 1; j >= 0; --j)
            if (!(mask & (1u << j)))
                series = a_plus_apply(v.heis[j].first, v.heis[j].second, series);
        // A^- factors can still lower the exponent by at most m_j - 1 each
        int min_aminus = 0;
        for (int j = 0; j < k; ++j)
            if (mask & (1u << j)) min_aminus += 1 - v.heis[j].second;
        // with no A^- factors left the target coefficient is the only one
        // that matters; otherwise the lower exponents still contribute
        int ylo = (mask == 0) ? target : INT_MIN;
        series = y_lattice_apply(v.gamma, series, target - min_aminus, ylo);
        int remaining = min_aminus;
        for (int j = k - 1; j >= 0; --j) {
            if (!(mask & (1u << j))) continue;
            remaining -= 1 - v.heis[j].second;
            series = a_minus_apply(v.heis[j].first, v.heis[j].second, series, target - remaining);
        }
        auto it = series.find(target);
        if (it != series.end()) result += it->second;
    }
    return result;
}

FockElement divided_power(const VertexWord& v, int n, int r, const FockElement& elem) {
    if (r < 1) throw std::invalid_argument("divided_power: r must be >= 1");
    FockElement w = elem;
    for (int i = 0; i < r && !w.is_zero(); ++i) w = y_general_mode(v, n, w);
    w *= Rational(1, factorial(r));
    return w;
}

SymPoly garland_poly(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("garland_poly: need k >= 1, n >= 0");
    // recurrence n g_n = sum_{m=1}^{n} p_{km} g_{n-m} in the P basis
    std::vector<SymPoly> g;
    g.push_back(SymPoly::one(Basis::P));
    for (int i = 1; i <= n; ++i) {
        SymPoly acc(Basis::P);
        for (int m = 1; m <= i; ++m)
            acc += SymPoly::monomial(Basis::P, Partition{k * m}, 1) * g[i - m];
        acc *= Rational(1, i);
        g.push_back(std::move(acc));
    }
    return change_basis(g[n], Basis::H);
}

FockElement garland_apply(int dir, int k, int n, const FockElement& elem) {
    if (dir < 0 || dir >= elem.lattice()->rank())
        throw std::invalid_argument("garland_apply: direction out of range");
    SymPoly poly = change_basis(garland_poly(k, n), Basis::P);
    FockElement out(elem.lattice(), elem.coset());
    for (auto& [pkey, pc] : poly.terms()) {
        std::vector<PSMonomial::Factor> f;
        for (int part : pkey.parts()) f.push_back({dir, part, 1});
        PSMonomial pm(std::move(f));
        for (auto& [key, c] : elem.terms())
            out.add_term(merge_monomials(key.first, pm), key.second, c * pc);
    }
    return out;
}

FockElement exp_mode(const VertexWord& v, int n, const Integer& t, const FockElement& elem,
                     int cap) {
    if (cap < 1) throw std::invalid_argument("exp_mode: cap must be >= 1");
    FockElement acc = elem;
    if (t == 0) return acc;
    FockElement power = elem;  // (v_n)^r elem / r!
    Integer tr = 1;
    for (int r = 1; r <= cap; ++r) {
        power = y_general_mode(v, n, power);
        power *= Rational(1, r);
        if (power.is_zero()) return acc;
        tr *= t;
        acc += power * Rational(tr);
    }
    throw CapExceededError("exp_mode: operator not nilpotent within cap", std::move(acc));
}

} // namespace lva

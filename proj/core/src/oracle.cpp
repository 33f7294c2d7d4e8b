#include "lva/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lva {

bool Window::contains(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != vars()) return false;
    for (int i = 0; i < vars(); ++i)
        if (e[i] < lo[i] || e[i] > hi[i]) return false;
    return true;
}

Window Window::uniform(int nvars, int lo, int hi) {
    return Window{std::vector<int>(nvars, lo), std::vector<int>(nvars, hi)};
}

void MultiLaurent::add_term(const std::vector<int>& expo, const Rational& c) {
    if (c == 0) return;
    if (!window_.contains(expo)) {
        clipped_ = true;
        return;
    }
    auto [it, inserted] = terms_.emplace(expo, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiLaurent::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& rhs) const {
    MultiLaurent out = *this;
    out.clipped_ = clipped_ || rhs.clipped_;
    for (auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& rhs) const {
    MultiLaurent out(window_);
    out.clipped_ = clipped_ || rhs.clipped_;
    const int n = window_.vars();
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : rhs.terms_) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiLaurent& MultiLaurent::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiLaurent MultiLaurent::permute(const std::vector<int>& sigma) const {
    MultiLaurent out(window_);
    const int n = window_.vars();
    for (auto& [e, c] : terms_) {
        std::vector<int> pe(n);
        for (int i = 0; i < n; ++i) pe[sigma[i]] = e[i];
        out.add_term(pe, c);
    }
    out.clipped_ = clipped_;
    return out;
}

MultiLaurent vandermonde_pow(int r, int k, const Window& window) {
    if (r < 1 || k < 0) throw std::invalid_argument("vandermonde_pow: need r >= 1, k >= 0");
    if (window.vars() != r) throw std::invalid_argument("vandermonde_pow: window rank mismatch");
    const int top = k * (r - 1);
    for (int i = 0; i < r; ++i)
        if (window.lo[i] > 0 || window.hi[i] < top)
            throw std::invalid_argument("vandermonde_pow: window too small");
    MultiLaurent acc(window);
    acc.add_term(std::vector<int>(r, 0), 1);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int rep = 0; rep < k; ++rep) {
                MultiLaurent f(window);
                std::vector<int> e(r, 0);
                e[i] = 1;
                f.add_term(e, 1);
                e[i] = 0;
                e[j] = 1;
                f.add_term(e, -1);
                acc = acc * f;
            }
    if (acc.clipped()) throw std::logic_error("vandermonde_pow: unexpected clipping");
    return acc;
}

DivisibilityResult lemma_divisibility(const MultiLaurent& g, int r, int k, int n) {
    const int vars = g.window().vars();
    if (vars != r) throw std::invalid_argument("lemma_divisibility: G has wrong variable count");
    // exact S_r-invariance, checked on adjacent transpositions
    for (int i = 0; i + 1 < r; ++i) {
        std::vector<int> sigma(r);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::swap(sigma[i], sigma[i + 1]);
        if (!(g.permute(sigma).terms() == g.terms()))
            throw std::invalid_argument("lemma_divisibility: G is not symmetric");
    }
    if (!g.window().contains(std::vector<int>(r, n)))
        throw std::invalid_argument("lemma_divisibility: window does not cover the diagonal");
    // direct convolution; both factors are finite so this is exact
    Window vw = Window::uniform(r, 0, std::max(0, k * (r - 1)));
    MultiLaurent v = vandermonde_pow(r, k, vw);
    Rational coeff = 0;
    for (auto& [e, c] : v.terms()) {
        std::vector<int> need(r);
        for (int i = 0; i < r; ++i) need[i] = n - e[i];
        coeff += c * g.coeff(need);
    }
    Rational q = coeff / Rational(factorial(r));
    return {coeff, is_integer(q)};
}

namespace {

using HPoly = std::map<PSMonomial, Rational>;
using ElemSeries = std::map<std::vector<int>, FockElement>;

PSMonomial merge_monomials(const PSMonomial& a, const PSMonomial& b) {
    std::vector<PSMonomial::Factor> f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return PSMonomial(std::move(f));
}

FockElement times_poly(const FockElement& elem, const HPoly& poly) {
    FockElement out(elem.lattice(), elem.coset());
    for (auto& [key, c] : elem.terms())
        for (auto& [mono, pc] : poly)
            out.add_term(merge_monomials(key.first, mono), key.second, c * pc);
    return out;
}

void series_add(ElemSeries& acc, const std::vector<int>& e, const FockElement& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = acc.emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

bool series_equal(const ElemSeries& a, const ElemSeries& b,
                  const std::function<bool(const std::vector<int>&)>& in_region) {
    auto filter = [&](const ElemSeries& s) {
        ElemSeries out;
        for (auto& [e, v] : s)
            if (in_region(e) && !v.is_zero()) out.emplace(e, v);
        return out;
    };
    return filter(a) == filter(b);
}

// all power-sum monomials of degree <= maxdeg over the lattice directions
std::vector<PSMonomial> monomial_basis(int rank, int maxdeg) {
    std::vector<PSMonomial> out;
    std::vector<PSMonomial::Factor> cur;
    std::function<void(int, int, int)> rec = [&](int dir, int minmode, int rem) {
        out.emplace_back(cur);
        for (int d = dir; d < rank; ++d)
            for (int m = (d == dir ? minmode : 1); m <= rem; ++m) {
                cur.push_back({d, m, 1});
                rec(d, m, rem - m);
                cur.pop_back();
            }
    };
    rec(0, 1, maxdeg);
    // rec enumerates with duplicates of exponent structure collapsed by
    // PSMonomial's constructor; dedupe
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool product_formula_check(const LatticePtr& lattice, const LatticeVector& alpha, int r,
                           const std::vector<LatticeVector>& beta_list, int w_hi, int z_hi) {
    const int l = static_cast<int>(beta_list.size());
    const int nv = l + r;
    LatticeVector eta = zero_vector(lattice->rank());
    for (auto& b : beta_list) eta = add(eta, b);

    // --- operator side: iterated y_lattice_coeffs, rightmost variable first
    std::vector<HPoly> empty_h;
    std::vector<std::vector<HPoly>> beta_h;
    for (auto& b : beta_list) beta_h.push_back(h_series(lattice, b, w_hi));
    ElemSeries op_side;
    {
        std::vector<int> kexp(l, 0);
        bool done = false;
        if (l == 0) {
            FockElement e = FockElement::charge_vector(lattice, eta);
            op_side.emplace(std::vector<int>(nv, 0), std::move(e));
        }
        while (l > 0 && !done) {
            FockElement e = FockElement::charge_vector(lattice, eta);
            HPoly acc{{PSMonomial{}, 1}};
            for (int s = 0; s < l; ++s) {
                HPoly next;
                for (auto& [ma, ca] : acc)
                    for (auto& [mb, cb] : beta_h[s][kexp[s]]) {
                        auto m = merge_monomials(ma, mb);
                        auto [it, ins] = next.emplace(std::move(m), ca * cb);
                        if (!ins) it->second += cb * ca;
                    }
                acc = std::move(next);
            }
            std::vector<int> e0(nv, 0);
            for (int s = 0; s < l; ++s) e0[s] = kexp[s];
            series_add(op_side, e0, times_poly(e, acc));
            done = true;
            for (int s = 0; s < l; ++s) {
                if (++kexp[s] <= w_hi) {
                    done = false;
                    break;
                }
                kexp[s] = 0;
            }
        }
    }
    for (int zi = r - 1; zi >= 0; --zi) {
        ElemSeries next;
        for (auto& [e, u] : op_side)
            for (auto& [ze, v] : y_lattice_coeffs(alpha, u, z_hi)) {
                std::vector<int> e2 = e;
                e2[l + zi] = ze;
                series_add(next, e2, v);
            }
        op_side = std::move(next);
    }

    // --- formula side
    Rational aa = lattice->pairing(alpha, alpha);
    if (!is_integer(aa) || aa < 0) throw std::invalid_argument("even lattice expected");
    Rational bq = lattice->pairing(alpha, eta);
    int b = static_cast<int>(numerator(bq));
    int sign = 1;
    {
        LatticeVector acc_charge = eta;
        for (int j = 0; j < r; ++j) {
            sign *= lattice->epsilon(alpha, acc_charge);
            acc_charge = add(acc_charge, alpha);
        }
    }
    // scalar factor over (w_1..w_l, z_1..z_r)
    std::map<std::vector<int>, Rational> scalar;
    {
        std::vector<int> e0(nv, 0);
        for (int zi = 0; zi < r; ++zi) e0[l + zi] = b;
        scalar.emplace(e0, Rational(sign));
        // Vandermonde^{<a,a>} in the z block
        int kpow = static_cast<int>(numerator(aa));
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                for (int rep = 0; rep < kpow; ++rep) {
                    std::map<std::vector<int>, Rational> next;
                    for (auto& [e, c] : scalar) {
                        std::vector<int> ei = e, ej = e;
                        ++ei[l + i];
                        ++ej[l + j];
                        next[ei] += c;
                        next[ej] -= c;
                    }
                    scalar = std::move(next);
                }
        // contraction factors (1 - w_s/z_k)^{<a, b_s>}
        for (int zi = 0; zi < r; ++zi)
            for (int s = 0; s < l; ++s) {
                int c = static_cast<int>(numerator(lattice->pairing(alpha, beta_list[s])));
                std::map<std::vector<int>, Rational> next;
                for (auto& [e, v] : scalar) {
                    int tmax = (c >= 0) ? c : (w_hi - e[s]);
                    for (int t = 0; t <= tmax; ++t) {
                        Rational w = (c >= 0)
                                         ? Rational((t % 2 == 0 ? 1 : -1) * binomial(c, t))
                                         : Rational(binomial(-c - 1 + t, t));
                        if (w == 0) continue;
                        std::vector<int> e2 = e;
                        e2[s] += t;
                        e2[l + zi] -= t;
                        next[e2] += v * w;
                    }
                }
                scalar = std::move(next);
                for (auto it = scalar.begin(); it != scalar.end();)
                    it = (it->second == 0) ? scalar.erase(it) : std::next(it);
            }
    }
    auto alpha_h = h_series(lattice, alpha, [&] {
        int m = 0;
        for (auto& [e, c] : scalar)
            for (int zi = 0; zi < r; ++zi) m = std::max(m, z_hi - e[l + zi]);
        return std::max(m, 0);
    }());
    LatticeVector final_charge = eta;
    for (int j = 0; j < r; ++j) final_charge = add(final_charge, alpha);

    ElemSeries formula_side;
    for (auto& [e, c] : scalar) {
        // choose E^- orders for each variable
        std::vector<int> budget(nv);
        bool feasible = true;
        for (int s = 0; s < l; ++s) {
            budget[s] = w_hi - e[s];
            if (budget[s] < 0) feasible = false;
        }
        for (int zi = 0; zi < r; ++zi) budget[l + zi] = std::max(z_hi - e[l + zi], -1);
        if (!feasible) continue;
        std::vector<int> pick(nv, 0);
        std::function<void(int, HPoly)> rec = [&](int var, HPoly acc) {
            if (var == nv) {
                FockElement base = FockElement::charge_vector(lattice, final_charge);
                FockElement val = times_poly(base, acc);
                val *= c;
                std::vector<int> e2 = e;
                for (int i = 0; i < nv; ++i) e2[i] += pick[i];
                series_add(formula_side, e2, val);
                return;
            }
            for (int k = 0; k <= budget[var]; ++k) {
                pick[var] = k;
                const HPoly& h = (var < l) ? beta_h[var][k] : alpha_h[k];
                HPoly next;
                for (auto& [ma, ca] : acc)
                    for (auto& [mb, cb] : h) {
                        auto m = merge_monomials(ma, mb);
                        auto [it, ins] = next.emplace(std::move(m), ca * cb);
                        if (!ins) it->second += ca * cb;
                    }
                rec(var + 1, std::move(next));
            }
            pick[var] = 0;
        };
        rec(0, HPoly{{PSMonomial{}, 1}});
    }

    auto in_region = [&](const std::vector<int>& e) {
        for (int s = 0; s < l; ++s)
            if (e[s] < 0 || e[s] > w_hi) return false;
        for (int zi = 0; zi < r; ++zi)
            if (e[l + zi] > z_hi) return false;
        return true;
    };
    return series_equal(op_side, formula_side, in_region);
}

bool contraction_check(const LatticePtr& lattice, const LatticeVector& alpha,
                       const LatticeVector& beta, int w_hi) {
    auto beta_h = h_series(lattice, beta, w_hi);
    int c = static_cast<int>(numerator(lattice->pairing(alpha, beta)));
    for (auto& mono : monomial_basis(lattice->rank(), std::min(w_hi, 3))) {
        FockElement u(lattice, zero_vector(lattice->rank()));
        u.add_term(mono, zero_vector(lattice->rank()), 1);
        // exponent tuples are (w, z)
        ElemSeries lhs, rhs;
        for (int k = 0; k <= w_hi; ++k) {
            FockElement v = times_poly(u, beta_h[k]);
            for (auto& [j, ev] : eplus_apply(alpha, v)) series_add(lhs, {k, -j}, ev);
        }
        for (auto& [j, ev] : eplus_apply(alpha, u))
            for (int k = 0; k <= w_hi; ++k) {
                FockElement v = times_poly(ev, beta_h[k]);
                int tmax = (c >= 0) ? c : (w_hi - k);
                for (int t = 0; t <= tmax; ++t) {
                    Rational w = (c >= 0) ? Rational((t % 2 == 0 ? 1 : -1) * binomial(c, t))
                                          : Rational(binomial(-c - 1 + t, t));
                    if (w == 0) continue;
                    series_add(rhs, {k + t, -j - t}, v * w);
                }
            }
        auto in_region = [&](const std::vector<int>& e) { return e[0] <= w_hi; };
        if (!series_equal(lhs, rhs, in_region)) return false;
    }
    return true;
}

bool wick_commutator_check(const LatticePtr& lattice, const LatticeVector& alpha,
                           const LatticeVector& beta, int m, int n, int w_hi) {
    if (m < 1 || n < 1) throw std::invalid_argument("wick_commutator_check: need m, n >= 1");
    Rational ab = lattice->pairing(alpha, beta);
    std::vector<FockElement> samples;
    for (auto& mono : monomial_basis(lattice->rank(), 2)) {
        FockElement u(lattice, zero_vector(lattice->rank()));
        u.add_term(mono, zero_vector(lattice->rank()), 1);
        samples.push_back(std::move(u));
    }
    {
        LatticeVector e0 = zero_vector(lattice->rank());
        e0[0] = 1;
        samples.push_back(FockElement::charge_vector(lattice, e0));
    }
    for (auto& u : samples) {
        ElemSeries lhs, rhs;
        // A+ A- u
        for (int t = 1; t - n <= w_hi; ++t) {
            Integer cw = a_mode_coeff('-', n, t);
            if (cw == 0) continue;
            FockElement v = multiply_creation(beta, t, u) * Rational(cw);
            int smax = v.max_degree();
            for (int s = 0; s <= smax; ++s) {
                FockElement x = heis_mode(alpha, s, v) * Rational(a_mode_coeff('+', m, s));
                series_add(lhs, {t - n, -s - m}, x);
            }
        }
        // minus A- A+ u
        int smax = u.max_degree();
        for (int s = 0; s <= smax; ++s) {
            FockElement v = heis_mode(alpha, s, u) * Rational(a_mode_coeff('+', m, s));
            if (v.is_zero()) continue;
            for (int t = 1; t - n <= w_hi; ++t) {
                Integer cw = a_mode_coeff('-', n, t);
                if (cw == 0) continue;
                FockElement x = multiply_creation(beta, t, v) * Rational(cw);
                series_add(lhs, {t - n, -s - m}, x * Rational(-1));
            }
        }
        // closed-form commutator series
        for (int k = 1; k - n <= w_hi; ++k) {
            Rational c = ab * Rational(((m - 1) % 2 == 0 ? 1 : -1) * k) *
                         Rational(binomial(k + m - 1, m - 1) * binomial(k - 1, n - 1));
            if (c == 0) continue;
            series_add(rhs, {k - n, -k - m}, u * c);
        }
        auto in_region = [&](const std::vector<int>& e) { return e[0] <= w_hi; };
        if (!series_equal(lhs, rhs, in_region)) return false;
    }
    return true;
}

bool lemma41_check(const LatticePtr& lattice,
                   const std::vector<std::pair<LatticeVector, int>>& alpha_modes,
                   const std::vector<LatticeVector>& beta_list, int w_hi) {
    const int l = static_cast<int>(beta_list.size());
    LatticeVector eta = zero_vector(lattice->rank());
    for (auto& b : beta_list) eta = add(eta, b);
    std::vector<std::vector<HPoly>> beta_h;
    for (auto& b : beta_list) beta_h.push_back(h_series(lattice, b, w_hi));

    // base: tuples (w_1..w_l, ze)
    ElemSeries base;
    std::vector<int> kexp(l, 0);
    bool done = false;
    while (!done) {
        HPoly acc{{PSMonomial{}, 1}};
        for (int s = 0; s < l; ++s) {
            HPoly next;
            for (auto& [ma, ca] : acc)
                for (auto& [mb, cb] : beta_h[s][kexp[s]]) {
                    auto mm = merge_monomials(ma, mb);
                    auto [it, ins] = next.emplace(std::move(mm), ca * cb);
                    if (!ins) it->second += ca * cb;
                }
            acc = std::move(next);
        }
        std::vector<int> e(l + 1, 0);
        for (int s = 0; s < l; ++s) e[s] = kexp[s];
        series_add(base, e, times_poly(FockElement::charge_vector(lattice, eta), acc));
        done = true;
        for (int s = 0; s < l; ++s) {
            if (++kexp[s] <= w_hi) {
                done = false;
                break;
            }
            kexp[s] = 0;
        }
    }

    // LHS: apply the A^+ factors in z
    ElemSeries lhs = base;
    for (auto it = alpha_modes.rbegin(); it != alpha_modes.rend(); ++it) {
        ElemSeries next;
        for (auto& [e, u] : lhs) {
            int tmax = u.max_degree();
            for (int t = 0; t <= tmax; ++t) {
                FockElement v = heis_mode(it->first, t, u) * Rational(a_mode_coeff('+', it->second, t));
                if (v.is_zero()) continue;
                std::vector<int> e2 = e;
                e2[l] -= t + it->second;
                series_add(next, e2, v);
            }
        }
        lhs = std::move(next);
    }

    // RHS: multiplication by f = prod_j sum_i <a_j, b_i> (-1)^{l_j-1} (z-w_i)^{-l_j}
    std::map<std::vector<int>, Rational> f;
    f.emplace(std::vector<int>(l + 1, 0), Rational(1));
    for (auto& [aj, lj] : alpha_modes) {
        std::map<std::vector<int>, Rational> factor;
        for (int i = 0; i < l; ++i) {
            Rational pair = lattice->pairing(aj, beta_list[i]);
            if (pair == 0) continue;
            Rational lead = pair * ((lj - 1) % 2 == 0 ? 1 : -1);
            for (int t = 0; t <= w_hi; ++t) {
                std::vector<int> e(l + 1, 0);
                e[i] = t;
                e[l] = -lj - t;
                factor[e] += lead * Rational(binomial(lj - 1 + t, t));
            }
        }
        std::map<std::vector<int>, Rational> next;
        for (auto& [ea, ca] : f)
            for (auto& [eb, cb] : factor) {
                std::vector<int> e(l + 1);
                for (int i = 0; i <= l; ++i) e[i] = ea[i] + eb[i];
                bool ok = true;
                for (int i = 0; i < l; ++i)
                    if (e[i] > w_hi) ok = false;
                if (!ok) continue;
                next[e] += ca * cb;
            }
        f = std::move(next);
    }
    ElemSeries rhs;
    for (auto& [ef, cf] : f)
        for (auto& [eb, u] : base) {
            std::vector<int> e(l + 1);
            for (int i = 0; i <= l; ++i) e[i] = ef[i] + eb[i];
            bool ok = true;
            for (int i = 0; i < l; ++i)
                if (e[i] > w_hi) ok = false;
            if (!ok) continue;
            series_add(rhs, e, u * cf);
        }

    auto in_region = [&](const std::vector<int>& e) {
        for (int i = 0; i < l; ++i)
            if (e[i] > w_hi) return false;
        return true;
    };
    return series_equal(lhs, rhs, in_region);
}

bool lemma43_plus_check(const LatticePtr& lattice,
                        const std::vector<std::pair<LatticeVector, int>>& alpha_modes,
                        const LatticeVector& beta, const FockElement& sample, int w_hi) {
    const int k = static_cast<int>(alpha_modes.size());
    // all charges of the sample agree (homogeneous charge assumed for the check)
    if (sample.terms().empty()) return true;
    LatticeVector eta = sample.terms().begin()->first.second;
    int b = static_cast<int>(numerator(lattice->pairing(beta, eta)));
    const int deg = sample.max_degree();
    const int tcap = std::max(0, w_hi - b + deg);

    // LHS: Y(e^beta, w) then the A^+ chain in z; tuples (we, ze)
    ElemSeries lhs;
    for (auto& [we, u] : y_lattice_coeffs(beta, sample, w_hi)) series_add(lhs, {we, 0}, u);
    for (auto it = alpha_modes.rbegin(); it != alpha_modes.rend(); ++it) {
        ElemSeries next;
        for (auto& [e, u] : lhs) {
            int tmax = u.max_degree();
            for (int t = 0; t <= tmax; ++t) {
                FockElement v = heis_mode(it->first, t, u) * Rational(a_mode_coeff('+', it->second, t));
                if (v.is_zero()) continue;
                series_add(next, {e[0], e[1] - t - it->second}, v);
            }
        }
        lhs = std::move(next);
    }

    // RHS: expand prod_p (A^+ + correction) over subsets, then apply Y
    ElemSeries rhs;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        // operator factors for set bits, scalar corrections otherwise
        ElemSeries inner;
        series_add(inner, {0, 0}, sample);
        for (int p = k - 1; p >= 0; --p) {
            const auto& [ap, lp] = alpha_modes[p];
            ElemSeries next;
            if (mask & (1u << p)) {
                for (auto& [e, u] : inner) {
                    int tmax = u.max_degree();
                    for (int t = 0; t <= tmax; ++t) {
                        FockElement v = heis_mode(ap, t, u) * Rational(a_mode_coeff('+', lp, t));
                        if (v.is_zero()) continue;
                        series_add(next, {e[0], e[1] - t - lp}, v);
                    }
                }
            } else {
                Rational pair = lattice->pairing(ap, beta);
                Rational lead = pair * ((lp - 1) % 2 == 0 ? 1 : -1);
                if (lead != 0)
                    for (auto& [e, u] : inner)
                        for (int t = 0; e[0] + t <= tcap; ++t)
                            series_add(next, {e[0] + t, e[1] - lp - t},
                                       u * (lead * Rational(binomial(lp - 1 + t, t))));
            }
            inner = std::move(next);
        }
        for (auto& [e, u] : inner)
            for (auto& [we, v] : y_lattice_coeffs(beta, u, w_hi - e[0]))
                series_add(rhs, {e[0] + we, e[1]}, v);
    }

    auto in_region = [&](const std::vector<int>& e) { return e[0] <= w_hi; };
    return series_equal(lhs, rhs, in_region);
}

bool lemma43_minus_check(const LatticePtr& lattice,
                         const std::vector<std::pair<LatticeVector, int>>& alpha_modes,
                         const LatticeVector& beta, const FockElement& sample, int w_hi,
                         int z_hi) {
    const int k = static_cast<int>(alpha_modes.size());
    if (sample.terms().empty()) return true;
    int lam_sum = 0;
    for (auto& [a, lp] : alpha_modes) lam_sum += lp;
    const int tcap = z_hi + lam_sum;  // generous z budget per scalar factor
    const int w_cap = w_hi + k * (tcap + lam_sum);

    // LHS: the A^- chain in z (with per-step budgets), then Y in w
    ZSeries zser;
    zser.emplace(0, sample);
    {
        int remaining = 0;
        for (auto& [a, lp] : alpha_modes) remaining += 1 - lp;
        for (int p = k - 1; p >= 0; --p) {
            remaining -= 1 - alpha_modes[p].second;
            zser = a_minus_apply(alpha_modes[p].first, alpha_modes[p].second, zser,
                                 z_hi - remaining);
        }
    }
    ElemSeries lhs;
    for (auto& [ze, u] : zser)
        for (auto& [we, v] : y_lattice_coeffs(beta, u, w_hi)) series_add(lhs, {we, ze}, v);

    // RHS: prod_p (A^- - <a_p, b> (w-z)^{-l_p}) applied to Y(e^beta, w) sample
    ElemSeries rhs;
    for (auto& [we, u] : y_lattice_coeffs(beta, sample, w_cap)) series_add(rhs, {we, 0}, u);
    for (int p = k - 1; p >= 0; --p) {
        const auto& [ap, lp] = alpha_modes[p];
        Rational pair = lattice->pairing(ap, beta);
        ElemSeries next;
        for (auto& [e, u] : rhs) {
            for (int t = 1; e[1] + t - lp <= z_hi + lam_sum; ++t) {
                Integer cw = a_mode_coeff('-', lp, t);
                if (cw == 0) continue;
                FockElement v = multiply_creation(ap, t, u) * Rational(cw);
                series_add(next, {e[0], e[1] + t - lp}, v);
            }
            if (pair != 0)
                for (int t = 0; e[1] + t <= z_hi + lam_sum; ++t)
                    series_add(next, {e[0] - lp - t, e[1] + t},
                               u * (-pair * Rational(binomial(lp - 1 + t, t))));
        }
        rhs = std::move(next);
    }

    auto in_region = [&](const std::vector<int>& e) {
        return e[0] >= -w_hi && e[0] <= w_hi && e[1] <= z_hi;
    };
    return series_equal(lhs, rhs, in_region);
}

} // namespace lva

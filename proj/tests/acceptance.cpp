// Acceptance gate: one line per criterion, exit 0 iff everything passes.
// argv[1] is the path to the lva CLI binary (used by criterion 13).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lva/harness.hpp"
#include "lva/json_io.hpp"
#include "lva/oracle.hpp"
#include "lva/vertexops.hpp"

using namespace lva;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<FockElement> g_outputs;  // criteria 4/5/7 results, consumed by criterion 12

void report(int number, const std::string& label, bool ok, double seconds, double budget) {
    bool in_budget = budget <= 0 || seconds < budget;
    bool pass = ok && in_budget;
    if (!pass) ++g_failures;
    std::printf("criterion %2d: %s  %-34s (%.1fs%s)\n", number, pass ? "PASS" : "FAIL",
                label.c_str(), seconds, in_budget ? "" : ", over budget");
    std::fflush(stdout);
}

template <typename F>
void run(int number, const std::string& label, double budget, F body) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(number, label, ok, secs, budget);
}

Rational det(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    Rational d(1);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int pick(int lo, int hi) {  // modulo keeps the stream stdlib-independent
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    int nonzero(int lo, int hi) {
        int v = 0;
        while (v == 0) v = pick(lo, hi);
        return v;
    }
};

MultiLaurent random_symmetric(Rng& rng, int r, int k) {
    Window w = Window::uniform(r, -1, k * (r - 1) + 2);
    MultiLaurent g(w);
    int nmono = rng.pick(1, 3);
    for (int t = 0; t < nmono; ++t) {
        std::vector<int> e(r);
        for (int& x : e) x = rng.pick(0, 2);
        g.add_term(e, rng.nonzero(-3, 3));
    }
    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 0);
    MultiLaurent sym(w);
    do {
        sym = sym + g.permute(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sym;
}

const std::vector<std::vector<std::vector<Integer>>> kGrams = {
    {{2}}, {{2, -1}, {-1, 2}}, {{2, 0}, {0, 4}}};

LatticeVector random_alpha(Rng& rng, int rank, int amax) {
    LatticeVector a(rank, Rational(0));
    bool nz = false;
    while (!nz) {
        for (auto& c : a) {
            int v = rng.pick(-amax, amax);
            c = v;
            nz = nz || v != 0;
        }
    }
    return a;
}

// Divided-power campaign shared by criteria 4, 5 and 8: sweeps modes in
// [-4, 4] and checks every nonzero output, stashing it for criterion 12.
bool divided_power_campaign(std::uint64_t seed, int cases, int max_degree, int amax,
                            int max_r, bool general_words, const LatticeVector* coset,
                            const LatticePtr& coset_lattice) {
    Rng rng(seed);
    bool ok = true;
    for (int c = 0; c < cases; ++c) {
        LatticePtr lat = coset ? coset_lattice : Lattice::make(kGrams[c % kGrams.size()]);
        LatticeVector tag = coset ? *coset : zero_vector(lat->rank());
        FockElement u = random_element(lat, tag, rng.pick(0, max_degree), seed * 977 + c);
        LatticeVector alpha = random_alpha(rng, lat->rank(), amax);
        VertexWord v{{}, alpha};
        if (general_words) {
            int shape = rng.pick(0, lat->rank() > 1 ? 2 : 1);
            if (shape == 0)
                v.heis = {{alpha, 1}};
            else if (shape == 1)
                v.heis = {{alpha, 2}};
            else {  // e1(-1)e2(-1)e^{e1}
                LatticeVector e1 = zero_vector(lat->rank()), e2 = e1;
                e1[0] = 1;
                e2[1] = 1;
                v = VertexWord{{{e1, 1}, {e2, 1}}, e1};
            }
        }
        int r = rng.pick(1, max_r);
        for (int n = -4; n <= 4; ++n) {
            FockElement out = divided_power(v, n, r, u);
            if (out.is_zero()) continue;
            if (!integrality_check(out).integral) {
                std::fprintf(stderr, "  non-integral divided power at case %d, n=%d\n", c, n);
                ok = false;
            }
            g_outputs.push_back(std::move(out));
        }
    }
    return ok;
}

bool garland_campaign(std::uint64_t seed, int cases, const LatticeVector* coset,
                      const LatticePtr& coset_lattice) {
    Rng rng(seed);
    bool ok = true;
    for (int c = 0; c < cases; ++c) {
        LatticePtr lat = coset ? coset_lattice : Lattice::make(kGrams[c % kGrams.size()]);
        LatticeVector tag = coset ? *coset : zero_vector(lat->rank());
        FockElement u = random_element(lat, tag, rng.pick(0, 4), seed * 553 + c);
        FockElement out = garland_apply(rng.pick(0, lat->rank() - 1), rng.pick(1, 4),
                                        rng.pick(0, 4), u);
        if (!out.is_zero() && !integrality_check(out).integral) {
            std::fprintf(stderr, "  non-integral garland output at case %d\n", c);
            ok = false;
        }
        if (!out.is_zero()) g_outputs.push_back(std::move(out));
    }
    return ok;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    run(1, "Schur equivalence", 10, [] {
        for (int n = 0; n <= 6; ++n)
            for (auto& lam : partitions_of(n))
                if (!(schur_by_vertex(lam) == jacobi_trudi(lam))) return false;
        return true;
    });

    run(2, "H/S unimodularity", 30, [] {
        for (int deg = 1; deg <= 8; ++deg) {
            Rational d = det(transition_matrix(deg, Basis::H, Basis::S));
            if (d != 1 && d != -1) return false;
        }
        return true;
    });

    run(3, "Vandermonde divisibility", 60, [] {
        auto diag = [](int r, int lo, int hi) {
            MultiLaurent g(Window::uniform(r, lo, hi));
            g.add_term(std::vector<int>(r, 0), 1);
            return g;
        };
        if (lemma_divisibility(diag(2, -4, 4), 2, 2, 1).coefficient != -2) return false;
        if (lemma_divisibility(diag(3, -6, 6), 3, 2, 2).coefficient != -6) return false;
        Rng rng(20240907);
        for (int r = 2; r <= 4; ++r)
            for (int k = 1; k <= 3; ++k)
                for (int c = 0; c < 20; ++c) {
                    MultiLaurent g = random_symmetric(rng, r, k);
                    int n = rng.pick(0, 2);
                    if (!lemma_divisibility(g, r, k, n).divisible) return false;
                }
        return true;
    });

    run(4, "divided-power integrality", 300, [] {
        return divided_power_campaign(41, 50, 6, 2, 3, false, nullptr, nullptr);
    });

    run(5, "general divided powers", 300, [] {
        return divided_power_campaign(52, 25, 4, 1, 2, true, nullptr, nullptr);
    });

    run(6, "commuting-sum divided powers", 0, [] {
        auto lat = Lattice::make({{2, 0}, {0, 4}});
        LatticeVector e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
        VertexWord v1{{}, e1}, v2{{}, e2};
        Rng rng(63);
        for (int c = 0; c < 10; ++c) {
            FockElement u = random_element(lat, zero_vector(2), rng.pick(0, 4), 6300 + c);
            int r = rng.pick(1, 3);
            for (int n = -3; n <= 3; ++n) {
                auto dp = [&](const VertexWord& w, int rr, const FockElement& x) {
                    return rr == 0 ? x : divided_power(w, n, rr, x);
                };
                FockElement out(lat, zero_vector(2));
                for (int a = 0; a <= r; ++a) out += dp(v1, a, dp(v2, r - a, u));
                if (!out.is_zero() && !integrality_check(out).integral) return false;
            }
        }
        return true;
    });

    run(7, "Garland integrality", 60, [] {
        for (int k = 1; k <= 4; ++k)
            for (int n = 0; n <= 6; ++n) {
                SymPoly g = garland_poly(k, n);
                for (auto& [key, c] : g.terms())
                    if (denominator(c) != 1) return false;
            }
        return garland_campaign(71, 25, nullptr, nullptr);
    });

    run(8, "module suite", 0, [] {
        auto a1 = Lattice::make({{2}});
        LatticeVector half{Rational(1, 2)};
        auto a2 = Lattice::make({{2, -1}, {-1, 2}});
        LatticeVector third;
        for (auto& rep : a2->dual_coset_reps())
            if (!is_integral_vector(rep)) {
                third = rep;
                break;
            }
        bool ok = divided_power_campaign(81, 25, 4, 1, 3, false, &half, a1);
        ok = garland_campaign(82, 12, &half, a1) && ok;
        ok = divided_power_campaign(83, 25, 4, 1, 3, false, &third, a2) && ok;
        ok = garland_campaign(84, 12, &third, a2) && ok;
        return ok;
    });

    run(9, "product formula", 0, [] {
        auto a1 = Lattice::make({{2}});
        auto a2 = Lattice::make({{2, -1}, {-1, 2}});
        LatticeVector al{Rational(1)};
        LatticeVector e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
        for (int r = 1; r <= 2; ++r) {
            std::vector<std::vector<LatticeVector>> blists1 = {{}, {al}, {al, al}};
            for (auto& bl : blists1)
                if (!product_formula_check(a1, al, r, bl, 3, 3)) return false;
            std::vector<std::vector<LatticeVector>> blists2 = {{}, {e2}, {e1, e2}};
            for (auto& bl : blists2)
                if (!product_formula_check(a2, e1, r, bl, 3, 3)) return false;
        }
        return true;
    });

    run(10, "contraction/Wick/crossing", 0, [] {
        auto a1 = Lattice::make({{2}});
        auto a2 = Lattice::make({{2, -1}, {-1, 2}});
        LatticeVector al{Rational(1)};
        LatticeVector e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
        if (!contraction_check(a1, al, al, 5)) return false;
        if (!contraction_check(a2, e1, e2, 5)) return false;
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                if (!wick_commutator_check(a1, al, al, m, n, 5)) return false;
        if (!lemma41_check(a1, {{al, 1}}, {al}, 5)) return false;
        if (!lemma41_check(a2, {{e1, 1}, {e2, 2}}, {e1}, 5)) return false;
        FockElement sample = heis_mode(al, -1, FockElement::vacuum(a1));
        if (!lemma43_plus_check(a1, {{al, 1}}, al, sample, 5)) return false;
        if (!lemma43_minus_check(a1, {{al, 1}}, al, sample, 5, 5)) return false;
        return true;
    });

    run(11, "exp automorphism", 0, [] {
        auto a1 = Lattice::make({{2}});
        LatticeVector al{Rational(1)};
        VertexWord v{{}, al};
        FockElement eminus = FockElement::charge_vector(a1, scale(al, Rational(-1)));
        for (Integer t : {Integer(1), Integer(-3)}) {
            FockElement want = eminus + FockElement::vacuum(a1) * Rational(t);
            if (!(exp_mode(v, 1, t, eminus, 12) == want)) return false;
        }
        int verified = 0;
        for (int c = 0; verified < 10 && c < 40; ++c) {
            FockElement u = random_element(a1, zero_vector(1), 3, 1100 + c);
            try {
                FockElement fwd = exp_mode(v, 1, 1, u, 12);
                FockElement back = exp_mode(v, 1, -1, fwd, 12);
                if (!(back == u)) return false;
                ++verified;
            } catch (const CapExceededError&) {
                // nilpotence did not hold within the cap; not a counterexample
            }
        }
        return verified == 10;
    });

    run(12, "mod-p reduction of all outputs", 0, [] {
        for (int p : {2, 3, 5})
            for (const FockElement& u : g_outputs) reduce_mod_p(u, p);
        return !g_outputs.empty();
    });

    run(13, "byte-identical verify runs", 0, [&cli] {
        if (cli.empty()) {
            std::fprintf(stderr, "  no CLI path given\n");
            return false;
        }
        std::string r1 = "acceptance_verify_1.json", r2 = "acceptance_verify_2.json";
        for (const std::string& out : {r1, r2}) {
            std::string cmd = cli + " verify --seed 7 --preset default --out " + out;
            if (int rc = std::system(cmd.c_str()); rc != 0) {
                std::fprintf(stderr, "  verify run failed, status %d\n", rc);
                return false;
            }
        }
        std::string b1 = slurp(r1), b2 = slurp(r2);
        std::remove(r1.c_str());
        std::remove(r2.c_str());
        return !b1.empty() && b1 == b2;
    });

    if (g_failures == 0) {
        std::printf("all 13 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}

#include "lva/harness.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "lva/json_io.hpp"
#include "lva/oracle.hpp"
#include "lva/sympoly.hpp"
#include "lva/vertexops.hpp"

namespace lva {

namespace {

// uniform draws via modulo on mt19937_64 keep reports byte-identical across
// standard libraries (uniform_int_distribution is not portable)
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) {
        if (hi < lo) return lo;
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::mt19937_64 eng;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = seed ^ (a * 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full);
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDull;
    x ^= x >> 33;
    return x;
}

struct CaseRecord {
    std::string id;
    Json params;
    bool pass;
    Json witness;  // null when passing
};

struct SuiteRecord {
    std::string name;
    std::vector<CaseRecord> cases;
};

LatticeVector random_l_vector(const LatticePtr& lat, Rng& rng, int lo, int hi,
                              bool nonzero) {
    while (true) {
        LatticeVector v = zero_vector(lat->rank());
        bool all_zero = true;
        for (int i = 0; i < lat->rank(); ++i) {
            int c = rng.uniform(lo, hi);
            v[i] = c;
            if (c != 0) all_zero = false;
        }
        if (!nonzero || !all_zero) return v;
    }
}

// greedy counterexample shrinking: drop terms while the predicate still fails
FockElement shrink_failure(const FockElement& elem,
                           const std::function<bool(const FockElement&)>& still_fails) {
    FockElement cur = elem;
    bool changed = true;
    while (changed && cur.terms().size() > 1) {
        changed = false;
        for (auto& [key, c] : cur.terms()) {
            FockElement cand(cur.lattice(), cur.coset());
            for (auto& [k2, c2] : cur.terms())
                if (!(k2 == key)) cand.add_term(k2.first, k2.second, c2);
            if (!cand.is_zero() && still_fails(cand)) {
                cur = cand;
                changed = true;
                break;
            }
        }
    }
    return cur;
}

Json integrality_witness(const FockElement& input, const FockElement& output) {
    auto v = integrality_check(output);
    Json w;
    w["input"] = fock_json(input);
    w["witness_coeff"] = rational_to_string(v.witness_coeff);
    return w;
}

std::string gram_label(const std::vector<std::vector<Integer>>& gram) {
    std::string s = "[";
    for (std::size_t i = 0; i < gram.size(); ++i) {
        s += i ? ";" : "";
        for (std::size_t j = 0; j < gram[i].size(); ++j)
            s += (j ? "," : "") + gram[i][j].str();
    }
    return s + "]";
}

} // namespace

SuiteConfig SuiteConfig::preset_default(std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.grams = {{{2}}, {{2, -1}, {-1, 2}}, {{2, 0}, {0, 4}}};
    cfg.max_degree = 4;
    cfg.max_r = 3;
    cfg.mode_lo = -4;
    cfg.mode_hi = 4;
    cfg.include_cosets = true;
    cfg.seed = seed;
    cfg.case_count = 6;
    cfg.primes = {2, 3, 5};
    return cfg;
}

FockElement random_element(const LatticePtr& lattice, const LatticeVector& coset,
                           int max_degree, std::uint64_t seed) {
    Rng rng(seed);
    const int d = lattice->rank();
    HBasisExpansion h;
    int nterms = rng.uniform(1, 5);
    for (int t = 0; t < nterms; ++t) {
        int rem = rng.uniform(0, max_degree);
        std::vector<std::pair<int, Partition>> dirs;
        for (int dir = 0; dir < d; ++dir) {
            int w = (dir == d - 1) ? rem : rng.uniform(0, rem);
            rem -= w;
            std::vector<int> parts;
            while (w > 0) {
                int p = rng.uniform(1, w);
                parts.push_back(p);
                w -= p;
            }
            if (!parts.empty()) dirs.push_back({dir, Partition::from_unsorted(std::move(parts))});
        }
        LatticeVector charge = coset;
        // small charges keep <alpha,eta> moderate, which bounds the degree of
        // mode outputs in the campaigns
        for (int i = 0; i < d; ++i) charge[i] += rng.uniform(-1, 1);
        int coeff = rng.uniform(-3, 3);
        if (coeff == 0) coeff = 1;
        HBasisKey key{std::move(dirs), std::move(charge)};
        h[key] += coeff;
    }
    for (auto it = h.begin(); it != h.end();)
        it = (it->second == 0) ? h.erase(it) : std::next(it);
    if (h.empty()) h[HBasisKey{{}, coset}] = 1;
    return from_h_basis(lattice, coset, h);
}

namespace {

void run_prop22(const SuiteConfig&, SuiteRecord& suite) {
    for (auto& lam : partitions_up_to(6)) {
        if (lam.empty()) continue;
        SymPoly lhs = schur_by_vertex(lam);
        SymPoly rhs = change_basis(jacobi_trudi(lam), Basis::P);
        Json parts = Json::array();
        for (int p : lam.parts()) parts.push_back(p);
        suite.cases.push_back({"lambda=" + parts.dump(), Json{{"lambda", parts}},
                               lhs == rhs, Json(nullptr)});
    }
}

void run_unimodularity(const SuiteConfig&, SuiteRecord& suite) {
    for (int deg = 1; deg <= 8; ++deg) {
        Rational det = matrix_det(transition_matrix(deg, Basis::H, Basis::S));
        bool ok = (det == 1 || det == -1);
        suite.cases.push_back({"deg=" + std::to_string(deg),
                               Json{{"deg", deg}, {"det", rational_to_string(det)}}, ok,
                               Json(nullptr)});
    }
}

void run_lemma32(const SuiteConfig& cfg, SuiteRecord& suite) {
    const int cases_per = 20;
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 3; ++k)
            for (int c = 0; c < cases_per; ++c) {
                Rng rng(mix_seed(cfg.seed, 3200 + r * 10 + k, c));
                Window win = Window::uniform(r, -3, 3 + k * (r - 1));
                MultiLaurent f(win);
                int nterms = rng.uniform(1, 4);
                for (int t = 0; t < nterms; ++t) {
                    std::vector<int> e(r);
                    for (int i = 0; i < r; ++i) e[i] = rng.uniform(-2, 2);
                    int coeff = rng.uniform(-5, 5);
                    if (coeff == 0) coeff = 1;
                    f.add_term(e, coeff);
                }
                // symmetrize over all of S_r
                std::vector<int> sigma(r);
                for (int i = 0; i < r; ++i) sigma[i] = i;
                MultiLaurent g(win);
                do {
                    g = g + f.permute(sigma);
                } while (std::next_permutation(sigma.begin(), sigma.end()));
                int n = rng.uniform(-1, 2);
                auto res = lemma_divisibility(g, r, k, n);
                Json params{{"r", r}, {"k", k}, {"n", n}, {"case", c}};
                Json witness = res.divisible
                                   ? Json(nullptr)
                                   : Json{{"coefficient", rational_to_string(res.coefficient)}};
                suite.cases.push_back({"r=" + std::to_string(r) + ",k=" + std::to_string(k) +
                                           ",case=" + std::to_string(c),
                                       params, res.divisible, witness});
            }
}

// shared driver for the divided-power integrality campaigns
void divided_power_campaign(const SuiteConfig& cfg, SuiteRecord& suite, bool general_words,
                            bool on_cosets) {
    int lat_idx = 0;
    for (auto& gram : cfg.grams) {
        auto lat = Lattice::make(gram);
        std::vector<LatticeVector> cosets;
        if (!on_cosets) {
            cosets.push_back(zero_vector(lat->rank()));
        } else {
            for (auto& rep : lat->dual_coset_reps())
                if (!is_integral_vector(rep)) {
                    cosets.push_back(rep);
                    break;
                }
            if (cosets.empty()) continue;  // self-dual lattice, nothing to do
        }
        for (auto& coset : cosets) {
            for (int c = 0; c < cfg.case_count; ++c) {
                Rng rng(mix_seed(cfg.seed, 3300 + lat_idx * 17 + (general_words ? 7 : 0) +
                                               (on_cosets ? 131 : 0),
                                 c));
                FockElement elem =
                    random_element(lat, coset, cfg.max_degree, rng.eng());
                // general words get short alpha: the A^± layers multiply the
                // series breadth, so large <alpha,alpha> is priced out
                int amax = general_words ? 1 : 2;
                LatticeVector alpha = random_l_vector(lat, rng, -amax, amax, true);
                int max_r = general_words ? std::min(cfg.max_r, 2) : cfg.max_r;
                int r = rng.uniform(1, max_r);
                VertexWord v;
                v.gamma = alpha;
                std::string vlabel = "e^alpha";
                if (general_words) {
                    int which = rng.uniform(0, lat->rank() >= 2 ? 2 : 1);
                    if (which == 0) {
                        v.heis = {{alpha, 1}};
                        vlabel = "alpha(-1)e^alpha";
                    } else if (which == 1) {
                        v.heis = {{alpha, 2}};
                        vlabel = "alpha(-2)e^alpha";
                    } else {
                        LatticeVector e1 = zero_vector(lat->rank());
                        LatticeVector e2 = zero_vector(lat->rank());
                        e1[0] = 1;
                        e2[1] = 1;
                        v.heis = {{e1, 1}, {e2, 1}};
                        v.gamma = e1;
                        vlabel = "e1(-1)e2(-1)e^{e1}";
                    }
                }
                bool ok = true;
                Json witness(nullptr);
                int modes_hit = 0;
                for (int n = cfg.mode_lo; n <= cfg.mode_hi && ok; ++n) {
                    FockElement w = divided_power(v, n, r, elem);
                    if (w.is_zero()) continue;
                    ++modes_hit;
                    if (!integrality_check(w).integral) {
                        ok = false;
                        auto fails = [&](const FockElement& cand) {
                            return !integrality_check(divided_power(v, n, r, cand)).integral;
                        };
                        FockElement small = shrink_failure(elem, fails);
                        witness = integrality_witness(small, divided_power(v, n, r, small));
                        witness["n"] = n;
                    }
                }
                Json params{{"lattice", gram_label(gram)},
                            {"coset", vector_json(coset)},
                            {"alpha", vector_json(alpha)},
                            {"v", vlabel},
                            {"r", r},
                            {"modes_with_output", modes_hit}};
                suite.cases.push_back({"lat=" + std::to_string(lat_idx) + ",case=" +
                                           std::to_string(c),
                                       params, ok, witness});
            }
        }
        ++lat_idx;
    }
}

void run_cor34(const SuiteConfig& cfg, SuiteRecord& suite) {
    auto lat = Lattice::make({{2, 0}, {0, 4}});
    LatticeVector e1 = zero_vector(2), e2 = zero_vector(2);
    e1[0] = 1;
    e2[1] = 1;
    VertexWord v1{{}, e1}, v2{{}, e2};
    for (int c = 0; c < std::max(cfg.case_count, 10); ++c) {
        Rng rng(mix_seed(cfg.seed, 3400, c));
        FockElement elem = random_element(lat, zero_vector(2), cfg.max_degree, rng.eng());
        int r = rng.uniform(1, cfg.max_r);
        int n = rng.uniform(cfg.mode_lo, cfg.mode_hi);
        // (A+B)^{(r)} = sum_{i+j=r} A^{(i)} B^{(j)} for commuting modes
        FockElement total(lat, zero_vector(2));
        for (int i = 0; i <= r; ++i) {
            FockElement part = elem;
            if (r - i > 0) part = divided_power(v2, n, r - i, part);
            if (!part.is_zero() && i > 0) part = divided_power(v1, n, i, part);
            total += part;
        }
        bool ok = total.is_zero() || integrality_check(total).integral;
        Json witness = ok ? Json(nullptr) : integrality_witness(elem, total);
        suite.cases.push_back({"case=" + std::to_string(c),
                               Json{{"r", r}, {"n", n}}, ok, witness});
    }
}

void run_garland(const SuiteConfig& cfg, SuiteRecord& suite, bool on_cosets) {
    if (!on_cosets)
        for (int k = 1; k <= 4; ++k)
            for (int n = 0; n <= 6; ++n) {
                bool ok = garland_poly(k, n).is_integral();
                suite.cases.push_back({"poly k=" + std::to_string(k) + ",n=" +
                                           std::to_string(n),
                                       Json{{"k", k}, {"n", n}}, ok, Json(nullptr)});
            }
    int lat_idx = 0;
    for (auto& gram : cfg.grams) {
        auto lat = Lattice::make(gram);
        LatticeVector coset = zero_vector(lat->rank());
        if (on_cosets) {
            bool found = false;
            for (auto& rep : lat->dual_coset_reps())
                if (!is_integral_vector(rep)) {
                    coset = rep;
                    found = true;
                    break;
                }
            if (!found) {
                ++lat_idx;
                continue;
            }
        }
        for (int c = 0; c < cfg.case_count; ++c) {
            Rng rng(mix_seed(cfg.seed, 3500 + lat_idx + (on_cosets ? 131 : 0), c));
            FockElement elem = random_element(lat, coset, cfg.max_degree, rng.eng());
            int dir = rng.uniform(0, lat->rank() - 1);
            int k = rng.uniform(1, 3);
            int n = rng.uniform(0, 4);
            FockElement w = garland_apply(dir, k, n, elem);
            bool ok = integrality_check(w).integral;
            Json witness = ok ? Json(nullptr) : integrality_witness(elem, w);
            suite.cases.push_back({"lat=" + std::to_string(lat_idx) + ",case=" +
                                       std::to_string(c),
                                   Json{{"lattice", gram_label(gram)},
                                        {"coset", vector_json(coset)},
                                        {"dir", dir + 1},
                                        {"k", k},
                                        {"n", n}},
                                   ok, witness});
        }
        ++lat_idx;
    }
}

void run_exp_automorphism(const SuiteConfig& cfg, SuiteRecord& suite) {
    auto lat = Lattice::make({{2}});
    LatticeVector alpha{Rational(1)};
    VertexWord v{{}, alpha};
    // pinned value: exp(t y_1) e^{-alpha} = e^{-alpha} + t 1
    {
        FockElement u = FockElement::charge_vector(lat, LatticeVector{Rational(-1)});
        FockElement got = exp_mode(v, 1, 1, u, 12);
        FockElement want = u + FockElement::vacuum(lat);
        suite.cases.push_back({"pinned exp(y1)e^{-alpha}", Json::object(), got == want,
                               Json(nullptr)});
    }
    for (int c = 0; c < std::max(cfg.case_count, 10); ++c) {
        Rng rng(mix_seed(cfg.seed, 3600, c));
        FockElement u = random_element(lat, zero_vector(1), cfg.max_degree, rng.eng());
        bool ok = true;
        try {
            FockElement w = exp_mode(v, 1, 1, u, 12);
            FockElement back = exp_mode(v, 1, -1, w, 12);
            ok = (back == u);
        } catch (const CapExceededError&) {
            ok = false;
        }
        suite.cases.push_back({"case=" + std::to_string(c), Json::object(), ok,
                               Json(nullptr)});
    }
}

void run_sec4_identities(const SuiteConfig&, SuiteRecord& suite) {
    auto a1 = Lattice::make({{2}});
    auto a2 = Lattice::make({{2, -1}, {-1, 2}});
    auto d2 = Lattice::make({{2, 0}, {0, 4}});
    LatticeVector a{Rational(1)};
    LatticeVector e1 = zero_vector(2), e2 = zero_vector(2);
    e1[0] = 1;
    e2[1] = 1;

    auto push = [&](const std::string& id, bool ok) {
        suite.cases.push_back({id, Json::object(), ok, Json(nullptr)});
    };

    push("contraction A1 alpha=beta", contraction_check(a1, a, a, 5));
    push("contraction A2 e1,e2", contraction_check(a2, e1, e2, 5));
    push("contraction orthogonal", contraction_check(d2, e1, e2, 5));
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) {
            push("wick A1 m=" + std::to_string(m) + ",n=" + std::to_string(n),
                 wick_commutator_check(a1, a, a, m, n, 4));
            push("wick A2 m=" + std::to_string(m) + ",n=" + std::to_string(n),
                 wick_commutator_check(a2, e1, e2, m, n, 4));
        }
    push("lemma4.1 k=1,l=1", lemma41_check(a1, {{a, 1}}, {a}, 3));
    push("lemma4.1 k=2,l=1", lemma41_check(a1, {{a, 1}, {a, 2}}, {a}, 3));
    push("lemma4.1 k=2,l=2 A2", lemma41_check(a2, {{e1, 1}, {e2, 2}}, {e1, e2}, 2));
    {
        FockElement s1 = FockElement::charge_vector(a1, a);
        FockElement s2 = multiply_creation(a, 1, s1);
        push("lemma4.3+ lam=(1)", lemma43_plus_check(a1, {{a, 1}}, a, s1, 4));
        push("lemma4.3+ lam=(2,1)", lemma43_plus_check(a1, {{a, 2}, {a, 1}}, a, s2, 3));
        push("lemma4.3- lam=(1)", lemma43_minus_check(a1, {{a, 1}}, a, s1, 3, 3));
        push("lemma4.3- lam=(2)", lemma43_minus_check(a1, {{a, 2}}, a, s2, 3, 3));
    }
    push("product formula A1 r=1", product_formula_check(a1, a, 1, {}, 3, 3));
    push("product formula A1 r=2", product_formula_check(a1, a, 2, {}, 2, 3));
    push("product formula A1 r=1 beta=alpha", product_formula_check(a1, a, 1, {a}, 3, 3));
    push("product formula A2 r=2 beta=(e2)",
         product_formula_check(a2, e1, 2, {e2}, 2, 2));
}

void run_mod_p(const SuiteConfig& cfg, SuiteRecord& suite) {
    int lat_idx = 0;
    for (auto& gram : cfg.grams) {
        auto lat = Lattice::make(gram);
        for (int c = 0; c < std::min(cfg.case_count, 4); ++c) {
            Rng rng(mix_seed(cfg.seed, 3700 + lat_idx, c));
            FockElement elem =
                random_element(lat, zero_vector(lat->rank()), cfg.max_degree, rng.eng());
            LatticeVector alpha = random_l_vector(lat, rng, -2, 2, true);
            VertexWord v{{}, alpha};
            int r = rng.uniform(1, cfg.max_r);
            int n = rng.uniform(cfg.mode_lo, cfg.mode_hi);
            FockElement w = divided_power(v, n, r, elem);
            bool ok = true;
            std::string failed_at;
            if (!w.is_zero()) {
                for (int p : cfg.primes) {
                    try {
                        (void)reduce_mod_p(w, p);
                    } catch (const std::exception&) {
                        ok = false;
                        failed_at = "p=" + std::to_string(p);
                    }
                }
            }
            suite.cases.push_back(
                {"lat=" + std::to_string(lat_idx) + ",case=" + std::to_string(c),
                 Json{{"lattice", gram_label(gram)}, {"r", r}, {"n", n}}, ok,
                 ok ? Json(nullptr) : Json{{"failed", failed_at}}});
        }
        ++lat_idx;
    }
}

} // namespace

Report run_suite(const SuiteConfig& config) {
    for (auto& gram : config.grams) (void)Lattice::make(gram);  // validate up front

    std::vector<SuiteRecord> records;
    // wall time goes to stderr only so the report stays byte-deterministic
    auto add = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteRecord rec{name, {}};
        fn(rec);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "[suite] " << name << " " << ms << " ms\n";
        records.push_back(std::move(rec));
    };

    add("prop2.2_schur_vertex", [&](SuiteRecord& r) { run_prop22(config, r); });
    add("thm3.1_unimodularity", [&](SuiteRecord& r) { run_unimodularity(config, r); });
    add("lemma3.2_divisibility", [&](SuiteRecord& r) { run_lemma32(config, r); });
    add("thm3.3_divided_powers",
        [&](SuiteRecord& r) { divided_power_campaign(config, r, false, false); });
    add("cor3.4_commuting_sum", [&](SuiteRecord& r) { run_cor34(config, r); });
    add("thm3.5_garland", [&](SuiteRecord& r) { run_garland(config, r, false); });
    add("thm4.4_general_divided_powers",
        [&](SuiteRecord& r) { divided_power_campaign(config, r, true, false); });
    add("thm4.6_exp_automorphism", [&](SuiteRecord& r) { run_exp_automorphism(config, r); });
    add("sec4_identities", [&](SuiteRecord& r) { run_sec4_identities(config, r); });
    add("modular_reduction", [&](SuiteRecord& r) { run_mod_p(config, r); });
    if (config.include_cosets) {
        add("module_divided_powers",
            [&](SuiteRecord& r) { divided_power_campaign(config, r, false, true); });
        add("module_garland", [&](SuiteRecord& r) { run_garland(config, r, true); });
    }

    Report report;
    report.all_passed = true;
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    {
        Json grams = Json::array();
        for (auto& g : config.grams) grams.push_back(gram_label(g));
        doc["config"] = Json{{"lattices", grams},
                             {"max_degree", config.max_degree},
                             {"max_r", config.max_r},
                             {"mode_window", Json::array({config.mode_lo, config.mode_hi})},
                             {"include_cosets", config.include_cosets},
                             {"seed", config.seed},
                             {"case_count", config.case_count},
                             {"primes", config.primes}};
    }
    Json suites = Json::array();
    for (auto& rec : records) {
        SuiteSummary sum{rec.name, 0, 0};
        Json cases = Json::array();
        for (auto& c : rec.cases) {
            (c.pass ? sum.passed : sum.failed)++;
            cases.push_back(Json{{"case_id", c.id},
                                 {"params", c.params},
                                 {"verdict", c.pass},
                                 {"witness", c.witness}});
        }
        if (sum.failed > 0) report.all_passed = false;
        suites.push_back(Json{{"suite", rec.name},
                              {"passed", sum.passed},
                              {"failed", sum.failed},
                              {"cases", cases}});
        report.summaries.push_back(sum);
    }
    doc["suites"] = suites;
    doc["all_passed"] = report.all_passed;
    report.json_text = doc.dump(2) + "\n";
    return report;
}

} // namespace lva

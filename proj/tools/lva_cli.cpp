#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lva/harness.hpp"
#include "lva/json_io.hpp"
#include "lva/vertexops.hpp"

namespace {

using namespace lva;

// flags accept either inline JSON or a path to a JSON file
Json read_json_arg(const std::string& s) {
    if (!s.empty() && (s[0] == '{' || s[0] == '[')) return Json::parse(s);
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("cannot open file: " + s);
    Json j;
    in >> j;
    return j;
}

LatticePtr load_lattice(const std::string& s) {
    Json j = read_json_arg(s);
    if (j.is_array()) j = Json{{"gram", j}};  // bare Gram matrix shorthand
    return lattice_from_json(j);
}

FockElement load_element(const LatticePtr& lat, const std::string& s) {
    if (s == "vacuum") return FockElement::vacuum(lat);
    return fock_from_json(lat, read_json_arg(s));
}

VertexWord word_from_json(const Json& j) {
    VertexWord v;
    v.gamma = vector_from_json(j.at("gamma"));
    if (j.contains("heis"))
        for (const auto& entry : j.at("heis"))
            v.heis.push_back({vector_from_json(entry.at(0)), entry.at(1).get<int>()});
    return v;
}

Json word_json(const VertexWord& v) {
    Json heis = Json::array();
    for (const auto& [a, m] : v.heis) heis.push_back(Json::array({vector_json(a), m}));
    return Json{{"heis", heis}, {"gamma", vector_json(v.gamma)}};
}

// per-direction Schur expansion: convert each direction's h-partition via the
// Pieri-rule transition and tensor the results
Json sbasis_json(const FockElement& e) {
    using SKey = std::pair<std::vector<std::pair<int, Partition>>, LatticeVector>;
    std::map<SKey, Rational> out;
    for (const auto& [hkey, c] : to_h_basis(e)) {
        std::vector<std::pair<std::vector<std::pair<int, Partition>>, Rational>> acc;
        acc.push_back({{}, c});
        for (const auto& [dir, mu] : hkey.dirs) {
            SymPoly s = change_basis(SymPoly::monomial(Basis::H, mu, 1), Basis::S);
            decltype(acc) next;
            for (const auto& [dirs, coeff] : acc)
                for (const auto& [skey, sc] : s.terms()) {
                    auto d2 = dirs;
                    if (!skey.empty()) d2.push_back({dir, skey});
                    next.push_back({std::move(d2), coeff * sc});
                }
            acc = std::move(next);
        }
        for (auto& [dirs, coeff] : acc) {
            auto [it, inserted] = out.emplace(SKey{dirs, hkey.charge}, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    Json terms = Json::array();
    for (const auto& [key, c] : out) {
        Json skey = Json::array();
        for (const auto& [dir, lam] : key.first) {
            Json parts = Json::array();
            for (int p : lam.parts()) parts.push_back(p);
            skey.push_back(Json::array({dir + 1, parts}));
        }
        terms.push_back(Json{{"coeff", rational_json(c)},
                             {"charge", vector_json(key.second)},
                             {"skey", skey}});
    }
    return terms;
}

Json element_document(const FockElement& e, const std::string& basis) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    if (basis == "p") {
        doc["basis"] = "p";
        doc["element"] = fock_json(e);
    } else if (basis == "h") {
        doc["basis"] = "h";
        doc["coset"] = vector_json(e.coset());
        doc["terms"] = hbasis_json(to_h_basis(e));
    } else if (basis == "s") {
        doc["basis"] = "s";
        doc["coset"] = vector_json(e.coset());
        doc["terms"] = sbasis_json(e);
    } else {
        throw std::invalid_argument("basis must be one of p, h, s");
    }
    return doc;
}

void emit(const Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << doc.dump(2) << "\n";
    }
}

int thread_budget() {
    // single in-flight command; LVA_THREADS caps hypothetical workers
    const char* env = std::getenv("LVA_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n < 1) throw std::invalid_argument("LVA_THREADS must be a positive integer");
    return n;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for integral forms of lattice vertex algebras"};
    app.require_subcommand(1);

    std::string lattice_arg, on_arg = "vacuum", v_arg, basis = "h", out_path, lambda_arg;
    std::string preset = "default";
    int n = 0, r = 1, k = 1, dir = 1, p = 2;
    std::uint64_t seed = 7;

    auto* act = app.add_subcommand("act", "apply one vertex-operator mode y_n(v)");
    act->add_option("--lattice", lattice_arg, "Gram matrix (JSON or file)")->required();
    act->add_option("--v", v_arg, "vertex word {\"heis\":[[coords,m],...],\"gamma\":[...]}")
        ->required();
    act->add_option("--n", n, "mode index")->required();
    act->add_option("--on", on_arg, "input element (JSON, file, or 'vacuum')");
    act->add_option("--basis", basis, "output basis: p, h, or s");
    act->add_option("--out", out_path, "write the document here instead of stdout");

    auto* dp = app.add_subcommand("divided-power", "apply y_n(v)^r / r! with integrality verdict");
    dp->add_option("--lattice", lattice_arg, "Gram matrix (JSON or file)")->required();
    dp->add_option("--v", v_arg, "vertex word")->required();
    dp->add_option("--n", n, "mode index")->required();
    dp->add_option("--r", r, "divided power order")->required();
    dp->add_option("--on", on_arg, "input element (JSON, file, or 'vacuum')");
    dp->add_option("--basis", basis, "output basis: p, h, or s");
    dp->add_option("--out", out_path, "output file");

    auto* gar = app.add_subcommand("garland", "Garland operator as a polynomial or applied to an element");
    gar->add_option("--k", k, "scaling index")->required();
    gar->add_option("--n", n, "degree")->required();
    gar->add_option("--lattice", lattice_arg, "Gram matrix (only with --on)");
    gar->add_option("--on", on_arg, "element to act on (requires --lattice)");
    gar->add_option("--dir", dir, "1-based lattice direction for --on");
    gar->add_option("--basis", basis, "output basis for --on results");
    gar->add_option("--out", out_path, "output file");

    auto* sch = app.add_subcommand("schur", "Schur function by determinant and by vertex operator");
    sch->add_option("--lambda", lambda_arg, "partition, e.g. 3,1,1")->required();
    sch->add_option("--out", out_path, "output file");

    auto* cos = app.add_subcommand("cosets", "dual coset representatives L'/L");
    cos->add_option("--lattice", lattice_arg, "Gram matrix (JSON or file)")->required();
    cos->add_option("--out", out_path, "output file");

    auto* ver = app.add_subcommand("verify", "run the full theorem suite");
    ver->add_option("--seed", seed, "campaign seed");
    ver->add_option("--preset", preset, "configuration preset (default)");
    ver->add_option("--out", out_path, "write the report here instead of stdout");

    auto* mp = app.add_subcommand("mod-p", "reduce an integral element mod p");
    mp->add_option("--lattice", lattice_arg, "Gram matrix (JSON or file)")->required();
    mp->add_option("--p", p, "prime modulus")->required();
    mp->add_option("--on", on_arg, "input element (JSON, file, or 'vacuum')");
    mp->add_option("--basis", basis, "output basis: p, h, or s");
    mp->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        (void)thread_budget();
        if (act->parsed()) {
            auto lat = load_lattice(lattice_arg);
            FockElement u = load_element(lat, on_arg);
            VertexWord v = word_from_json(read_json_arg(v_arg));
            FockElement w = y_general_mode(v, n, u);
            Json doc = element_document(w, basis);
            doc["command"] = "act";
            doc["v"] = word_json(v);
            doc["n"] = n;
            emit(doc, out_path);
        } else if (dp->parsed()) {
            auto lat = load_lattice(lattice_arg);
            FockElement u = load_element(lat, on_arg);
            VertexWord v = word_from_json(read_json_arg(v_arg));
            FockElement w = divided_power(v, n, r, u);
            auto verdict = integrality_check(w);
            Json doc = element_document(w, basis);
            doc["command"] = "divided-power";
            doc["v"] = word_json(v);
            doc["n"] = n;
            doc["r"] = r;
            doc["integral"] = verdict.integral;
            if (!verdict.integral)
                doc["witness_coeff"] = rational_json(verdict.witness_coeff);
            emit(doc, out_path);
        } else if (gar->parsed()) {
            if (gar->count("--on") || gar->count("--lattice")) {
                if (!gar->count("--on") || !gar->count("--lattice"))
                    throw std::invalid_argument("garland --on requires --lattice and vice versa");
                auto lat = load_lattice(lattice_arg);
                FockElement u = load_element(lat, on_arg);
                FockElement w = garland_apply(dir - 1, k, n, u);
                Json doc = element_document(w, basis);
                doc["command"] = "garland";
                doc["k"] = k;
                doc["n"] = n;
                doc["dir"] = dir;
                emit(doc, out_path);
            } else {
                Json doc;
                doc["schema_version"] = kSchemaVersion;
                doc["command"] = "garland";
                doc["k"] = k;
                doc["n"] = n;
                doc["poly"] = sympoly_json(garland_poly(k, n));
                emit(doc, out_path);
            }
        } else if (sch->parsed()) {
            std::vector<int> parts;
            std::stringstream ss(lambda_arg);
            for (std::string tok; std::getline(ss, tok, ',');)
                if (!tok.empty()) parts.push_back(std::stoi(tok));
            Partition lam = Partition::from_unsorted(parts);
            SymPoly det = jacobi_trudi(lam);
            SymPoly vop = schur_by_vertex(lam);
            Json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "schur";
            Json lj = Json::array();
            for (int q : lam.parts()) lj.push_back(q);
            doc["lambda"] = lj;
            doc["jacobi_trudi"] = sympoly_json(det);
            doc["schur_by_vertex"] = sympoly_json(vop);
            doc["equal"] = (vop == change_basis(det, Basis::P));
            emit(doc, out_path);
        } else if (cos->parsed()) {
            auto lat = load_lattice(lattice_arg);
            Json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "cosets";
            doc["lattice"] = lattice_json(*lat);
            Json reps = Json::array();
            for (const auto& rep : lat->dual_coset_reps()) reps.push_back(vector_json(rep));
            doc["reps"] = reps;
            emit(doc, out_path);
        } else if (ver->parsed()) {
            if (preset != "default")
                throw std::invalid_argument("unknown preset: " + preset);
            Report report = run_suite(SuiteConfig::preset_default(seed));
            for (const auto& s : report.summaries)
                std::cerr << s.suite << ": " << s.passed << " passed, " << s.failed
                          << " failed\n";
            if (out_path.empty()) {
                std::cout << report.json_text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
                out << report.json_text;
            }
            return report.all_passed ? 0 : 1;
        } else if (mp->parsed()) {
            auto lat = load_lattice(lattice_arg);
            FockElement u = load_element(lat, on_arg);
            FockElement w = reduce_mod_p(u, p);
            Json doc = element_document(w, basis);
            doc["command"] = "mod-p";
            doc["p"] = p;
            emit(doc, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

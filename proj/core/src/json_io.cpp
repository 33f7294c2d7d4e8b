#include "lva/json_io.hpp"

#include <stdexcept>

namespace lva {

Json rational_json(const Rational& q) {
    if (is_integer(q)) {
        Integer n = numerator(q);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return Json(n.convert_to<std::int64_t>());
    }
    return Json(rational_to_string(q));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw std::invalid_argument("expected integer or \"num/den\" string");
}

Json vector_json(const LatticeVector& v) {
    Json arr = Json::array();
    for (auto& c : v) arr.push_back(rational_json(c));
    return arr;
}

LatticeVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array");
    LatticeVector v;
    for (auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json lattice_json(const Lattice& lat) {
    Json gram = Json::array();
    for (auto& row : lat.gram()) {
        Json r = Json::array();
        for (auto& x : row) r.push_back(x.convert_to<std::int64_t>());
        gram.push_back(r);
    }
    return Json{{"gram", gram}};
}

LatticePtr lattice_from_json(const Json& j) {
    if (!j.contains("gram")) throw std::invalid_argument("lattice JSON needs \"gram\"");
    std::vector<std::vector<Integer>> gram;
    for (auto& row : j.at("gram")) {
        std::vector<Integer> r;
        for (auto& x : row) r.push_back(Integer(x.get<std::int64_t>()));
        gram.push_back(std::move(r));
    }
    return Lattice::make(std::move(gram));
}

Json sympoly_json(const SymPoly& f) {
    Json terms = Json::array();
    for (auto& [key, c] : f.terms()) {
        Json k = Json::array();
        if (f.basis() == Basis::S) {
            for (int p : key.parts()) k.push_back(p);
        } else {
            const auto& parts = key.parts();
            for (std::size_t i = 0; i < parts.size();) {
                std::size_t j2 = i;
                while (j2 < parts.size() && parts[j2] == parts[i]) ++j2;
                k.push_back(Json::array({parts[i], static_cast<int>(j2 - i)}));
                i = j2;
            }
        }
        terms.push_back(Json{{"key", k}, {"coeff", rational_to_string(c)}});
    }
    return Json{{"basis", basis_name(f.basis())}, {"terms", terms}};
}

SymPoly sympoly_from_json(const Json& j) {
    Basis b = basis_from_name(j.at("basis").get<std::string>());
    SymPoly f(b);
    for (auto& t : j.at("terms")) {
        std::vector<int> parts;
        for (auto& k : t.at("key")) {
            if (b == Basis::S) {
                parts.push_back(k.get<int>());
            } else {
                int gen = k.at(0).get<int>(), exp = k.at(1).get<int>();
                for (int e = 0; e < exp; ++e) parts.push_back(gen);
            }
        }
        f.add_term(Partition::from_unsorted(std::move(parts)),
                   rational_from_json(t.at("coeff")));
    }
    return f;
}

Json fock_json(const FockElement& e) {
    Json terms = Json::array();
    for (auto& [key, c] : e.terms()) {
        Json mono = Json::array();
        for (auto& f : key.first.factors())
            mono.push_back(Json::array({f.dir + 1, f.mode, f.exp}));
        terms.push_back(Json{{"coeff", rational_to_string(c)},
                             {"charge", vector_json(key.second)},
                             {"monomial", mono}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"coset", vector_json(e.coset())},
                {"terms", terms}};
}

FockElement fock_from_json(const LatticePtr& lattice, const Json& j) {
    LatticeVector coset = j.contains("coset") ? vector_from_json(j.at("coset"))
                                              : zero_vector(lattice->rank());
    FockElement e(lattice, coset);
    for (auto& t : j.at("terms")) {
        std::vector<PSMonomial::Factor> f;
        if (t.contains("monomial"))
            for (auto& m : t.at("monomial"))
                f.push_back({m.at(0).get<int>() - 1, m.at(1).get<int>(), m.at(2).get<int>()});
        for (auto& fac : f)
            if (fac.dir < 0 || fac.dir >= lattice->rank())
                throw std::invalid_argument("monomial direction out of range");
        e.add_term(PSMonomial(std::move(f)), vector_from_json(t.at("charge")),
                   rational_from_json(t.at("coeff")));
    }
    return e;
}

Json hbasis_json(const HBasisExpansion& h) {
    Json terms = Json::array();
    for (auto& [key, c] : h) {
        Json hk = Json::array();
        for (auto& [dir, mu] : key.dirs) {
            Json parts = Json::array();
            for (int p : mu.parts()) parts.push_back(p);
            hk.push_back(Json::array({dir + 1, parts}));
        }
        terms.push_back(Json{{"coeff", rational_to_string(c)},
                             {"charge", vector_json(key.charge)},
                             {"hkey", hk}});
    }
    return Json{{"schema_version", kSchemaVersion}, {"terms", terms}};
}

} // namespace lva

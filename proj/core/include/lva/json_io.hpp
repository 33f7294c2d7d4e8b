#ifndef LVA_JSON_IO_HPP
#define LVA_JSON_IO_HPP

#include <json.hpp>

#include "lva/fock.hpp"
#include "lva/lattice.hpp"
#include "lva/sympoly.hpp"

namespace lva {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json rational_json(const Rational& q);          // "num/den" string, bare int when integral
Rational rational_from_json(const Json& j);

Json vector_json(const LatticeVector& v);
LatticeVector vector_from_json(const Json& j);

Json lattice_json(const Lattice& lat);
LatticePtr lattice_from_json(const Json& j);

/// {"basis":"H","terms":[{"key":[[2,1]],"coeff":"2/1"}, ...]}; P/H keys are
/// [generator, exponent] pairs, S keys are the partition itself.
Json sympoly_json(const SymPoly& f);
SymPoly sympoly_from_json(const Json& j);

/// {"coset":[...], "terms":[{"coeff":..., "charge":[...], "monomial":[[i,n,e],...]}]}
/// with 1-based direction indices.
Json fock_json(const FockElement& e);
FockElement fock_from_json(const LatticePtr& lattice, const Json& j);

/// h-basis expansion with "hkey": [[i, [parts...]], ...].
Json hbasis_json(const HBasisExpansion& h);

} // namespace lva

#endif

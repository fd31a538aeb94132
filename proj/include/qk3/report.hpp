#pragma once

#include "qk3/k3.hpp"
#include "qk3/lattice.hpp"

#include <json.hpp>

namespace qk3 {

/// nlohmann::json keeps object keys sorted, so dumps are deterministic.
using Json = nlohmann::json;

Json to_json(const ProjPoint& p);
Json to_json(const Matrix& m);  ///< row-major list of entry strings
Json to_json(const GaloisReport& r);
Json to_json(const CurveSection& s);
Json to_json(const FixedLocus& f);
Json to_json(const FixedLocusReport& r);
/// Fields: character, curves, n, a, type_tuple, table_source.
Json to_json(const AutomorphismType& t);
Json to_json(const ReducedGram& r);

/// Values quoted rather than derived: diagonal quartics are all isomorphic
/// to the Fermat quartic, a singular K3 surface.
Json fermat_constants();

}  // namespace qk3

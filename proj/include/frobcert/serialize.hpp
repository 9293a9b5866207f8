#ifndef FROBCERT_SERIALIZE_HPP
#define FROBCERT_SERIALIZE_HPP

// JSON forms of the library objects. Every writer has a matching reader and
// the pair round-trips exactly.

#include "json.hpp"

#include "frobcert/cohomology.hpp"
#include "frobcert/polyring.hpp"
#include "frobcert/products.hpp"
#include "frobcert/semilinear.hpp"

namespace frobcert {

using Json = nlohmann::json;

Json vector_to_json(const Vector& v);
Vector vector_from_json(FieldDesc field, const Json& j);

Json symbol_to_json(const CechSymbol& s);
CechSymbol symbol_from_json(const Json& j);

/// {"degree": d | null, "terms": [{"a","b","c","coeff"}]}
Json class_to_json(const GradedHypersurface& h, const CohomClass& eta);
CohomClass class_from_json(FieldDesc field, const Json& j);

/// {"bidegree": [d1, d2] | null, "terms": [{"left", "right", "coeff"}]}
Json tensor_to_json(const GradedHypersurface& h, const TensorClass& xi);
TensorClass tensor_from_json(FieldDesc field, const Json& j);

/// {"degree", "basis": [label]}
Json piece_to_json(const GradedPiece& piece);
GradedPiece piece_from_json(const Json& j);

/// {"p", "level", "exponent", "src", "dst", "matrix": [[entry]]}
Json map_to_json(const PLinearMap& phi);
PLinearMap map_from_json(const Json& j);

/// {"target", "generators", "cofactors"} as polynomial strings.
Json witness_to_json(const MembershipWitness& w);
MembershipWitness witness_from_json(const RingPtr& ring, const Json& j);

}  // namespace frobcert

#endif  // FROBCERT_SERIALIZE_HPP

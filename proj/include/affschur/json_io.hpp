#pragma once

// JSON (de)serialization for the core types, plus the compact text formats
// "1,0;0,1" (matrix) and "1,0,2" (composition).  Emission is deterministic:
// object keys are sorted, polynomial terms are in graded-lex order, and
// component maps are in lexicographic order.

#include <string>

#include "json.hpp"

#include "affschur/circ.hpp"
#include "affschur/combinat.hpp"
#include "affschur/kclasses.hpp"
#include "affschur/symfunc.hpp"
#include "affschur/verify.hpp"

namespace affschur {

using Json = nlohmann::json;

Json matrix_to_json(const OrbitMatrix& M);
OrbitMatrix matrix_from_json(const Json& j);
OrbitMatrix parse_matrix_text(const std::string& s);

Composition parse_composition_text(const std::string& s);

Json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

Json symclass_to_json(const SymClass& c);
SymClass symclass_from_json(const Json& j);

Json kclass_to_json(const KClass& c);
KClass kclass_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json flagfun_to_json(const FlagFun& f);
FlagFun flagfun_from_json(const Json& j);

Json almost_diag_to_json(const AlmostDiag& D);

Json report_to_json(const Report& r);

}  // namespace affschur

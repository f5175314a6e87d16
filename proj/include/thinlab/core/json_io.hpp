#pragma once

#include <string>

#include <json.hpp>

#include "thinlab/core/int_matrix.hpp"
#include "thinlab/core/mod_matrix.hpp"
#include "thinlab/core/rational_matrix.hpp"
#include "thinlab/core/word.hpp"

namespace thinlab {

using Json = nlohmann::ordered_json;

// Integers within +-2^53 become JSON numbers; anything larger is written as a decimal string.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& x);

// {"n": 2, "rows": [[1,4],[0,1]]}
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// {"n": 2, "modulus": 5, "rows": [[2,0],[1,3]]}; the modulus may instead be supplied by the caller.
Json mod_matrix_to_json(const ModMatrix& m);
ModMatrix mod_matrix_from_json(const Json& j, std::uint64_t modulus);

// {"name": "ex5", "generators": [{...}, {...}], "names": ["A", "B"]}; "names" is optional.
Json generator_set_to_json(const GeneratorSet& g);
GeneratorSet generator_set_from_json(const Json& j);

}  // namespace thinlab

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "coxshuffle/algebra.hpp"
#include "coxshuffle/buildings.hpp"
#include "coxshuffle/check.hpp"
#include "coxshuffle/numbers.hpp"
#include "coxshuffle/spectral.hpp"

namespace coxshuffle {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j);

// {family, n, terms: [{face, num, den}]}, terms sorted by face text.
Json element_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

// Sum of "c*face" terms as printed by AlgebraElement::to_string, or a bare face.
AlgebraElement parse_element_text(Family family, int n, std::string_view text);

Json checks_json(const std::vector<Check>& checks);
Json spectrum_json(const SpectrumReport& r);

// RREF rows over 0..q-1.
Json subspace_json(const Geometry& g, Geometry::Id id);
Json flag_json(Building& b, const FlagFace& f);

// "a,j,value" rows for 0 <= j <= a <= max_a.
std::string table_csv(const CoefficientTable& t);

// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace coxshuffle

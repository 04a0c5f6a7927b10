#pragma once

#include <string>

#include "nsky/generators.hpp"
#include "nsky/geometry.hpp"

namespace nsky {

// Instance JSON: {"n": ..., "d": ..., "points": [{"id":..., "coords":[...]}, ...],
// "meta": {...}} with exactly that field order. Meta carries family, seed,
// general_position, the intended skyline when known, and the null-vectors
// decode table when present.
std::string instance_to_json(const Instance& x);
Instance instance_from_json(const std::string& text);

void write_instance(const std::string& path, const Instance& x);
Instance read_instance(const std::string& path);

// Null-vectors inputs serialize as {"k":..., "l":..., "nonzero_positions":[...]}
// with -1 marking all-zero vectors.
std::string null_vectors_to_json(const NullVectorsInput& s);
NullVectorsInput null_vectors_from_json(const std::string& text);

void write_null_vectors(const std::string& path, const NullVectorsInput& s);
NullVectorsInput read_null_vectors(const std::string& path);

}  // namespace nsky

#ifndef MORPHBOUND_WITNESS_IO_HPP
#define MORPHBOUND_WITNESS_IO_HPP

#include <string>

#include "json.hpp"
#include "morphbound/sos.hpp"

namespace morphbound {

using Json = nlohmann::ordered_json;

// Witness files hold {"m", "d", "F", "phi", "G"} with each polynomial a list
// of {"exp": [e0..e4], "num": int, "den": int} terms. Terms are emitted in
// grlex order, largest first, so serialization is deterministic. Decimal
// coefficients are rejected.
Json witness_to_json(const SosWitness& w);
SosWitness witness_from_json(const Json& j);

Json poly_to_json(const HomogeneousPoly& p);
// expected_degree resolves the degree of an empty term list (a zero form);
// pass -1 to require at least one term.
HomogeneousPoly poly_from_json(const Json& j, const char* what, int expected_degree = -1);

void write_witness_file(const std::string& path, const SosWitness& w);
SosWitness read_witness_file(const std::string& path);

} // namespace morphbound

#endif

#pragma once

#include <string>

#include <json.hpp>

#include "epwlab/epw.hpp"
#include "epwlab/lattice.hpp"
#include "epwlab/matrix.hpp"
#include "epwlab/multipoly.hpp"

namespace epwlab::io {

using exactalg::field_t;
using exactalg::Matrix;
using exactalg::MultiPoly;
using exactalg::Scalar;
using nlohmann::json;

// Field tag: "Q" or the prime as a number.  Scalars travel as exact
// strings ("-3/5" over the rationals, the residue over a prime field);
// no floating point appears in any file.
json field_to_json(field_t f);
field_t field_from_json(const json& j);  // io_error on anything else

std::string scalar_to_string(const Scalar& s);

// {"vars": n, "field": "Q"|p, "terms": [{"exp": [e...], "coeff": "..."}]},
// terms in the canonical descending order, so serialization is
// deterministic and the zero polynomial has an empty list.
json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const json& j);

// {"rows", "cols", "field", "entries": ["...", ...]} row-major.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"ambient": "V"|"Vdual", "field": ..., "basis": [[20 strings] x 10]};
// loading re-validates rank and isotropy.
json lagrangian_to_json(const exterior::LagrangianSubspace& a);
exterior::LagrangianSubspace lagrangian_from_json(const json& j);

// {"rank", "gram": [[...]], "labels": {"0": "...", ...}}.
json lattice_to_json(const lattice::EvenLattice& l);
lattice::EvenLattice lattice_from_json(const json& j);

// {"p", "total", "by_corank": {"0": n0, ...}}; the point list of coranks
// >= 2 rides along under "high_corank" as [[coords...], corank] pairs.
json census_to_json(const epw::CensusResult& c);
epw::CensusResult census_from_json(const json& j);

json load_json_file(const std::string& path);                  // io_error
void save_json_file(const std::string& path, const json& j);   // io_error

}  // namespace epwlab::io

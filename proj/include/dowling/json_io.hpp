#ifndef DOWLING_JSON_IO_HPP
#define DOWLING_JSON_IO_HPP

#include <json.hpp>

#include "dowling/graph.hpp"
#include "dowling/group.hpp"
#include "dowling/matroid.hpp"
#include "dowling/polynomial.hpp"

namespace dowling {

using json = nlohmann::json;

// Exact integers are emitted as JSON numbers up to 53-bit magnitude and as
// decimal strings beyond; parsing accepts both.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json graph_to_json(const SimpleGraph& g);           // {"n":…, "edges": [[u,v],…]}
SimpleGraph graph_from_json(const json& j);

json group_to_json(const FiniteGroup& g);           // {"order":…, "table": [[…]]}
FiniteGroup group_from_json(const json& j);

// Text spec or an inline JSON object, as the CLI accepts.
SimpleGraph parse_graph_any(const std::string& spec);
FiniteGroup parse_group_any(const std::string& spec);

json poly_to_json(const LambdaPoly& p);             // {"var":"lambda","coeffs":[…]}
json poly_to_json(const GammaPoly& p);              // {"var":"gamma","coeffs":[…]}
LambdaPoly lambda_poly_from_json(const json& j);
GammaPoly gamma_poly_from_json(const json& j);

json bivariate_to_json(const BivariatePoly& p);     // {"n":…, "lambda_coeffs":[…]} by i
BivariatePoly bivariate_from_json(const json& j);

json whitney_record(const SimpleGraph& g, VertexSet x, int i, const GammaPoly& w);

json report_to_json(const CrossCheckReport& r);

}  // namespace dowling

#endif

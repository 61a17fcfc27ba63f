#pragma once

#include "chowkit/abgroup.hpp"
#include "chowkit/chow.hpp"
#include "chowkit/intlat.hpp"
#include "chowkit/kzero.hpp"
#include "chowkit/realize.hpp"
#include "chowkit/scenario.hpp"
#include "chowkit/steenrod.hpp"

#include "json.hpp"

#include <string>

namespace chowkit {

using Json = nlohmann::json;

// Serialization conventions, applied uniformly:
//   - mathematical integers (matrix entries, coefficients, moduli, torsion
//     orders, delta, ...) are decimal strings, so values never pass through
//     a lossy double;
//   - structural sizes (rows, cols, gens, n, degrees) are plain JSON numbers;
//   - absent optional fields are null, not omitted.
// Every *_from_json rejects malformed input with input_error carrying a
// one-line message naming the offending key.

Json to_json(const Int& x);
Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);
Json to_json(const SmithForm& f);
Json to_json(const MembershipCertificate& c);
Json to_json(const MembershipVerdict& v);
Json to_json(const FpAbGroup& g);
Json to_json(const InvariantFactors& f);
Json to_json(const AbHom& h);
Json to_json(const KClass& k);
Json to_json(const TruncPoly& p);
Json to_json(const F2GradedAlg& a);
Json to_json(const F2Class& x, const F2GradedAlg& a);
Json to_json(const RealizationResult& r);
Json to_json(const StableTrivialityReport& r);
Json to_json(const PullbackExampleReport& r);
Json to_json(const Phi3Report& r);

Int int_from_json(const Json& j, const std::string& where = "integer");
IntVec intvec_from_json(const Json& j, const std::string& where = "vector");
IntMatrix matrix_from_json(const Json& j);
FpAbGroup group_from_json(const Json& j);
InvariantFactors factors_from_json(const Json& j);
AbHom hom_from_json(const Json& j);
KClass kclass_from_json(const Json& j);
TruncPoly truncpoly_from_json(const Json& j);
F2GradedAlg algebra_from_json(const Json& j);
F2Class f2class_from_json(const Json& j, const F2GradedAlg& a);
MembershipVerdict verdict_from_json(const Json& j);
StableTrivialityReport stable_report_from_json(const Json& j);
PullbackExampleReport pullback_report_from_json(const Json& j);
Phi3Report phi3_report_from_json(const Json& j);

inline constexpr const char* report_schema = "chowkit-report/1";

// Missing files and parse failures both surface as input_error naming the
// path.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Inline tuple syntax: "(0,5,-4,1)" or bare "0,5,-4,1"; whitespace is
// ignored. "()" is the empty tuple.
IntVec parse_tuple(const std::string& s);

} // namespace chowkit

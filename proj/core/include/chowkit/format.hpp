#pragma once

#include "chowkit/abgroup.hpp"
#include "chowkit/chow.hpp"
#include "chowkit/intlat.hpp"
#include "chowkit/kzero.hpp"
#include "chowkit/realize.hpp"
#include "chowkit/scenario.hpp"
#include "chowkit/steenrod.hpp"

#include <string>

namespace chowkit {

// Human-readable rendering. Classes print as coefficient tuples "(0,5,-4,1)",
// truncated polynomials as polynomials in h ("1 + h^2"), groups through their
// invariant factors ("Z + Z/4"). Multi-line renderers end without a trailing
// newline; callers add one.

std::string format_tuple(const IntVec& v);
std::string format_kclass(const KClass& k);
std::string format_poly(const TruncPoly& p);
std::string format_matrix(const IntMatrix& m);
std::string format_factors(const InvariantFactors& f);
std::string format_smith(const SmithForm& f);
std::string format_verdict(const MembershipVerdict& v);
std::string format_f2class(const F2Class& x, const F2GradedAlg& a);
std::string format_realization(const RealizationResult& r);
std::string format_report(const StableTrivialityReport& r);
std::string format_report(const PullbackExampleReport& r);
std::string format_report(const Phi3Report& r);

} // namespace chowkit

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weil/presentation.hpp"

namespace weil {

/// Resolve an algebra spec: a preset name or inline JSON.
///
///   reals            the trivial algebra R
///   dual             dual numbers R[T]/(T^2)
///   trunc:s,k        truncated polynomials R[X1..Xs]/(X1..Xs)^{k+1}
///   tensor:<a>,<b>   tensor product of two specs (nestable)
///   {...}            inline presentation JSON
PresPtr parse_algebra_spec(const std::string& spec);

/// The six fixture algebras used throughout the test and check suites:
/// R, D, R[T]/(T^3), R[T]/(T^4), D(x)D, trunc(2,2).
std::vector<std::pair<std::string, PresPtr>> fixture_catalog();

}  // namespace weil

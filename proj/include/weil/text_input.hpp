#pragma once

#include <string>

#include "weil/checks.hpp"
#include "weil/element.hpp"
#include "weil/geometry.hpp"

namespace weil {

/// Parse an element from coefficient-term syntax, e.g. "3+1T", "0.5T1T2-2",
/// "1-0.25T^2". Monomials are named by variable powers ("T", "T2", "T1^2");
/// single-variable algebras accept plain "T". Every named monomial must lie
/// in the basis.
WeilElement parse_element_text(const PresPtr& algebra, const std::string& text);

/// Parse a near point from per-coordinate assignments separated by ',' or
/// ';', e.g. "x1=3+1T,x2=0". Every chart variable x1..xn must be assigned
/// exactly once.
NearPoint parse_near_point_text(const PresPtr& algebra, int chart_dim, const std::string& text);

/// Parse a sampling region "x1:[a,b],x2:[c,d]"; every chart variable must
/// get exactly one interval.
SampleRegion parse_region_text(const std::string& text, int chart_dim);

}  // namespace weil

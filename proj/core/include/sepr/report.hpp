#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sepr/verify.hpp"

namespace sepr {

// Report document (keys in this order):
//   matrix        {n, variables}
//   seed, budget
//   status        overall PASS | FAIL | INCONCLUSIVE
//   claims[]      {name, status, details}
//   sepr[]        {k, guaranteed: ["0","+","-"], method, class_counts: {Zero, Pos, Neg, Mixed, Unresolved}}
//   certificates[] {k, pivot, guaranteed, decompositions[]: {subset, minor, q, r, scale,
//                   concluded: {"D>0", "D<0", "D=0"} each "+", "-", "0" or "unknown"}}
//   witnesses[]   {subset, minor, class, positive, negative}; points map names to "p/q"
// Polynomials use the usual text form.

nlohmann::ordered_json to_json(const VerificationReport& report);

/// Human-readable table plus claim verdicts.
std::string render_text(const VerificationReport& report);

nlohmann::ordered_json point_to_json(const RationalPoint& point, const VariableTable& vars);
nlohmann::ordered_json sign_set_to_json(const SignSet& set);

}  // namespace sepr

#pragma once

#include <string>

#include "slgal/problem.hpp"

namespace slgal {

/// Builds a problem from a JSON document:
///   {"family":"hulthen","params":[a1,a2,a3]}
///   {"family":"allen_cahn","params":[alpha]}
///   {"family":"custom","f":[...],"g":{"num":[...],"den":[...]},"h":{...},
///    "z_minus":r,"z_plus":r,"gamma_init":r}
SLProblem parse_problem(const std::string& document);

}  // namespace slgal

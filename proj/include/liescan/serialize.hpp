#pragma once

#include <json.hpp>

#include "liescan/cartan.hpp"
#include "liescan/diophantine.hpp"
#include "liescan/homotopy.hpp"
#include "liescan/poincare.hpp"
#include "liescan/screener.hpp"

namespace liescan {

// nlohmann ADL hooks; big integers are serialized as decimal strings.

void to_json(nlohmann::json& j, const CartanGroup& g);
void to_json(nlohmann::json& j, const IntPolynomial& p);
void to_json(nlohmann::json& j, const FGAbelianGroup& g);
void to_json(nlohmann::json& j, const RNSolution& s);
void to_json(nlohmann::json& j, const QubitMatch& m);
void to_json(nlohmann::json& j, const PellSolution& s);
void to_json(nlohmann::json& j, const ScreeningReport& r);

}  // namespace liescan

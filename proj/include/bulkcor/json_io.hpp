#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "bulkcor/frobenius.hpp"
#include "bulkcor/hopf.hpp"
#include "bulkcor/linalg.hpp"
#include "bulkcor/rep.hpp"
#include "bulkcor/scalar.hpp"

namespace bulkcor {

// Raised for malformed data files (bad JSON, wrong schema tag, shape or
// encoding violations). The CLI maps this to exit code 2.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Scalars in data files: rationals are "p/q" strings, cyclotomic elements
// are {"order": n, "coeffs": ["p/q", ...]} with phi(n) coefficients.
nlohmann::ordered_json scalar_to_json(const Scalar& a);
Scalar scalar_from_json(const nlohmann::json& j);

// Vectors are flat arrays, matrices nested row-major arrays. Loading embeds
// every entry into Q(zeta_field_order).
nlohmann::ordered_json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j, unsigned field_order);
nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, unsigned field_order);

// Schema "hopf-v1". Loading validates all shapes and finalizes the data.
nlohmann::ordered_json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const nlohmann::json& j);

HopfData load_hopf_file(const std::string& path);
void save_hopf_file(const std::string& path, const HopfData& h);

// Schema "module-v1". The hopf_ref string names the Hopf data file the module
// was written for; it is informational, the actual Hopf data always comes in
// through the argument (the CLI takes it on the command line).
nlohmann::ordered_json module_to_json(const ModuleRep& m, const std::string& hopf_ref = "");
ModuleRep module_from_json(const nlohmann::json& j, const HopfData& h);
ModuleRep load_module_file(const std::string& path, const HopfData& h);
void save_module_file(const std::string& path, const ModuleRep& m,
                      const std::string& hopf_ref = "");

// Schema "frobenius-v1". module_ref is either a path string, resolved
// relative to base_dir (for load_frobenius_file, the directory of the
// frobenius file itself), or an inline module-v1 object.
nlohmann::ordered_json frobenius_to_json(const FrobeniusObject& f,
                                         const nlohmann::ordered_json& module_ref);
FrobeniusObject frobenius_from_json(const nlohmann::json& j, const HopfData& h,
                                    const std::string& base_dir = ".");
FrobeniusObject load_frobenius_file(const std::string& path, const HopfData& h);
void save_frobenius_file(const std::string& path, const FrobeniusObject& f,
                         const nlohmann::ordered_json& module_ref);

}  // namespace bulkcor

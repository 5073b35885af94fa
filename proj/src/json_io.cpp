#include "bulkcor/json_io.hpp"

#include <fstream>

namespace bulkcor {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(std::string("bad rational: ") + e.what());
    }
  }
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<long long>()));
  throw SchemaError("expected a rational encoded as a string");
}

[[noreturn]] void fail(const std::string& msg) { throw SchemaError(msg); }

long long require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(std::string("missing integer field '") + key + "'");
  return j[key].get<long long>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(std::string("missing array field '") + key + "'");
  return j[key];
}

}  // namespace

ordered_json scalar_to_json(const Scalar& a) {
  if (a.order == 1) return ordered_json(rational_string(a.c[0]));
  // rational values print as plain strings whatever field they sit in;
  // the loader re-embeds against the declared field order
  if (a.is_rational()) return ordered_json(rational_string(a.rational_part()));
  ordered_json coeffs = ordered_json::array();
  for (const auto& q : a.c) coeffs.push_back(rational_string(q));
  ordered_json out;
  out["order"] = a.order;
  out["coeffs"] = std::move(coeffs);
  return out;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer())
    return Scalar(rational_from_json(j));
  if (!j.is_object()) fail("scalar must be a string or an {order, coeffs} object");
  long long ord = require_int(j, "order");
  if (ord < 1) fail("scalar order must be positive");
  const json& coeffs = require_array(j, "coeffs");
  unsigned deg = cyclotomic_degree(static_cast<unsigned>(ord));
  if (coeffs.size() != deg)
    fail("scalar coeff count " + std::to_string(coeffs.size()) +
         " does not match phi(" + std::to_string(ord) + ") = " + std::to_string(deg));
  std::vector<mpq_class> c;
  c.reserve(deg);
  for (const auto& e : coeffs) c.push_back(rational_from_json(e));
  return Scalar(static_cast<unsigned>(ord), std::move(c));
}

ordered_json vec_to_json(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vec vec_from_json(const json& j, unsigned field_order) {
  if (!j.is_array()) fail("vector must be an array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) {
    Scalar s = scalar_from_json(e);
    if (field_order % s.order != 0)
      fail("entry of order " + std::to_string(s.order) +
           " does not embed into field order " + std::to_string(field_order));
    v.push_back(embed(s, field_order));
  }
  return v;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (int r = 0; r < m.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(scalar_to_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const json& j, unsigned field_order) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  Matrix m = zero_matrix(rows, cols, field_order);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      fail("matrix rows have unequal lengths");
    Vec row = vec_from_json(j[r], field_order);
    for (int c = 0; c < cols; ++c) m.set(r, c, row[c]);
  }
  return m;
}

ordered_json hopf_to_json(const HopfData& h) {
  ordered_json out;
  out["schema"] = "hopf-v1";
  out["dim"] = h.dim;
  out["field_order"] = h.field_order;
  out["mult"] = matrix_to_json(h.mult);
  out["unit"] = vec_to_json(h.unit);
  out["comult"] = matrix_to_json(h.comult);
  out["counit"] = matrix_to_json(h.counit);
  out["antipode"] = matrix_to_json(h.antipode);
  ordered_json rs = ordered_json::array();
  for (const auto& [a, b] : h.r_summands)
    rs.push_back(ordered_json::array({vec_to_json(a), vec_to_json(b)}));
  out["r_summands"] = std::move(rs);
  out["ribbon"] = vec_to_json(h.ribbon);
  out["pivot"] = vec_to_json(h.pivot);
  return out;
}

HopfData hopf_from_json(const json& j) {
  if (!j.is_object()) fail("hopf data must be a JSON object");
  if (!j.contains("schema") || j["schema"] != "hopf-v1")
    fail("expected schema \"hopf-v1\"");
  HopfData h;
  long long dim = require_int(j, "dim");
  long long order = require_int(j, "field_order");
  if (dim < 1) fail("dim must be positive");
  if (order < 1) fail("field_order must be positive");
  h.dim = static_cast<int>(dim);
  h.field_order = static_cast<unsigned>(order);

  auto want_matrix = [&](const char* key, int rows, int cols) {
    Matrix m = matrix_from_json(require_array(j, key), h.field_order);
    if (m.rows != rows || m.cols != cols)
      fail(std::string("field '") + key + "' must be " + std::to_string(rows) +
           "x" + std::to_string(cols) + ", got " + std::to_string(m.rows) +
           "x" + std::to_string(m.cols));
    return m;
  };
  auto want_vec = [&](const char* key, bool optional) {
    Vec v = vec_from_json(require_array(j, key), h.field_order);
    if (static_cast<int>(v.size()) != h.dim && !(optional && v.empty()))
      fail(std::string("field '") + key + "' must have length " + std::to_string(h.dim));
    return v;
  };

  h.mult = want_matrix("mult", h.dim, h.dim * h.dim);
  h.unit = want_vec("unit", false);
  h.comult = want_matrix("comult", h.dim * h.dim, h.dim);
  h.counit = want_matrix("counit", 1, h.dim);
  h.antipode = want_matrix("antipode", h.dim, h.dim);
  const json& rs = require_array(j, "r_summands");
  for (const auto& pair : rs) {
    if (!pair.is_array() || pair.size() != 2) fail("r_summands entries must be [vec, vec] pairs");
    Vec a = vec_from_json(pair[0], h.field_order);
    Vec b = vec_from_json(pair[1], h.field_order);
    if (static_cast<int>(a.size()) != h.dim || static_cast<int>(b.size()) != h.dim)
      fail("r_summands vectors must have length dim");
    h.r_summands.emplace_back(std::move(a), std::move(b));
  }
  h.ribbon = want_vec("ribbon", true);
  h.pivot = want_vec("pivot", true);
  h.finalize();
  return h;
}

HopfData load_hopf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
  try {
    return hopf_from_json(j);
  } catch (const SchemaError& e) {
    fail(path + ": " + e.what());
  }
}

void save_hopf_file(const std::string& path, const HopfData& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << hopf_to_json(h).dump(2) << "\n";
}

ordered_json module_to_json(const ModuleRep& m, const std::string& hopf_ref) {
  ordered_json out;
  out["schema"] = "module-v1";
  if (!hopf_ref.empty()) out["hopf_ref"] = hopf_ref;
  out["dim"] = m.dim;
  ordered_json action = ordered_json::array();
  for (const auto& mat : m.action) action.push_back(matrix_to_json(mat));
  out["action"] = std::move(action);
  return out;
}

ModuleRep module_from_json(const json& j, const HopfData& h) {
  if (!j.is_object()) fail("module data must be a JSON object");
  if (!j.contains("schema") || j["schema"] != "module-v1")
    fail("expected schema \"module-v1\"");
  if (j.contains("hopf_ref") && !j["hopf_ref"].is_string())
    fail("hopf_ref must be a string");
  long long dim = require_int(j, "dim");
  if (dim < 0) fail("module dim must be non-negative");
  ModuleRep m;
  m.hopf = &h;
  m.dim = static_cast<int>(dim);
  const json& action = require_array(j, "action");
  if (static_cast<int>(action.size()) != h.dim)
    fail("action must list one matrix per Hopf basis element (" +
         std::to_string(h.dim) + "), got " + std::to_string(action.size()));
  for (const auto& e : action) {
    Matrix mat = matrix_from_json(e, h.field_order);
    if (mat.rows != m.dim || mat.cols != m.dim)
      fail("action matrices must be " + std::to_string(m.dim) + "x" +
           std::to_string(m.dim));
    m.action.push_back(std::move(mat));
  }
  return m;
}

ModuleRep load_module_file(const std::string& path, const HopfData& h) {
  std::ifstream in(path);
  if (!in) fail("cannot read file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
  try {
    return module_from_json(j, h);
  } catch (const SchemaError& e) {
    fail(path + ": " + e.what());
  }
}

void save_module_file(const std::string& path, const ModuleRep& m,
                      const std::string& hopf_ref) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << module_to_json(m, hopf_ref).dump(2) << "\n";
}

ordered_json frobenius_to_json(const FrobeniusObject& f, const ordered_json& module_ref) {
  if (!module_ref.is_string() && !module_ref.is_object())
    throw std::invalid_argument("module_ref must be a path string or an inline module");
  ordered_json out;
  out["schema"] = "frobenius-v1";
  out["module_ref"] = module_ref;
  out["mult"] = matrix_to_json(f.mult);
  out["unit"] = matrix_to_json(f.unit);
  out["comult"] = matrix_to_json(f.comult);
  out["counit"] = matrix_to_json(f.counit);
  return out;
}

FrobeniusObject frobenius_from_json(const json& j, const HopfData& h,
                                    const std::string& base_dir) {
  if (!j.is_object()) fail("frobenius data must be a JSON object");
  if (!j.contains("schema") || j["schema"] != "frobenius-v1")
    fail("expected schema \"frobenius-v1\"");
  if (!j.contains("module_ref")) fail("missing field 'module_ref'");

  FrobeniusObject f;
  const json& ref = j["module_ref"];
  if (ref.is_string())
    f.object = load_module_file(base_dir + "/" + ref.get<std::string>(), h);
  else if (ref.is_object())
    f.object = module_from_json(ref, h);
  else
    fail("module_ref must be a path string or an inline module object");

  int d = f.object.dim;
  auto want_matrix = [&](const char* key, int rows, int cols) {
    Matrix m = matrix_from_json(require_array(j, key), h.field_order);
    if (m.rows != rows || m.cols != cols)
      fail(std::string("field '") + key + "' must be " + std::to_string(rows) +
           "x" + std::to_string(cols) + ", got " + std::to_string(m.rows) +
           "x" + std::to_string(m.cols));
    return m;
  };
  f.mult = want_matrix("mult", d, d * d);
  f.unit = want_matrix("unit", d, 1);
  f.comult = want_matrix("comult", d * d, d);
  f.counit = want_matrix("counit", 1, d);
  return f;
}

FrobeniusObject load_frobenius_file(const std::string& path, const HopfData& h) {
  std::ifstream in(path);
  if (!in) fail("cannot read file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
  std::string base_dir = ".";
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) base_dir = path.substr(0, slash);
  try {
    return frobenius_from_json(j, h, base_dir);
  } catch (const SchemaError& e) {
    fail(path + ": " + e.what());
  }
}

void save_frobenius_file(const std::string& path, const FrobeniusObject& f,
                         const ordered_json& module_ref) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << frobenius_to_json(f, module_ref).dump(2) << "\n";
}

}  // namespace bulkcor

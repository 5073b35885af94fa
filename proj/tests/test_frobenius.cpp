#include <doctest.h>

#include <cstdlib>
#include <string>

#include "bulkcor/frobenius.hpp"
#include "bulkcor/hopf.hpp"
#include "bulkcor/json_io.hpp"
#include "bulkcor/rep.hpp"

using namespace bulkcor;

namespace {

void require_all_pass(const Report& rep) {
  CHECK_MESSAGE(rep.all_pass(), report_to_text(rep));
}

const HopfData& z2_double() {
  static HopfData d = drinfeld_double_of_group(cyclic_group_table(2), 1);
  return d;
}

const HopfData& s3_double() {
  static HopfData d = drinfeld_double_of_group(symmetric_group_s3_table(), 3);
  return d;
}

// the shipped Sweedler double, with the pivot and the balancing element the
// fixture generator installs
const HopfData& sweedler_double() {
  static HopfData d =
      load_hopf_file(std::string(BULKCOR_SOURCE_DIR) + "/fixtures/d_sweedler.json");
  return d;
}

// (id^{(x) n} (x) (beta . comult)) . v_{n+1} == v_n
bool partial_trace_holds(const FrobeniusObject& f, int n) {
  Matrix bd = mul(frobenius_pairing(f), f.comult);
  Vec v = canonical_vn_vector(f, n + 1);
  std::vector<int> dims(n + 1, f.object.dim);
  Vec w = apply_to_slots(bd, dims, n, 1, v);
  return vec_eq(w, canonical_vn_vector(f, n));
}

// comultiply one slot of a pure tensor-power vector
Vec grow_slot(const FrobeniusObject& f, const Vec& v, int nslots, int slot) {
  std::vector<int> dims(nslots, f.object.dim);
  return apply_to_slots(f.comult, dims, slot, 1, v);
}

}  // namespace

TEST_CASE("trivial frobenius object") {
  FrobeniusObject f = trivial_frobenius(z2_double());
  require_all_pass(verify_frobenius(f));
  require_all_pass(verify_special(f));
  CHECK(is_special(f));

  bool equals_unit = false;
  ModuleMap h = handle_element(f, &equals_unit);
  CHECK(equals_unit);
  CHECK(mat_eq(h.matrix, f.unit));

  for (int n = 0; n <= 5; ++n) {
    ModuleMap vn = canonical_vn(f, n);
    CHECK(vn.target.dim == 1);
    CHECK(vn.matrix.at(0, 0).is_one());
  }
  for (int n = 1; n <= 4; ++n) CHECK(partial_trace_holds(f, n));
  CHECK_THROWS_AS(canonical_vn(f, -1), std::invalid_argument);
}

TEST_CASE("verification rejects broken structure") {
  FrobeniusObject f = trivial_frobenius(z2_double());

  SUBCASE("zero counit kills non-degeneracy") {
    f.counit = zero_matrix(1, 1, 1);
    Report rep = verify_frobenius(f);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.find("pairing-nondegenerate")->pass);
    CHECK_FALSE(rep.find("comult-counital")->pass);
    CHECK(rep.find("mult-associative")->pass);
    CHECK_FALSE(verify_special(f).find("special-counit-unit")->pass);
  }

  SUBCASE("misshapen structure maps are errors, not failures") {
    f.mult = zero_matrix(2, 1, 1);
    CHECK_THROWS_AS(verify_frobenius(f), std::invalid_argument);
    CHECK_THROWS_AS(verify_special(f), std::invalid_argument);
    CHECK_THROWS_AS(handle_element(f), std::invalid_argument);
  }
}

TEST_CASE("internal end of the regular module over the Z2 double") {
  const HopfData& d = z2_double();
  ModuleRep x = regular_module(d);
  REQUIRE(eq(qdim(x), Scalar(4)));

  FrobeniusObject raw = internal_end_frobenius(x, false);
  CHECK(raw.object.dim == 16);
  require_all_pass(verify_frobenius(raw));

  // without normalization mult.comult is the quantum dimension, not 1
  Report sp = verify_special(raw);
  CHECK(sp.find("special-counit-unit")->pass);
  CHECK_FALSE(sp.find("special-mult-comult")->pass);
  CHECK(sp.find("special-mult-comult")->witness == "mult.comult = 4 . id");
  CHECK(mat_eq(mul(raw.mult, raw.comult), scale(Scalar(4), identity_matrix(16, 1))));

  bool equals_unit = true;
  ModuleMap h = handle_element(raw, &equals_unit);
  CHECK_FALSE(equals_unit);
  CHECK(mat_eq(h.matrix, scale(Scalar(4), raw.unit)));
  CHECK_FALSE(partial_trace_holds(raw, 1));

  FrobeniusObject norm = internal_end_frobenius(x);
  require_all_pass(verify_frobenius(norm));
  require_all_pass(verify_special(norm));
  CHECK(eq(mul(norm.counit, norm.unit).at(0, 0), Scalar(16)));

  FrobeniusObject fixed = normalize_special(raw);
  CHECK(mat_eq(fixed.comult, norm.comult));
  CHECK(mat_eq(fixed.counit, norm.counit));
  require_all_pass(verify_special(fixed));

  handle_element(norm, &equals_unit);
  CHECK(equals_unit);
  for (int n = 1; n <= 3; ++n) CHECK(partial_trace_holds(norm, n));
}

TEST_CASE("internal end of a two-dimensional simple over the S3 double") {
  const HopfData& d = s3_double();
  Wedderburn w = wedderburn(d);
  const ModuleRep* two = nullptr;
  for (const auto& s : w.simples)
    if (s.dim == 2) {
      two = &s;
      break;
    }
  REQUIRE(two != nullptr);
  REQUIRE(eq(qdim(*two), Scalar(2)));

  FrobeniusObject f = internal_end_frobenius(*two);
  CHECK(f.object.dim == 4);
  require_all_pass(verify_frobenius(f));
  require_all_pass(verify_special(f));
  CHECK(eq(mul(f.counit, f.unit).at(0, 0), Scalar(4)));

  bool equals_unit = false;
  handle_element(f, &equals_unit);
  CHECK(equals_unit);

  for (int n = 1; n <= 4; ++n) CHECK(partial_trace_holds(f, n));

  // the canonical maps do not depend on which slot gets comultiplied
  Vec v2 = canonical_vn_vector(f, 2);
  Vec v3 = canonical_vn_vector(f, 3);
  CHECK(vec_eq(grow_slot(f, v2, 2, 0), v3));
  CHECK(vec_eq(grow_slot(f, v2, 2, 1), v3));
  Vec v4 = canonical_vn_vector(f, 4);
  for (int slot = 0; slot < 3; ++slot) CHECK(vec_eq(grow_slot(f, v3, 3, slot), v4));

  // every canonical map is an intertwiner from the tensor unit
  for (int n = 0; n <= 3; ++n) {
    ModuleMap vn = canonical_vn(f, n);
    CHECK(is_intertwiner(vn.source, vn.target, vn.matrix));
  }
}

TEST_CASE("internal ends over the Sweedler double") {
  const HopfData& d = sweedler_double();

  FrobeniusObject f = internal_end_frobenius(trivial_module(d));
  CHECK(f.object.dim == 1);
  require_all_pass(verify_frobenius(f));
  require_all_pass(verify_special(f));

  // every projective indecomposable here has vanishing quantum dimension, so
  // no internal end with a special structure exists on them
  auto ps = pims(d);
  REQUIRE(!ps.empty());
  for (const auto& p : ps) {
    CHECK(qdim(p.module).is_zero());
    CHECK_THROWS_AS(internal_end_frobenius(p.module), std::runtime_error);
    CHECK_THROWS_AS(internal_end_frobenius(p.module, false), std::runtime_error);
  }
}

TEST_CASE("frobenius json round trips") {
  const HopfData& d = z2_double();

  SUBCASE("inline module reference") {
    FrobeniusObject f = internal_end_frobenius(regular_module(d));
    auto j = frobenius_to_json(f, module_to_json(f.object, "d_z2.json"));
    FrobeniusObject back = frobenius_from_json(j, d);
    CHECK(mat_eq(back.mult, f.mult));
    CHECK(mat_eq(back.unit, f.unit));
    CHECK(mat_eq(back.comult, f.comult));
    CHECK(mat_eq(back.counit, f.counit));
    CHECK(back.object.dim == f.object.dim);
    for (int i = 0; i < d.dim; ++i)
      CHECK(mat_eq(back.object.action[i], f.object.action[i]));
  }

  SUBCASE("module reference as a relative path") {
    std::string dir = "frob_roundtrip_tmp";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    FrobeniusObject f = trivial_frobenius(d);
    save_module_file(dir + "/mod.json", f.object, "d_z2.json");
    save_frobenius_file(dir + "/frob.json", f, "mod.json");
    FrobeniusObject back = load_frobenius_file(dir + "/frob.json", d);
    CHECK(mat_eq(back.mult, f.mult));
    require_all_pass(verify_frobenius(back));
  }

  SUBCASE("shipped fixture") {
    std::string root(BULKCOR_SOURCE_DIR);
    HopfData dz2 = load_hopf_file(root + "/fixtures/d_z2.json");
    FrobeniusObject f = load_frobenius_file(root + "/fixtures/trivial_frob.json", dz2);
    require_all_pass(verify_module(f.object));
    require_all_pass(verify_frobenius(f));
    require_all_pass(verify_special(f));
  }

  SUBCASE("schema violations") {
    FrobeniusObject f = trivial_frobenius(d);
    auto good = frobenius_to_json(f, module_to_json(f.object));

    auto j = good;
    j["schema"] = "frobenius-v2";
    CHECK_THROWS_AS(frobenius_from_json(j, d), SchemaError);

    j = good;
    j.erase("module_ref");
    CHECK_THROWS_AS(frobenius_from_json(j, d), SchemaError);

    j = good;
    j["module_ref"] = 7;
    CHECK_THROWS_AS(frobenius_from_json(j, d), SchemaError);

    j = good;
    j["mult"] = matrix_to_json(zero_matrix(2, 2, 1));
    CHECK_THROWS_AS(frobenius_from_json(j, d), SchemaError);

    auto m = module_to_json(regular_module(d));
    m["action"].erase(0);
    CHECK_THROWS_AS(module_from_json(m, d), SchemaError);

    m = module_to_json(regular_module(d));
    m["dim"] = 3;
    CHECK_THROWS_AS(module_from_json(m, d), SchemaError);
  }
}

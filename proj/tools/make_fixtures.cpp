// Regenerates the JSON data files under fixtures/. Usage:
//   make_fixtures [output_dir]
#include <cstdio>
#include <string>

#include "bulkcor/frobenius.hpp"
#include "bulkcor/hopf.hpp"
#include "bulkcor/json_io.hpp"

using namespace bulkcor;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";

  HopfData dz2 = drinfeld_double_of_group(cyclic_group_table(2), 1);
  save_hopf_file(dir + "/d_z2.json", dz2);
  std::printf("wrote %s/d_z2.json (dim %d)\n", dir.c_str(), dz2.dim);

  // the tensor unit with its one-dimensional Frobenius structure; the module
  // is inlined so the file stands alone (the CLI supplies the Hopf data)
  FrobeniusObject triv = trivial_frobenius(dz2);
  save_frobenius_file(dir + "/trivial_frob.json", triv,
                      module_to_json(triv.object, "d_z2.json"));
  std::printf("wrote %s/trivial_frob.json (dim %d)\n", dir.c_str(), triv.object.dim);

  // a cube root of unity is needed to split this double into matrix blocks
  HopfData ds3 = drinfeld_double_of_group(symmetric_group_s3_table(), 3);
  save_hopf_file(dir + "/d_s3.json", ds3);
  std::printf("wrote %s/d_s3.json (dim %d)\n", dir.c_str(), ds3.dim);

  // Double of the 4-dimensional Sweedler algebra. It has no ribbon element
  // (S(u)u^{-1} is a non-square group-like), so the ribbon slot carries the
  // balancing element v0 = omega^{-1} u for the pivot omega = eps (x) c,
  // which satisfies every ribbon axiom except S(v) = v.
  HopfData ds = drinfeld_double_of_hopf(sweedler_algebra(1));
  Vec omega = vec_zero(16, 1);
  omega[0 * 4 + 1] = scalar_one(1);  // eps = e_0^* + e_1^*, times c
  omega[1 * 4 + 1] = scalar_one(1);
  Vec u = drinfeld_u_element(ds);
  Vec omega_inv;
  if (!ds.invert_element(omega, &omega_inv)) {
    std::fprintf(stderr, "sweedler pivot not invertible, fixture generation bug\n");
    return 1;
  }
  ds.pivot = omega;
  ds.ribbon = ds.multiply(omega_inv, u);
  ds.finalize();
  save_hopf_file(dir + "/d_sweedler.json", ds);
  std::printf("wrote %s/d_sweedler.json (dim %d)\n", dir.c_str(), ds.dim);

  return 0;
}

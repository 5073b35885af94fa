#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bulkcor/frobenius.hpp"
#include "bulkcor/rep.hpp"

namespace bulkcor {

// One strand of a diagram: a bound module label, possibly dualized. Double
// duals are not expressible; the pivotal structure is used through the
// right (co)evaluation generators instead.
struct Wire {
  std::string label;
  bool dual = false;
  bool operator==(const Wire&) const = default;
};

// Raised on malformed diagram text or a type mismatch between a generator
// and the wires entering it; carries the line and wire position.
struct DiagramError : std::runtime_error {
  int line = 0;
  int wire = 0;
  DiagramError(const std::string& what, int line_, int wire_)
      : std::runtime_error(what + " (line " + std::to_string(line_) + ", wire " +
                           std::to_string(wire_) + ")"),
        line(line_),
        wire(wire_) {}
};

// Labels a diagram may reference. Modules and Frobenius objects are copied
// in; a named map is any matrix with a declared wire interface.
struct NamedMapBinding {
  Matrix matrix;
  std::vector<Wire> in, out;
};

struct DiagramContext {
  const HopfData* hopf = nullptr;
  std::map<std::string, ModuleRep> modules;
  std::map<std::string, FrobeniusObject> frobenius;
  std::map<std::string, NamedMapBinding> maps;

  void bind_module(const std::string& name, const ModuleRep& m);
  void bind_frobenius(const std::string& name, const FrobeniusObject& f);
  // wire specs use the same syntax as diagram arguments ("H", "H*"); the
  // matrix shape is validated against the bound wire dimensions
  void bind_map(const std::string& name, const Matrix& m,
                const std::vector<std::string>& in_spec,
                const std::vector<std::string>& out_spec);
};

// One generator instance, fully resolved: interface wires, position in the
// wire list of its layer, and either a matrix or (for braids) the list of
// R-summand factor pairs, applied slotwise so no Kronecker block with
// identity wires is ever materialized.
struct DiagramGen {
  enum class Kind {
    id,
    braid,
    braid_inv,
    eval_left,
    coev_left,
    eval_right,
    coev_right,
    frob_mult,
    frob_unit,
    frob_comult,
    frob_counit,
    named_map,
  };
  Kind kind = Kind::id;
  std::vector<Wire> in, out;
  std::vector<int> out_dims;  // one entry per output wire
  Matrix matrix;
  std::vector<std::pair<Matrix, Matrix>> braid_factors;
  int line = 0;
  int wire_pos = 0;
};

struct DiagramLayer {
  std::vector<DiagramGen> gens;
};

// A type-checked diagram. Slices are stored and composed bottom to top.
struct Diagram {
  std::vector<Wire> wires_in, wires_out;
  std::vector<ModuleRep> in_modules, out_modules;
  std::vector<DiagramLayer> slices;
  const HopfData* hopf = nullptr;
  unsigned order = 1;

  int in_dim() const;
  int out_dim() const;
};

// Grammar: one layer per line, bottom layer first, generators separated by
// "|", arguments in brackets, wires implicit left to right. "#" starts a
// comment, blank lines are skipped. An optional "in: X Y* ..." line declares
// the input wires (mandatory for diagrams with no layers) and is checked
// against what the first layer consumes.
Diagram parse_diagram(const std::string& text, const DiagramContext& ctx);

// Relation files hold several diagrams separated by lines of "=="; they are
// expected (and tested) to evaluate to equal matrices.
std::vector<Diagram> parse_diagram_sections(const std::string& text,
                                            const DiagramContext& ctx);
Diagram load_diagram_file(const std::string& path, const DiagramContext& ctx);
std::vector<Diagram> load_diagram_sections_file(const std::string& path,
                                                const DiagramContext& ctx);

// Apply the composite to one coordinate vector of the input tensor product.
Vec evaluate_on(const Diagram& d, const Vec& v);

// The exact matrix of the composite, column by column.
Matrix evaluate_matrix(const Diagram& d);

// The composite as a map between the materialized tensor product modules.
// Building those modules costs (product of wire dims)^2 per Hopf basis
// element; for wide diagrams prefer evaluate_matrix.
ModuleMap evaluate(const Diagram& d);

}  // namespace bulkcor

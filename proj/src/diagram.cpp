#include "bulkcor/diagram.hpp"

#include <fstream>
#include <sstream>

namespace bulkcor {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void err(const std::string& msg, int line, int wire) {
  throw DiagramError(msg, line, wire);
}

std::string wire_name(const Wire& w) { return w.dual ? w.label + "*" : w.label; }

Wire parse_wire(const std::string& tok, int line, int pos) {
  std::string t = trim(tok);
  if (t.empty()) err("empty wire label", line, pos);
  bool dual = false;
  if (t.back() == '*') {
    dual = true;
    t.pop_back();
    t = trim(t);
    if (!t.empty() && t.back() == '*')
      err("double duals are not supported", line, pos);
  }
  if (t.empty()) err("empty wire label", line, pos);
  return Wire{t, dual};
}

// resolves wires against the context, building dual modules at most once
struct Resolver {
  const DiagramContext* ctx;
  std::map<std::pair<std::string, bool>, ModuleRep> module_cache;
  std::map<std::string, DualityData> duality_cache;

  const ModuleRep* base(const std::string& label) const {
    auto it = ctx->modules.find(label);
    if (it != ctx->modules.end()) return &it->second;
    auto jt = ctx->frobenius.find(label);
    if (jt != ctx->frobenius.end()) return &jt->second.object;
    return nullptr;
  }

  const ModuleRep& module_of(const Wire& w, int line, int pos) {
    auto key = std::make_pair(w.label, w.dual);
    auto it = module_cache.find(key);
    if (it != module_cache.end()) return it->second;
    const ModuleRep* m = base(w.label);
    if (!m) err("unknown label '" + w.label + "'", line, pos);
    ModuleRep r = w.dual ? duality_of(w.label, line, pos).dual : *m;
    return module_cache.emplace(key, std::move(r)).first->second;
  }

  const DualityData& duality_of(const std::string& label, int line, int pos) {
    auto it = duality_cache.find(label);
    if (it != duality_cache.end()) return it->second;
    const ModuleRep* m = base(label);
    if (!m) err("unknown label '" + label + "'", line, pos);
    return duality_cache.emplace(label, dual(*m)).first->second;
  }

  const FrobeniusObject& frobenius_of(const std::string& label, int line, int pos) {
    auto it = ctx->frobenius.find(label);
    if (it == ctx->frobenius.end())
      err("label '" + label + "' is not bound to a frobenius object", line, pos);
    return it->second;
  }
};

DiagramGen make_gen(const std::string& name, const std::vector<std::string>& args,
                    Resolver& R, int line, int pos) {
  using K = DiagramGen::Kind;
  static const std::map<std::string, K> kinds = {
      {"id", K::id},
      {"braid", K::braid},
      {"braid_inv", K::braid_inv},
      {"eval_left", K::eval_left},
      {"coev_left", K::coev_left},
      {"eval_right", K::eval_right},
      {"coev_right", K::coev_right},
      {"frob_mult", K::frob_mult},
      {"frob_unit", K::frob_unit},
      {"frob_comult", K::frob_comult},
      {"frob_counit", K::frob_counit},
      {"named_map", K::named_map},
  };
  auto kit = kinds.find(name);
  if (kit == kinds.end()) err("unknown generator '" + name + "'", line, pos);
  DiagramGen g;
  g.kind = kit->second;
  g.line = line;
  g.wire_pos = pos;

  auto want_args = [&](size_t n) {
    if (args.size() != n)
      err("generator '" + name + "' takes " + std::to_string(n) + " argument" +
              (n == 1 ? "" : "s") + ", got " + std::to_string(args.size()),
          line, pos);
  };
  auto plain_label = [&](const std::string& a) {
    Wire w = parse_wire(a, line, pos);
    if (w.dual)
      err("generator '" + name + "' names the module, not its dual", line, pos);
    return w.label;
  };

  switch (g.kind) {
    case K::id: {
      want_args(1);
      Wire w = parse_wire(args[0], line, pos);
      R.module_of(w, line, pos);
      g.in = {w};
      g.out = {w};
      break;
    }
    case K::braid:
    case K::braid_inv: {
      want_args(2);
      Wire a = parse_wire(args[0], line, pos);
      Wire b = parse_wire(args[1], line, pos);
      const ModuleRep& ma = R.module_of(a, line, pos);
      const ModuleRep& mb = R.module_of(b, line, pos);
      g.in = {a, b};
      g.out = {b, a};
      const HopfData* h = ma.hopf;
      for (const auto& [x, y] : h->r_summands) {
        if (g.kind == K::braid)
          g.braid_factors.emplace_back(ma.act(x), mb.act(y));
        else
          g.braid_factors.emplace_back(ma.act(y), mb.act(h->antipode_of(x)));
      }
      break;
    }
    case K::eval_left: {
      want_args(1);
      std::string x = plain_label(args[0]);
      g.matrix = R.duality_of(x, line, pos).ev;
      g.in = {Wire{x, true}, Wire{x, false}};
      break;
    }
    case K::coev_left: {
      want_args(1);
      std::string x = plain_label(args[0]);
      g.matrix = R.duality_of(x, line, pos).coev;
      g.out = {Wire{x, false}, Wire{x, true}};
      break;
    }
    case K::eval_right: {
      want_args(1);
      std::string x = plain_label(args[0]);
      g.matrix = R.duality_of(x, line, pos).ev_right;
      g.in = {Wire{x, false}, Wire{x, true}};
      break;
    }
    case K::coev_right: {
      want_args(1);
      std::string x = plain_label(args[0]);
      g.matrix = R.duality_of(x, line, pos).coev_right;
      g.out = {Wire{x, true}, Wire{x, false}};
      break;
    }
    case K::frob_mult: {
      want_args(1);
      std::string f = plain_label(args[0]);
      g.matrix = R.frobenius_of(f, line, pos).mult;
      g.in = {Wire{f, false}, Wire{f, false}};
      g.out = {Wire{f, false}};
      break;
    }
    case K::frob_unit: {
      want_args(1);
      std::string f = plain_label(args[0]);
      g.matrix = R.frobenius_of(f, line, pos).unit;
      g.out = {Wire{f, false}};
      break;
    }
    case K::frob_comult: {
      want_args(1);
      std::string f = plain_label(args[0]);
      g.matrix = R.frobenius_of(f, line, pos).comult;
      g.in = {Wire{f, false}};
      g.out = {Wire{f, false}, Wire{f, false}};
      break;
    }
    case K::frob_counit: {
      want_args(1);
      std::string f = plain_label(args[0]);
      g.matrix = R.frobenius_of(f, line, pos).counit;
      g.in = {Wire{f, false}};
      break;
    }
    case K::named_map: {
      want_args(1);
      std::string m = trim(args[0]);
      auto it = R.ctx->maps.find(m);
      if (it == R.ctx->maps.end())
        err("unknown named map '" + m + "'", line, pos);
      g.matrix = it->second.matrix;
      g.in = it->second.in;
      g.out = it->second.out;
      break;
    }
  }
  for (const Wire& w : g.out) g.out_dims.push_back(R.module_of(w, line, pos).dim);
  return g;
}

// a line of a section, with its 1-based position in the original text
using NumberedLine = std::pair<int, std::string>;

std::vector<std::vector<NumberedLine>> split_sections(const std::string& text) {
  std::vector<std::vector<NumberedLine>> out(1);
  std::istringstream iss(text);
  std::string raw;
  int ln = 0;
  while (std::getline(iss, raw)) {
    ++ln;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (t.empty()) continue;
    if (t.size() >= 2 && t.find_first_not_of('=') == std::string::npos) {
      out.emplace_back();
      continue;
    }
    out.back().emplace_back(ln, t);
  }
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Diagram parse_section(const std::vector<NumberedLine>& lines, const DiagramContext& ctx) {
  if (ctx.hopf == nullptr)
    throw std::invalid_argument("parse_diagram: context has no bindings");
  if (lines.empty()) err("empty diagram section", 0, 0);
  Resolver R{&ctx};
  Diagram d;
  d.hopf = ctx.hopf;
  d.order = ctx.hopf->field_order;

  bool have_in = false;
  int in_line = 0;
  std::vector<Wire> declared;
  std::vector<NumberedLine> layer_lines;
  for (const auto& [ln, text] : lines) {
    if (text.rfind("in:", 0) == 0) {
      if (have_in) err("duplicate in: line", ln, 0);
      have_in = true;
      in_line = ln;
      std::istringstream ws(text.substr(3));
      std::string tok;
      int pos = 0;
      while (ws >> tok) {
        Wire w = parse_wire(tok, ln, pos);
        R.module_of(w, ln, pos);
        declared.push_back(w);
        ++pos;
      }
      continue;
    }
    layer_lines.push_back({ln, text});
  }

  // build the generator grid
  for (const auto& [ln, text] : layer_lines) {
    DiagramLayer layer;
    int pos = 0;
    for (const std::string& tok : split_on(text, '|')) {
      std::string t = trim(tok);
      if (t.empty()) err("empty generator", ln, pos);
      auto lb = t.find('[');
      if (lb == std::string::npos || t.back() != ']')
        err("expected 'name[args]', got '" + t + "'", ln, pos);
      std::string name = trim(t.substr(0, lb));
      std::string inner = t.substr(lb + 1, t.size() - lb - 2);
      std::vector<std::string> args;
      if (!trim(inner).empty())
        for (const std::string& a : split_on(inner, ',')) args.push_back(a);
      DiagramGen g = make_gen(name, args, R, ln, pos);
      pos += static_cast<int>(g.in.size());
      layer.gens.push_back(std::move(g));
    }
    d.slices.push_back(std::move(layer));
  }

  if (d.slices.empty()) {
    if (!have_in) err("a diagram with no layers needs an in: line", lines[0].first, 0);
    d.wires_in = declared;
    d.wires_out = declared;
  } else {
    // the wires entering the bottom layer are the diagram inputs
    std::vector<Wire> current;
    for (const auto& g : d.slices[0].gens)
      current.insert(current.end(), g.in.begin(), g.in.end());
    if (have_in) {
      for (size_t k = 0; k < std::max(declared.size(), current.size()); ++k) {
        if (k >= declared.size() || k >= current.size() ||
            !(declared[k] == current[k]))
          err("declared inputs do not match what the first layer consumes",
              in_line, static_cast<int>(k));
      }
    }
    d.wires_in = current;

    for (auto& layer : d.slices) {
      int pos = 0;
      std::vector<Wire> next;
      for (auto& g : layer.gens) {
        g.wire_pos = pos;
        for (const Wire& w : g.in) {
          if (pos >= static_cast<int>(current.size()))
            err("generator needs a wire '" + wire_name(w) + "' but the layer has none left",
                g.line, pos);
          if (!(current[pos] == w))
            err("generator expects wire '" + wire_name(w) + "' but found '" +
                    wire_name(current[pos]) + "'",
                g.line, pos);
          ++pos;
        }
        next.insert(next.end(), g.out.begin(), g.out.end());
      }
      if (pos != static_cast<int>(current.size()))
        err("layer leaves " + std::to_string(current.size() - pos) +
                " wire(s) unconsumed",
            layer.gens.back().line, pos);
      current = std::move(next);
    }
    d.wires_out = current;
  }

  for (const Wire& w : d.wires_in)
    d.in_modules.push_back(R.module_of(w, 0, 0));
  for (const Wire& w : d.wires_out)
    d.out_modules.push_back(R.module_of(w, 0, 0));
  return d;
}

// w[.., y, x, ..] = v[.., x, y, ..] for the two slots at pos
Vec flip_slots(const std::vector<int>& dims, int pos, const Vec& v) {
  long left = 1, right = 1;
  for (int i = 0; i < pos; ++i) left *= dims[i];
  for (size_t i = pos + 2; i < dims.size(); ++i) right *= dims[i];
  long a = dims[pos], b = dims[pos + 1];
  Vec out(v.size(), scalar_zero(1));
  for (long l = 0; l < left; ++l)
    for (long x = 0; x < a; ++x)
      for (long y = 0; y < b; ++y)
        for (long r = 0; r < right; ++r)
          out[((l * b + y) * a + x) * right + r] = v[((l * a + x) * b + y) * right + r];
  return out;
}

// tensor a fresh slot holding the column u into position pos
Vec insert_slot(const std::vector<int>& dims, int pos, const Vec& u, const Vec& v) {
  long left = 1, right = 1;
  for (int i = 0; i < pos; ++i) left *= dims[i];
  for (size_t i = pos; i < dims.size(); ++i) right *= dims[i];
  long D = static_cast<long>(u.size());
  Vec out(static_cast<size_t>(left * D * right), scalar_zero(1));
  for (long l = 0; l < left; ++l)
    for (long n = 0; n < D; ++n) {
      if (u[n].is_zero()) continue;
      for (long r = 0; r < right; ++r) {
        const Scalar& sv = v[l * right + r];
        if (sv.is_zero()) continue;
        out[(l * D + n) * right + r] = mul(u[n], sv);
      }
    }
  return out;
}

void apply_gen(const DiagramGen& g, std::vector<int>& dims, int pos, Vec& v) {
  using K = DiagramGen::Kind;
  if (g.kind == K::id) return;

  if (g.kind == K::braid || g.kind == K::braid_inv) {
    Vec acc = vec_zero(static_cast<int>(v.size()), 1);
    for (const auto& [ma, mb] : g.braid_factors) {
      std::vector<int> scratch = dims;
      Vec t = apply_to_slots(ma, scratch, pos, 1, v);
      t = apply_to_slots(mb, scratch, pos + 1, 1, t);
      acc = vec_add(acc, t);
    }
    v = flip_slots(dims, pos, acc);
    std::swap(dims[pos], dims[pos + 1]);
    return;
  }

  if (g.in.empty()) {
    v = insert_slot(dims, pos, column_of(g.matrix, 0), v);
  } else {
    v = apply_to_slots(g.matrix, dims, pos, static_cast<int>(g.in.size()), v);
    dims.erase(dims.begin() + pos);  // the collapsed range
  }
  // one slot per output wire; the flat coordinates already agree
  for (size_t k = g.out_dims.size(); k-- > 0;)
    dims.insert(dims.begin() + pos, g.out_dims[k]);
}

}  // namespace

void DiagramContext::bind_module(const std::string& name, const ModuleRep& m) {
  if (m.hopf == nullptr)
    throw std::invalid_argument("bind_module: module has no hopf data");
  if (hopf == nullptr)
    hopf = m.hopf;
  else if (hopf != m.hopf)
    throw std::invalid_argument("bind_module: mixed hopf data in one context");
  if (modules.count(name) || frobenius.count(name) || maps.count(name))
    throw std::invalid_argument("bind_module: label '" + name + "' already bound");
  modules.emplace(name, m);
}

void DiagramContext::bind_frobenius(const std::string& name, const FrobeniusObject& f) {
  if (f.object.hopf == nullptr)
    throw std::invalid_argument("bind_frobenius: module has no hopf data");
  if (hopf == nullptr)
    hopf = f.object.hopf;
  else if (hopf != f.object.hopf)
    throw std::invalid_argument("bind_frobenius: mixed hopf data in one context");
  if (modules.count(name) || frobenius.count(name) || maps.count(name))
    throw std::invalid_argument("bind_frobenius: label '" + name + "' already bound");
  frobenius.emplace(name, f);
}

void DiagramContext::bind_map(const std::string& name, const Matrix& m,
                              const std::vector<std::string>& in_spec,
                              const std::vector<std::string>& out_spec) {
  if (modules.count(name) || frobenius.count(name) || maps.count(name))
    throw std::invalid_argument("bind_map: label '" + name + "' already bound");
  NamedMapBinding b;
  b.matrix = m;
  auto resolve = [&](const std::vector<std::string>& spec, std::vector<Wire>* out) {
    long total = 1;
    for (const std::string& s : spec) {
      Wire w = parse_wire(s, 0, 0);
      const ModuleRep* mod = nullptr;
      auto it = modules.find(w.label);
      if (it != modules.end()) mod = &it->second;
      auto jt = frobenius.find(w.label);
      if (jt != frobenius.end()) mod = &jt->second.object;
      if (!mod)
        throw std::invalid_argument("bind_map: unknown label '" + w.label + "'");
      total *= mod->dim;  // duals have the same dimension
      out->push_back(w);
    }
    return total;
  };
  long din = resolve(in_spec, &b.in);
  long dout = resolve(out_spec, &b.out);
  if (m.cols != din || m.rows != dout)
    throw std::invalid_argument("bind_map: matrix shape does not match the wires");
  maps.emplace(name, std::move(b));
}

int Diagram::in_dim() const {
  int d = 1;
  for (const auto& m : in_modules) d *= m.dim;
  return d;
}

int Diagram::out_dim() const {
  int d = 1;
  for (const auto& m : out_modules) d *= m.dim;
  return d;
}

Diagram parse_diagram(const std::string& text, const DiagramContext& ctx) {
  auto sections = split_sections(text);
  if (sections.size() != 1)
    err("expected a single diagram, found " + std::to_string(sections.size()) +
            " sections",
        0, 0);
  return parse_section(sections[0], ctx);
}

std::vector<Diagram> parse_diagram_sections(const std::string& text,
                                            const DiagramContext& ctx) {
  std::vector<Diagram> out;
  for (const auto& sec : split_sections(text)) out.push_back(parse_section(sec, ctx));
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read diagram file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Diagram load_diagram_file(const std::string& path, const DiagramContext& ctx) {
  return parse_diagram(read_file(path), ctx);
}

std::vector<Diagram> load_diagram_sections_file(const std::string& path,
                                                const DiagramContext& ctx) {
  return parse_diagram_sections(read_file(path), ctx);
}

Vec evaluate_on(const Diagram& d, const Vec& v0) {
  if (static_cast<int>(v0.size()) != d.in_dim())
    throw std::invalid_argument("evaluate_on: vector has the wrong length");
  Vec v = v0;
  std::vector<int> dims;
  for (const auto& m : d.in_modules) dims.push_back(m.dim);
  for (const auto& layer : d.slices) {
    int pos = 0;
    for (const auto& g : layer.gens) {
      apply_gen(g, dims, pos, v);
      pos += static_cast<int>(g.out.size());
    }
  }
  return v;
}

Matrix evaluate_matrix(const Diagram& d) {
  int n = d.in_dim(), m = d.out_dim();
  Matrix out = zero_matrix(m, n, d.order);
  for (int c = 0; c < n; ++c) {
    Vec col = evaluate_on(d, basis_vec(n, c, d.order));
    for (int r = 0; r < m; ++r) out.set(r, c, col[r]);
  }
  return out;
}

ModuleMap evaluate(const Diagram& d) {
  ModuleRep src = trivial_module(*d.hopf);
  for (size_t i = 0; i < d.in_modules.size(); ++i)
    src = (i == 0) ? d.in_modules[0] : tensor(src, d.in_modules[i]);
  ModuleRep tgt = trivial_module(*d.hopf);
  for (size_t i = 0; i < d.out_modules.size(); ++i)
    tgt = (i == 0) ? d.out_modules[0] : tensor(tgt, d.out_modules[i]);
  return ModuleMap{std::move(src), std::move(tgt), evaluate_matrix(d)};
}

}  // namespace bulkcor

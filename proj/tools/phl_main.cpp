// Batch driver: inspect charts, build cones, compute and classify holonomy,
// or run the built-in verification suite.  All exact; reports are stable
// key/value trees suitable for diffing.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phl/acceptance.hpp"
#include "phl/catalog.hpp"
#include "phl/classify.hpp"
#include "phl/cone.hpp"
#include "phl/holonomy.hpp"
#include "phl/manifest.hpp"
#include "phl/report.hpp"

namespace {

using phl::ConeChart;
using phl::ConeKind;
using phl::ConnectionChart;
using phl::GaussRat;
using phl::ojson;
using phl::Rat;
using phl::TensorJet;

// --------------------------------------------------------------------------
// Target grammar: catalog names with ':'-separated arguments, commas between
// product factors, e.g. product:quadric:3,0,1,quadric:3,0,1.

struct TargetNode {
  std::string kind;
  std::vector<long> ints;
  Rat a;
  std::unique_ptr<TargetNode> left, right;

  std::string canonical() const {
    if (kind == "product") return "product:" + left->canonical() + "," + right->canonical();
    std::string s = kind;
    char sep = ':';
    for (long v : ints) {
      s += sep + std::to_string(v);
      sep = ',';
    }
    if (kind == "quadric") s += sep + a.to_string();
    return s;
  }
};

std::vector<std::string> tokenize_target(const std::string& t) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : t) {
    if (ch == ':' || ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& tok, const std::string& what) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("target: " + what + " expects an integer, got \"" + tok + "\"");
  }
  if (used != tok.size())
    throw std::runtime_error("target: " + what + " expects an integer, got \"" + tok + "\"");
  return v;
}

Rat parse_rat(const std::string& tok, const std::string& what) {
  size_t slash = tok.find('/');
  if (slash == std::string::npos) return Rat(parse_long(tok, what));
  long p = parse_long(tok.substr(0, slash), what);
  long q = parse_long(tok.substr(slash + 1), what);
  if (q == 0) throw std::runtime_error("target: " + what + " has zero denominator");
  return Rat(p, q);
}

std::unique_ptr<TargetNode> parse_target(const std::vector<std::string>& toks, size_t& pos) {
  if (pos >= toks.size()) throw std::runtime_error("target: unexpected end of input");
  auto node = std::make_unique<TargetNode>();
  node->kind = toks[pos++];
  auto need = [&](const std::string& what) -> std::string {
    if (pos >= toks.size())
      throw std::runtime_error("target: missing argument " + what + " for " + node->kind);
    return toks[pos++];
  };
  if (node->kind == "flat" || node->kind == "non-einstein" || node->kind == "symplectic" ||
      node->kind == "cquadric") {
    node->ints.push_back(parse_long(need("dim"), node->kind + " dimension"));
  } else if (node->kind == "quadric") {
    node->ints.push_back(parse_long(need("s"), "quadric s"));
    node->ints.push_back(parse_long(need("t"), "quadric t"));
    node->a = parse_rat(need("a"), "quadric a");
  } else if (node->kind == "cy2d") {
    // no arguments
  } else if (node->kind == "product") {
    node->left = parse_target(toks, pos);
    node->right = parse_target(toks, pos);
  } else {
    throw std::runtime_error("target: unknown catalog entry \"" + node->kind + "\"");
  }
  return node;
}

bool is_catalog_target(const std::string& target) {
  std::string head = tokenize_target(target)[0];
  return head == "flat" || head == "quadric" || head == "non-einstein" || head == "cy2d" ||
         head == "symplectic" || head == "cquadric" || head == "product";
}

// --------------------------------------------------------------------------
// Resolution: a target becomes a chart over one of the two fields, plus the
// auxiliary data some cone kinds need.

struct Resolved {
  std::string name;
  bool gaussian = false;
  std::optional<ConnectionChart<Rat>> r;
  std::optional<ConnectionChart<GaussRat>> g;
  std::optional<TensorJet<Rat>> nu;          // symplectic catalog entry
  std::optional<TensorJet<GaussRat>> rho_c;  // cquadric catalog entry
  std::vector<std::string> shift_notes;
};

void resolve_node(const TargetNode& node, int order, bool generic_shift, int& salt,
                  Resolved& out) {
  if (node.kind == "flat") {
    out.r = phl::flat<Rat>(static_cast<int>(node.ints[0]), order);
  } else if (node.kind == "quadric") {
    int dim = static_cast<int>(node.ints[0] + node.ints[1]) - 1;
    std::vector<Rat> shift;
    if (generic_shift) {
      shift = phl::default_generic_shift(dim, salt);
      salt += 2;
      std::string s = node.canonical() + " shifted to base point (";
      for (size_t i = 0; i < shift.size(); ++i)
        s += (i ? "," : "") + shift[i].to_string();
      out.shift_notes.push_back(s + ")");
    }
    out.r = phl::quadric_chart(static_cast<int>(node.ints[0]), static_cast<int>(node.ints[1]),
                               node.a, order, shift)
                .conn;
  } else if (node.kind == "non-einstein") {
    out.r = phl::non_einstein_chart<Rat>(static_cast<int>(node.ints[0]), order);
  } else if (node.kind == "cy2d") {
    out.r = phl::cotton_york_2d(order);
  } else if (node.kind == "symplectic") {
    phl::SymplecticExample se =
        phl::symplectic_example(static_cast<int>(node.ints[0]), order);
    out.r = std::move(se.conn);
    out.nu = std::move(se.nu);
  } else if (node.kind == "cquadric") {
    int m = static_cast<int>(node.ints[0]);
    std::vector<Rat> shift;
    if (generic_shift) {
      shift = phl::default_generic_shift(m, salt);
      salt += 2;
      std::string s = node.canonical() + " shifted to base point (";
      for (size_t i = 0; i < shift.size(); ++i)
        s += (i ? "," : "") + shift[i].to_string();
      out.shift_notes.push_back(s + ")");
    }
    phl::ComplexQuadric cq = phl::complex_quadric_chart(m, order, shift);
    out.g = std::move(cq.conn);
    out.rho_c = std::move(cq.rho_c);
    out.gaussian = true;
  } else if (node.kind == "product") {
    Resolved a, b;
    resolve_node(*node.left, order, generic_shift, salt, a);
    resolve_node(*node.right, order, generic_shift, salt, b);
    for (auto& n : a.shift_notes) out.shift_notes.push_back(n);
    for (auto& n : b.shift_notes) out.shift_notes.push_back(n);
    if (a.gaussian != b.gaussian)
      throw std::runtime_error("target: product factors must be over the same field");
    if (a.gaussian) {
      out.g = phl::product_connection(*a.g, *b.g);
      out.gaussian = true;
    } else {
      out.r = phl::product_connection(*a.r, *b.r);
    }
  }
}

Resolved resolve_target(const std::string& target, int order, bool order_given,
                        bool generic_shift) {
  Resolved out;
  if (is_catalog_target(target)) {
    std::vector<std::string> toks = tokenize_target(target);
    size_t pos = 0;
    std::unique_ptr<TargetNode> node = parse_target(toks, pos);
    if (pos != toks.size())
      throw std::runtime_error("target: trailing arguments after " + node->canonical());
    out.name = node->canonical();
    int salt = 0;
    resolve_node(*node, order, generic_shift, salt, out);
    return out;
  }
  phl::Manifest m = phl::load_manifest(target);
  out.name = m.name;
  int use_order = order_given ? order : m.order;
  m.order = use_order;
  if (m.field == "gaussian") {
    out.g = phl::manifest_connection<GaussRat>(m);
    out.gaussian = true;
  } else {
    out.r = phl::manifest_connection<Rat>(m);
  }
  return out;
}

// --------------------------------------------------------------------------
// Cone building per kind.

template <class F>
TensorJet<F> auto_complex_rho(const ConnectionChart<F>& conn) {
  int m = conn.dim;
  if (m < 2)
    throw std::runtime_error("complex cone: base must have complex dimension at least 2");
  TensorJet<F> ric = ricci(conn);
  TensorJet<F> p(conn.dim, {phl::Slot::Lo, phl::Slot::Lo}, ric.order());
  F coeff = phl::frac<F>(1, 2 * (1 - m));
  std::vector<int> idx(2, 0);
  do {
    p.at(idx) = coeff * ric.at(idx);
  } while (phl::next_index(idx, conn.dim));
  return p;
}

struct BuiltCone {
  std::optional<ConeChart<Rat>> r;
  std::optional<ConeChart<GaussRat>> g;
};

BuiltCone build_cone(Resolved& res, const std::string& kind, bool auto_data) {
  BuiltCone out;
  if (kind == "real") {
    if (res.gaussian)
      out.g = phl::projective_cone(*res.g);
    else
      out.r = phl::projective_cone(*res.r);
  } else if (kind == "complex") {
    if (!res.gaussian)
      throw std::runtime_error(
          "complex cone: target must be over the gaussian field (a holomorphic chart)");
    TensorJet<GaussRat> rho_c = res.rho_c ? *res.rho_c : auto_complex_rho(*res.g);
    out.g = phl::complex_cone(*res.g, rho_c);
  } else if (kind == "symplectic") {
    if (res.gaussian || !res.r)
      throw std::runtime_error("symplectic cone: target must be over the rationals");
    if (!res.nu)
      throw std::runtime_error(
          "symplectic cone: only the symplectic catalog entry carries the parallel "
          "two-form nu");
    if (!auto_data)
      throw std::runtime_error(
          "symplectic cone: pass --auto-data to derive the canonical Ricci-flattening "
          "data");
    phl::SymplecticConeData<Rat> data = phl::ricci_flat_data(*res.r, *res.nu);
    out.r = phl::symplectic_cone(*res.r, data);
  } else {
    throw std::runtime_error("cone: kind must be real, complex or symplectic");
  }
  return out;
}

// --------------------------------------------------------------------------
// Human-readable rendering of the report trees.

std::string yesno(bool b) { return b ? "yes" : "no"; }

void render_tensor(std::ostream& os, const std::string& label, const ojson& t) {
  bool zero = t.at("zero").get<bool>();
  os << label << ": " << (zero ? "zero" : "nonzero") << "\n";
  if (!zero && t.contains("components")) {
    os << "  shown to degree " << t.at("shown_to_degree").get<int>() << ":\n";
    for (const auto& [key, val] : t.at("components").items())
      os << "    (" << key << ")  " << val.get<std::string>() << "\n";
  }
}

void render_inspect(std::ostream& os, const ojson& o) {
  const ojson& in = o.at("input");
  os << "inspect " << in.at("target").get<std::string>() << "\n";
  os << "field: " << in.at("field").get<std::string>() << ", dim " << in.at("dim").get<int>()
     << ", jet order " << in.at("order").get<int>() << "\n";
  render_tensor(os, "ricci", o.at("ricci"));
  os << "ricci symmetric: " << yesno(o.at("ricci_symmetric").get<bool>()) << "\n";
  render_tensor(os, "rho", o.at("rho"));
  os << "rho nondegenerate at origin: "
     << yesno(o.at("rho_nondegenerate_at_origin").get<bool>()) << "\n";
  os << "einstein: " << yesno(o.at("einstein").get<bool>());
  if (o.contains("einstein_reason")) os << " (" << o.at("einstein_reason").get<std::string>() << ")";
  os << "\n";
  render_tensor(os, "projective weyl", o.at("projective_weyl"));
  render_tensor(os, "cotton-york", o.at("cotton_york"));
}

void render_cone(std::ostream& os, const ojson& o) {
  const ojson& in = o.at("input");
  os << "cone " << in.at("target").get<std::string>() << " (kind "
     << o.at("kind").get<std::string>() << ")\n";
  os << "field: " << in.at("field").get<std::string>() << ", cone dim "
     << o.at("cone_dim").get<int>() << ", jet order " << o.at("cone_order").get<int>() << "\n";
  os << "torsion exactly zero: " << yesno(o.at("torsion_zero").get<bool>()) << "\n";
  os << "ricci exactly zero: " << yesno(o.at("ricci_zero").get<bool>()) << "\n";
  if (o.contains("complex_structure_parallel"))
    os << "complex structure parallel: "
       << yesno(o.at("complex_structure_parallel").get<bool>()) << "\n";
  if (o.contains("symplectic_form_scale_identity"))
    os << "symplectic form scale identity: "
       << yesno(o.at("symplectic_form_scale_identity").get<bool>()) << "\n";
}

void render_holonomy(std::ostream& os, const ojson& o) {
  const ojson& in = o.at("input");
  os << "holonomy " << in.at("target").get<std::string>() << " (kind "
     << o.at("kind").get<std::string>() << ")\n";
  os << "fiber dim " << o.at("fiber_dim").get<int>() << ", cone jet order "
     << o.at("cone_order").get<int>() << "\n";
  if (o.contains("generic_shift"))
    for (const auto& n : o.at("generic_shift"))
      os << "note: " << n.get<std::string>() << "\n";
  os << "dims by depth:";
  for (const auto& d : o.at("dims_by_depth")) os << " " << d.get<int>();
  os << "\n";
  os << "dimension: " << o.at("dimension").get<int>() << "\n";
  os << "stabilized: " << yesno(o.at("stabilized").get<bool>());
  if (o.contains("stabilized_at_depth"))
    os << " (at depth " << o.at("stabilized_at_depth").get<int>() << ")";
  os << "\n";
  const ojson& cl = o.at("classification");
  os << "classification: " << cl.at("label").get<std::string>() << "\n";
  if (cl.contains("signature"))
    os << "  signature: " << cl.at("signature").get<std::string>() << "\n";
  if (cl.contains("evidence"))
    for (const auto& e : cl.at("evidence")) os << "  evidence: " << e.get<std::string>() << "\n";
}

void emit(const ojson& o, bool as_json, const std::string& out_file,
          void (*render)(std::ostream&, const ojson&)) {
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw std::runtime_error("cannot open output file \"" + out_file + "\"");
    f << phl::render_report(o);
  }
  if (as_json)
    std::cout << phl::render_report(o);
  else
    render(std::cout, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact projective-differential-geometry toolkit"};
  app.require_subcommand(1);

  std::string target, kind = "real", out_file;
  int order = 6;
  int max_depth = -1;
  bool as_json = false, auto_data = false, corrupt = false;

  auto add_common = [&](CLI::App* sub, bool with_target) {
    if (with_target)
      sub->add_option("target", target,
                      "catalog entry (flat:N, quadric:s,t,a, non-einstein:N, cy2d, "
                      "symplectic:N, cquadric:M, product:<a>,<b>) or a manifest file")
          ->required();
    sub->add_option("--order", order, "jet truncation order");
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_option("--out", out_file, "also write the machine-readable report here");
  };

  CLI::App* c_inspect = app.add_subcommand("inspect", "projective invariants of a chart");
  add_common(c_inspect, true);

  CLI::App* c_cone = app.add_subcommand("cone", "build a cone and verify its contract");
  add_common(c_cone, true);
  c_cone->add_option("--kind", kind, "real | complex | symplectic");
  c_cone->add_flag("--auto-data", auto_data,
                   "derive the canonical Ricci-flattening data (symplectic kind)");

  CLI::App* c_hol = app.add_subcommand("holonomy", "infinitesimal holonomy of a cone");
  add_common(c_hol, true);
  c_hol->add_option("--kind", kind, "real | complex | symplectic");
  c_hol->add_flag("--auto-data", auto_data,
                  "derive the canonical Ricci-flattening data (symplectic kind)");
  c_hol->add_option("--max-depth", max_depth, "cap the derivative depth");

  CLI::App* c_demo = app.add_subcommand("demo", "run the built-in verification suite");
  c_demo->add_option("--order", order, "jet truncation order for the heavyweight cases");
  c_demo->add_flag("--json", as_json, "machine-readable output");
  c_demo->add_option("--out", out_file, "also write the machine-readable report here");
  c_demo->add_flag("--corrupt", corrupt, "perturb a catalog constant to show a failure");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_inspect->parsed()) {
      Resolved res = resolve_target(target, order, c_inspect->count("--order") > 0, false);
      ojson o = res.gaussian ? phl::inspect_json(*res.g, res.name)
                             : phl::inspect_json(*res.r, res.name);
      emit(o, as_json, out_file, render_inspect);
      return 0;
    }
    if (c_cone->parsed()) {
      Resolved res = resolve_target(target, order, c_cone->count("--order") > 0, false);
      BuiltCone bc = build_cone(res, kind, auto_data);
      ojson o = bc.g ? phl::cone_json(*bc.g, res.name) : phl::cone_json(*bc.r, res.name);
      emit(o, as_json, out_file, render_cone);
      bool ok = o.at("torsion_zero").get<bool>() && o.at("ricci_zero").get<bool>();
      return ok ? 0 : 1;
    }
    if (c_hol->parsed()) {
      Resolved res = resolve_target(target, order, c_hol->count("--order") > 0, true);
      BuiltCone bc = build_cone(res, kind, auto_data);
      ojson o;
      if (bc.g) {
        phl::HolonomyResult<GaussRat> hol = phl::infinitesimal_holonomy(bc.g->cone, max_depth);
        o = phl::holonomy_json(*bc.g, hol, res.name);
        phl::attach_classification(o, hol);
      } else {
        phl::HolonomyResult<Rat> hol = phl::infinitesimal_holonomy(bc.r->cone, max_depth);
        o = phl::holonomy_json(*bc.r, hol, res.name);
        phl::attach_classification(o, hol);
      }
      if (!res.shift_notes.empty()) o["generic_shift"] = res.shift_notes;
      emit(o, as_json, out_file, render_holonomy);
      return 0;
    }
    if (c_demo->parsed()) {
      phl::AcceptanceOptions opt;
      opt.corrupt = corrupt;
      if (c_demo->count("--order") > 0) opt.order = order;
      phl::AcceptanceRun run = phl::run_acceptance(opt);
      if (!out_file.empty() || as_json) {
        ojson o = phl::acceptance_json(run);
        if (!out_file.empty()) {
          std::ofstream f(out_file);
          if (!f) throw std::runtime_error("cannot open output file \"" + out_file + "\"");
          f << phl::render_report(o);
        }
        if (as_json) std::cout << phl::render_report(o);
      }
      if (!as_json) return phl::print_acceptance(run, std::cout);
      return run.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "bbs_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbs/deform.hpp"
#include "bbs/error.hpp"
#include "bbs/grading.hpp"
#include "bbs/scheme.hpp"
#include "bbs_cli/problem.hpp"

namespace bbs::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  bool json = false;
  std::string order = "degrevlex";
  std::string permutation;

  int higher = 1;
  bool check = false;
  std::string poly;
  std::string method = "comm";
  bool homogeneous = false;
  std::string weights;
  bool minimalize = false;
  bool cell = false;
  bool dim = false;
  std::string grading = "arrow";
  std::string stage = "full";
  std::string fiber;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string term_text(const Term& t, const ContextPtr& ctx) { return to_string(t, *ctx); }

Json terms_json(const std::vector<Term>& ts, const ContextPtr& ctx) {
  Json a = Json::array();
  for (const Term& t : ts) a.push_back(term_text(t, ctx));
  return a;
}

Json polys_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const Polynomial& p : ps) a.push_back(p.to_string());
  return a;
}

void print_lines(std::ostream& out, const std::vector<Polynomial>& ps, const std::string& indent = "") {
  for (const Polynomial& p : ps) out << indent << p.to_string() << "\n";
}

class Command {
 public:
  Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void load() { pf_ = load_problem(opt_.file); }

  const OrderIdeal& order_ideal() const {
    if (!pf_.order_ideal) throw Usage("the problem file has no 'orderideal' clause");
    return *pf_.order_ideal;
  }
  const std::vector<Polynomial>& ideal() const {
    if (!pf_.ideal) throw Usage("the problem file has no 'ideal' clause");
    return *pf_.ideal;
  }
  const BorderPrebasis& prebasis() const {
    if (!pf_.prebasis) throw Usage("the problem file has no 'prebasis' clause");
    return *pf_.prebasis;
  }
  TermOrdering ordering() const { return TermOrdering::parse(opt_.order); }
  WeightVector weights() const {
    if (!opt_.weights.empty()) {
      WeightVector w(TermOrdering::parse("W:" + opt_.weights).weights());
      if (w.size() != pf_.ring->num_main()) throw Usage("--weights needs one entry per ring variable");
      return w;
    }
    if (pf_.weights) return *pf_.weights;
    return WeightVector::standard(pf_.ring->num_main());
  }
  std::vector<VarRef> main_vars() const {
    std::vector<VarRef> v;
    for (int k = 0; k < pf_.ring->num_main(); ++k) v.push_back({VarKind::Main, k});
    return v;
  }
  Polynomial poly_option() const {
    if (opt_.poly.empty()) throw Usage("--poly is required");
    return parse_polynomial(opt_.poly, pf_.ring);
  }

  GenericPrebasis generic(bool homogeneous) const {
    std::optional<WeightVector> w;
    if (homogeneous) w = weights();
    return GenericPrebasis::make(order_ideal(), pf_.ring->main_vars(), w, pf_.ring->deform_var());
  }

  // Parameter renaming from --fixture-permutation "t1, t2, ... | b1, b2, ...".
  std::function<Polynomial(const Polynomial&)> relabel(const GenericPrebasis& g) const {
    if (opt_.permutation.empty()) return [](const Polynomial& p) { return p; };
    auto bar = opt_.permutation.find('|');
    if (bar == std::string::npos) throw Usage("--fixture-permutation needs 'terms | border terms'");
    auto read = [&](const std::string& text) {
      std::vector<Term> ts;
      std::size_t start = 0;
      while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        ts.push_back(parse_term(item, g.context()));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return ts;
    };
    auto map = parameter_relabeling(g, read(opt_.permutation.substr(0, bar)), read(opt_.permutation.substr(bar + 1)));
    return [map](const Polynomial& p) { return substitute(p, map); };
  }

  int border() {
    load();
    const OrderIdeal& o = order_ideal();
    if (opt_.higher < 0) throw Usage("--higher must be non-negative");
    std::vector<Term> b = opt_.higher == 1 ? o.border() : higher_border(o, opt_.higher);
    if (opt_.json) {
      Json j;
      j["order_ideal"] = terms_json(o.terms(), pf_.ring);
      j["index"] = opt_.higher;
      j["border"] = terms_json(b, pf_.ring);
      out_ << j.dump(2) << "\n";
    } else {
      for (const Term& t : b) out_ << term_text(t, pf_.ring) << "\n";
    }
    return 0;
  }

  int web() {
    load();
    const OrderIdeal& o = order_ideal();
    BorderWeb w = border_web(o);
    const auto& names = pf_.ring->main_vars();
    auto b = [&](int j) { return term_text(o.border_term(j), pf_.ring); };
    if (opt_.json) {
      Json j;
      j["vertices"] = terms_json(o.border(), pf_.ring);
      Json edges = Json::array();
      for (const WebEdge& e : w.edges) {
        Json x;
        x["kind"] = e.kind == WebEdge::Kind::NextDoor ? "ND" : "AS";
        x["i"] = e.i + 1;
        x["j"] = e.j + 1;
        x["k"] = names[static_cast<std::size_t>(e.k)];
        if (e.kind == WebEdge::Kind::AcrossStreet) {
          x["l"] = names[static_cast<std::size_t>(e.l)];
          x["corner"] = e.corner;
          if (e.corner) x["witness"] = e.witness + 1;
        }
        edges.push_back(x);
      }
      j["edges"] = edges;
      out_ << j.dump(2) << "\n";
      return 0;
    }
    for (int v = 0; v < o.nu(); ++v) out_ << "b" << v + 1 << " = " << b(v) << "\n";
    for (const WebEdge& e : w.edges) {
      const std::string& xk = names[static_cast<std::size_t>(e.k)];
      if (e.kind == WebEdge::Kind::NextDoor) {
        out_ << "ND(" << e.i + 1 << "," << e.j + 1 << ")  " << b(e.i) << " = " << xk << " * " << b(e.j) << "\n";
      } else {
        const std::string& xl = names[static_cast<std::size_t>(e.l)];
        out_ << "AS(" << e.i + 1 << "," << e.j + 1 << ")  " << xk << " * " << b(e.i) << " = " << xl << " * " << b(e.j);
        if (e.corner) out_ << "  corner via b" << e.witness + 1 << " = " << b(e.witness);
        out_ << "\n";
      }
    }
    return 0;
  }

  void print_prebasis(const BorderPrebasis& g) {
    if (opt_.json) {
      Json j;
      j["order_ideal"] = terms_json(g.order_ideal().terms(), pf_.ring);
      j["border"] = terms_json(g.order_ideal().border(), pf_.ring);
      j["basis"] = polys_json(g.polynomials());
      out_ << j.dump(2) << "\n";
    } else {
      print_lines(out_, g.polynomials());
    }
  }

  int borderbasis() {
    load();
    if (opt_.check) {
      CommutingVerdict v = is_border_basis(prebasis());
      report_commuting(v, "border basis", "not a border basis");
      return v ? 0 : 1;
    }
    print_prebasis(border_basis_of_ideal(ideal(), order_ideal(), ordering()));
    return 0;
  }

  void report_commuting(const CommutingVerdict& v, const std::string& yes, const std::string& no) {
    if (opt_.json) {
      Json j;
      j["verdict"] = v ? yes : no;
      if (v.witness) j["witness"] = witness_json(*v.witness);
      out_ << j.dump(2) << "\n";
    } else if (v) {
      out_ << yes << "\n";
    } else {
      out_ << no << ": " << witness_text(*v.witness) << "\n";
    }
  }

  static Json witness_json(const CommutatorEntry& e) {
    return Json{{"k", e.k + 1}, {"l", e.l + 1}, {"row", e.row + 1}, {"col", e.col + 1}, {"value", e.value.to_string()}};
  }
  static std::string witness_text(const CommutatorEntry& e) {
    return "[A_" + std::to_string(e.k + 1) + ", A_" + std::to_string(e.l + 1) + "] entry (" +
           std::to_string(e.row + 1) + ", " + std::to_string(e.col + 1) + ") = " + e.value.to_string();
  }

  int groebner() {
    load();
    GroebnerBasis gb = buchberger(ideal(), ordering(), pf_.ring);
    if (opt_.json) {
      out_ << Json{{"order", ordering().to_string()}, {"basis", polys_json(gb.elements())}}.dump(2) << "\n";
    } else {
      print_lines(out_, gb.elements());
    }
    return 0;
  }

  int nf() {
    load();
    Polynomial f = poly_option();
    Polynomial r = normal_form(f, buchberger(ideal(), ordering(), pf_.ring));
    if (opt_.json) {
      out_ << Json{{"normal_form", r.to_string()}}.dump(2) << "\n";
    } else {
      out_ << r.to_string() << "\n";
    }
    return 0;
  }

  int member() {
    load();
    Polynomial f = poly_option();
    bool yes = ideal_member(f, buchberger(ideal(), ordering(), pf_.ring));
    if (opt_.json) {
      out_ << Json{{"member", yes}}.dump(2) << "\n";
    } else {
      out_ << (yes ? "member" : "not a member") << "\n";
    }
    return yes ? 0 : 1;
  }

  int dim() {
    load();
    int d = krull_dimension(buchberger(ideal(), ordering(), pf_.ring), main_vars());
    if (opt_.json) {
      out_ << Json{{"dimension", d}}.dump(2) << "\n";
    } else {
      out_ << d << "\n";
    }
    return 0;
  }

  std::vector<GeneratorBlock> scheme_blocks(const GenericPrebasis& g) const {
    if (opt_.method == "comm") return commutator_generators(g);
    if (opt_.method == "syzygy") return syzygy_generators(g);
    throw Usage("--method must be comm or syzygy");
  }

  int scheme() {
    load();
    GenericPrebasis g = generic(opt_.homogeneous);
    auto rename = relabel(g);
    std::vector<GeneratorBlock> blocks = scheme_blocks(g);
    std::vector<Removal> log;
    if (opt_.minimalize) {
      if (opt_.method != "syzygy") throw Usage("--minimalize works on --method syzygy blocks");
      MinimalizeResult m = minimalize_blocks(g, blocks);
      blocks = std::move(m.kept);
      log = std::move(m.log);
    }
    std::vector<Polynomial> all = flatten(blocks);
    std::optional<CellSolution> cell;
    if (opt_.cell) cell = eliminate_linear_parameters(all, g.parameters());
    std::optional<int> dimension;
    if (opt_.dim) dimension = scheme_dimension(all, g.parameters());
    auto pname = [&](VarRef v) { return rename(Polynomial::variable(g.context(), v)).to_string(); };
    std::vector<std::string> free_names;
    if (cell) {
      std::vector<VarRef> renamed;
      for (VarRef v : cell->free) renamed.push_back(*g.context()->find(pname(v)));
      std::sort(renamed.begin(), renamed.end());
      for (VarRef v : renamed) free_names.push_back(g.context()->name(v));
    }

    if (opt_.json) {
      Json j;
      Json jb = Json::array();
      for (const GeneratorBlock& b : blocks) {
        Json x;
        x["label"] = b.label();
        if (b.corner) x["corner"] = true;
        Json ps = Json::array();
        for (const Polynomial& p : b.polys) ps.push_back(rename(p).to_string());
        x["polys"] = ps;
        jb.push_back(x);
      }
      j["blocks"] = jb;
      j["generators"] = all.size();
      if (!log.empty()) {
        Json jl = Json::array();
        for (const Removal& r : log) {
          jl.push_back(Json{{"removed", r.removed}, {"rule", r.rule}, {"identity", r.identity},
                            {"alternatives", r.alternatives}});
        }
        j["removed"] = jl;
      }
      if (cell) {
        Json free = free_names;
        Json bound = Json::object();
        for (const auto& [v, img] : cell->bound) bound[pname(v)] = rename(img).to_string();
        Json res = Json::array();
        for (const Polynomial& p : cell->residual) res.push_back(rename(p).to_string());
        j["cell"] = Json{{"free", free}, {"bound", bound}, {"residual", res}};
      }
      if (dimension) j["dimension"] = *dimension;
      out_ << j.dump(2) << "\n";
      return 0;
    }
    for (const GeneratorBlock& b : blocks) {
      out_ << b.label() << (b.corner ? " corner" : "") << ": " << b.polys.size() << " polynomials\n";
      for (const Polynomial& p : b.polys) out_ << "  " << rename(p).to_string() << "\n";
    }
    for (const Removal& r : log) {
      out_ << "removed " << r.removed << " (rule " << r.rule << "): " << r.identity << "\n";
    }
    out_ << all.size() << " generators in " << blocks.size() << " blocks\n";
    if (cell) {
      out_ << "free (" << cell->free.size() << "):";
      for (const std::string& v : free_names) out_ << " " << v;
      out_ << "\n";
      for (const auto& [v, img] : cell->bound) out_ << pname(v) << " -> " << rename(img).to_string() << "\n";
      out_ << "residual (" << cell->residual.size() << "):\n";
      for (const Polynomial& p : cell->residual) out_ << "  " << rename(p).to_string() << "\n";
      out_ << (cell->is_cell() ? "affine cell of dimension " + std::to_string(cell->free.size()) : "not an affine cell")
           << "\n";
    }
    if (dimension) out_ << "dimension " << *dimension << "\n";
    return 0;
  }

  int mingens() {
    load();
    GenericPrebasis g = generic(opt_.homogeneous);
    std::vector<Polynomial> all = flatten(scheme_blocks(g));
    std::map<VarRef, int> grading = arrow_grading(g);
    if (opt_.grading == "standard") {
      for (auto& [v, d] : grading) d = 1;
    } else if (opt_.grading != "arrow") {
      throw Usage("--grading must be arrow or standard");
    }
    for (const auto& [v, d] : grading) {
      if (d < 1) throw Error(ErrorCode::NotHomogeneous, "arrow degree of " + g.context()->name(v) + " is not positive");
    }
    int count = minimal_generator_count(all, grading);
    if (opt_.json) {
      out_ << Json{{"generators", all.size()}, {"minimal", count}}.dump(2) << "\n";
    } else {
      out_ << count << "\n";
    }
    return 0;
  }

  BorderPrebasis source_basis() const {
    if (pf_.prebasis) return *pf_.prebasis;
    return border_basis_of_ideal(ideal(), order_ideal(), ordering());
  }

  void print_family(const std::string& title, const DeformationFamily& f, const FlatnessVerdict& v, Json& j,
                    const std::function<Polynomial(const Polynomial&)>& rename) {
    std::optional<Rational> at;
    if (!opt_.fiber.empty()) at = parse_rational(opt_.fiber);
    std::vector<Polynomial> gens;
    for (const Polynomial& p : f.prebasis.polynomials()) gens.push_back(rename(p));
    std::vector<Polynomial> fib;
    if (at) {
      for (const Polynomial& p : fiber(f, *at).polynomials()) fib.push_back(rename(p));
    }
    if (opt_.json) {
      Json x;
      x["stage"] = title;
      x["generators"] = polys_json(gens);
      x["verdict"] = v ? "flat" : "not flat";
      if (v.witness) x["witness"] = witness_json(*v.witness);
      if (at) x["fiber"] = Json{{"at", to_string(*at)}, {"generators", polys_json(fib)}};
      j["families"].push_back(x);
      return;
    }
    out_ << title << ":\n";
    print_lines(out_, gens, "  ");
    if (at) {
      out_ << "fiber at " << f.prebasis.context()->deform_var().value_or("z") << " = " << to_string(*at) << ":\n";
      print_lines(out_, fib, "  ");
    }
    out_ << "verdict: " << (v ? "flat" : "not flat");
    if (v.witness) out_ << " (" << witness_text(*v.witness) << ")";
    out_ << "\n";
  }

  int deform() {
    load();
    Json j;
    j["families"] = Json::array();
    bool flat = true;
    auto emit = [&](const std::string& title, const DeformationFamily& f,
                    const std::function<Polynomial(const Polynomial&)>& rename) {
      FlatnessVerdict v = verify_flat_family(f);
      flat = flat && v.flat();
      print_family(title, f, v, j, rename);
    };
    auto same = [](const Polynomial& p) { return p; };
    WeightVector w = weights();
    if (opt_.stage == "df") {
      emit("degree form family", degree_form_family(source_basis(), w), same);
    } else if (opt_.stage == "hom") {
      emit("homogeneous family", homogeneous_family(source_basis(), w), same);
    } else if (opt_.stage == "full") {
      DeformationFamily s1 = degree_form_family(source_basis(), w);
      DeformationFamily s2 = homogeneous_family(fiber(s1, Rational(0)), w);
      emit("stage 1 (degree form family)", s1, same);
      emit("stage 2 (homogeneous family)", s2, same);
    } else if (opt_.stage == "curve") {
      GenericPrebasis g = generic(false);
      CellSolution cell = eliminate_linear_parameters(flatten(commutator_generators(g)), g.parameters());
      std::optional<std::map<VarRef, Rational>> point;
      if (pf_.has_point) {
        point.emplace();
        for (const auto& [name, value] : pf_.point) {
          auto v = g.context()->find(name);
          if (!v || v->kind != VarKind::Param) throw Usage("point names an unknown parameter '" + name + "'");
          (*point)[*v] = value;
        }
      }
      emit("rational curve family", ratcurve_family(g, cell, point), relabel(g));
    } else {
      throw Usage("--stage must be df, hom, full or curve");
    }
    if (opt_.json) out_ << j.dump(2) << "\n";
    return flat ? 0 : 1;
  }

  int verify_flat() {
    load();
    DeformationFamily f{prebasis(), pf_.ring, {}, false};
    FlatnessVerdict v = verify_flat_family(f);
    if (opt_.json) {
      Json j;
      j["verdict"] = v ? "flat" : "not flat";
      if (v.witness) j["witness"] = witness_json(*v.witness);
      Json fs = Json::array();
      for (const FiberCheck& c : v.fibers) fs.push_back(Json{{"at", to_string(c.at)}, {"border_basis", c.border_basis}});
      j["fibers"] = fs;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "verdict: " << (v ? "flat" : "not flat");
      if (v.witness) out_ << " (" << witness_text(*v.witness) << ")";
      out_ << "\n";
      for (const FiberCheck& c : v.fibers) {
        out_ << "fiber " << to_string(c.at) << ": " << (c.border_basis ? "border basis" : "not a border basis") << "\n";
      }
    }
    return v ? 0 : 1;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  ProblemFile pf_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Border bases, border basis schemes and flat deformations", "bbs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--order", opt.order, "lex, deglex, degrevlex or W:w1,...,wn");
  app.add_option("--fixture-permutation", opt.permutation,
                 "Rename c_ij by listing O and its border in another order: 't1,...|b1,...'");

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "Problem file")->required();
    return sub;
  };
  auto* border = with_file(app.add_subcommand("border", "Print the border of the order ideal"));
  border->add_option("--higher", opt.higher, "Print the i-th higher border instead");
  with_file(app.add_subcommand("web", "Print the border web"));
  auto* bb = with_file(app.add_subcommand("borderbasis", "Compute the O-border basis of the ideal"));
  bb->add_flag("--check", opt.check, "Test the 'prebasis' clause with the commuting criterion");
  with_file(app.add_subcommand("groebner", "Reduced Groebner basis of the ideal"));
  with_file(app.add_subcommand("nf", "Normal form of --poly"))->add_option("--poly", opt.poly)->required();
  with_file(app.add_subcommand("member", "Ideal membership of --poly"))->add_option("--poly", opt.poly)->required();
  with_file(app.add_subcommand("dim", "Krull dimension of the quotient ring"));
  for (const char* name : {"scheme", "mingens"}) {
    auto* sub = with_file(app.add_subcommand(name, std::string(name) == "scheme"
                                                        ? "Equations of the border basis scheme"
                                                        : "Minimal number of scheme generators"));
    sub->add_option("--method", opt.method, "comm or syzygy");
    sub->add_flag("--homogeneous", opt.homogeneous, "Use the homogeneous scheme");
    sub->add_option("--weights", opt.weights, "w1,...,wn (default: the 'weights' clause)");
  }
  auto* scheme = app.get_subcommand("scheme");
  scheme->add_flag("--minimalize", opt.minimalize, "Drop redundant neighbor blocks");
  scheme->add_flag("--cell", opt.cell, "Eliminate linear parameters");
  scheme->add_flag("--dim", opt.dim, "Krull dimension of the scheme");
  app.get_subcommand("mingens")->add_option("--grading", opt.grading, "arrow (deg b_j - deg t_i) or standard");
  auto* deform = with_file(app.add_subcommand("deform", "Flat deformation families over Q[z]"));
  deform->add_option("--stage", opt.stage, "df, hom, full or curve");
  deform->add_option("--fiber", opt.fiber, "Also print the fiber at this rational value");
  deform->add_option("--weights", opt.weights, "w1,...,wn (default: the 'weights' clause)");
  with_file(app.add_subcommand("verify-flat", "Check a 'prebasis' over Q[z] for flatness"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Command cmd(opt, out);
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "border") return cmd.border();
    if (name == "web") return cmd.web();
    if (name == "borderbasis") return cmd.borderbasis();
    if (name == "groebner") return cmd.groebner();
    if (name == "nf") return cmd.nf();
    if (name == "member") return cmd.member();
    if (name == "dim") return cmd.dim();
    if (name == "scheme") return cmd.scheme();
    if (name == "mingens") return cmd.mingens();
    if (name == "deform") return cmd.deform();
    return cmd.verify_flat();
  } catch (const Usage& e) {
    err << "bbs " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (opt.json && is_mathematical_negative(e.code())) {
      out << Json{{"error", std::string(error_name(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    }
    err << "bbs " << name << ": " << e.what() << "\n";
    return is_mathematical_negative(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "bbs " << name << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bbs::cli

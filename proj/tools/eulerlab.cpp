// eulerlab command-line front end. Each command runs one library operation on
// named objects of the corpus and prints a report as text or JSON.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "eulerlab/category.hpp"
#include "eulerlab/corpus.hpp"
#include "eulerlab/dynamics.hpp"
#include "eulerlab/euler.hpp"
#include "eulerlab/hierarchy.hpp"
#include "eulerlab/homology.hpp"

using namespace eulerlab;
using Tree = nlohmann::ordered_json;

namespace {

struct Options {
  std::vector<std::string> corpus;
  std::string format = "text";
  std::string set, family, fn, chain, out;
  std::vector<std::string> maps, germs;
  int depth = -1;
  std::size_t budget = 0;  // 0: the operation's default
  unsigned seed = 1;
  bool antisymmetry = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Report emission

std::string scalar_text(const Tree& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool has_objects(const Tree& a) {
  for (const auto& e : a)
    if (e.is_object()) return true;
  return false;
}

void emit_text(std::ostream& o, const Tree& t, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : t.items()) {
    if (v.is_object()) {
      o << pad << k << ":\n";
      emit_text(o, v, indent + 2);
    } else if (v.is_array() && has_objects(v)) {
      o << pad << k << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        o << pad << "  [" << i << "]:\n";
        emit_text(o, v[i], indent + 4);
      }
    } else if (v.is_array()) {
      o << pad << k << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << scalar_text(v[i]);
      o << "]\n";
    } else {
      o << pad << k << ": " << scalar_text(v) << "\n";
    }
  }
}

void emit(const Options& opt, const Tree& report) {
  if (opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    emit_text(std::cout, report, 0);
}

// ---------------------------------------------------------------------------
// Value formatting

std::string point_text(const QPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s + ")";
}

std::string simplex_text(const GeomComplex& k, int id) {
  std::string s;
  for (int v : k.simplex(id)) s += (s.empty() ? "" : "-") + point_text(k.vertex(v));
  return s;
}

Tree ids(const CellSet& a) {
  Tree t = Tree::array();
  for (int id : a.ids()) t.push_back(id);
  return t;
}

Tree cells(const CellSet& a) {
  Tree t = Tree::array();
  for (int id : a.ids()) t.push_back(simplex_text(*a.ambient(), id));
  return t;
}

// A set on a refinement: ambient ids when it is a union of ambient cells,
// otherwise the fine cells by their vertex coordinates.
Tree refined_set(const Refinement& r, const CellSet& a) {
  if (auto c = r.coarsen(a)) return ids(*c);
  return cells(a);
}

Tree vertices_of(const CellSet& a) {
  Tree t = Tree::array();
  for (int id : a.ids())
    if (a.ambient()->dim(id) == 0) t.push_back(a.ambient()->simplex(id)[0]);
  return t;
}

Tree ints(const std::vector<int>& v) {
  Tree t = Tree::array();
  for (int x : v) t.push_back(x);
  return t;
}

// ---------------------------------------------------------------------------
// Argument access

std::unique_ptr<Workspace> load(const Options& opt) {
  if (opt.corpus.empty()) return std::make_unique<Workspace>(standard_corpus());
  std::vector<CorpusFile> files;
  for (const auto& p : opt.corpus) files.push_back(read_corpus(p));
  return std::make_unique<Workspace>(std::move(files));
}

std::size_t budget_or(const Options& opt, std::size_t dflt) { return opt.budget ? opt.budget : dflt; }

const std::string& need(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
  return v;
}

const std::string& one_map(const Options& opt) {
  if (opt.maps.size() != 1) throw UsageError("exactly one --map is required");
  return opt.maps[0];
}

ConstructibleFn function_of(const Workspace& ws, const std::string& name) {
  const auto& f = ws.function(name);
  auto k = ws.complex_of(ws.file_of_function(name));
  auto phi = ConstructibleFn::zero(k);
  for (const auto& [id, v] : f.values) phi.set(id, v);
  return phi;
}

Tree base_report(const char* command) {
  Tree t;
  t["command"] = command;
  return t;
}

// ---------------------------------------------------------------------------
// Commands

Tree cmd_euler_check(const Workspace& ws, const Options& opt) {
  auto x = ws.set(need(opt.set, "--set"));
  auto rep = euler_report(x);
  Tree t = base_report("euler-check");
  t["set"] = opt.set;
  t["dim"] = rep.dim;
  t["euler"] = rep.euler;
  t["euler_in_codim1"] = rep.euler_in_codim1;
  t["euler_at_infinity"] = rep.euler_at_infinity;
  t["chi"] = rep.chi;
  t["chi_c"] = rep.chi_c;
  t["locus"] = ids(rep.locus);
  t["locus_vertices"] = vertices_of(rep.locus);
  t["locus_dim"] = rep.locus_dim;
  Tree links = Tree::array();
  for (int id : x.ids()) links.push_back(std::to_string(id) + ":" + std::to_string(rep.link_chi[id]));
  t["link_chi"] = links;
  return t;
}

Tree cmd_homology(const Workspace& ws, const Options& opt) {
  auto x = ws.set(need(opt.set, "--set"));
  Tree t = base_report("homology");
  t["set"] = opt.set;
  t["locally_closed"] = x.is_locally_closed();
  if (x.is_locally_closed()) t["bm_betti"] = ints(homology(bm_chain_complex(x)).betti);
  t["betti"] = ints(model_homology(x).betti);
  t["chi"] = chi(x);
  t["chi_c"] = chi_c(x);
  return t;
}

Tree cmd_fundamental_class(const Workspace& ws, const Options& opt) {
  auto x = ws.set(need(opt.set, "--set"));
  auto fc = fundamental_class(x);
  Tree t = base_report("fundamental-class");
  t["set"] = opt.set;
  t["exists"] = fc.exists;
  t["dimension"] = fc.dimension;
  if (fc.exists) {
    t["simplices"] = ints(fc.simplices);
    t["local_nonzero"] = fc.local_nonzero;
  } else {
    t["witness"] = fc.witness;
    t["witness_cell"] = fc.witness >= 0 ? simplex_text(*x.ambient(), fc.witness) : "";
  }
  return t;
}

ConstructibleFn input_function(const Workspace& ws, const Options& opt) {
  if (!opt.fn.empty()) return function_of(ws, opt.fn);
  return ConstructibleFn::indicator(ws.set(need(opt.set, "--fn or --set")));
}

Tree cmd_integrate(const Workspace& ws, const Options& opt) {
  auto phi = input_function(ws, opt);
  Tree t = base_report("integrate");
  t["input"] = opt.fn.empty() ? "1_" + opt.set : opt.fn;
  t["integral"] = integrate(phi);
  return t;
}

Tree cmd_pushforward(const Workspace& ws, const Options& opt) {
  auto f = map_from_corpus(ws, one_map(opt));
  auto sf = simplicial_form(f, budget_or(opt, 200000));
  ConstructibleFn phi = opt.fn.empty() && opt.set.empty() ? ConstructibleFn::indicator(f.domain) : input_function(ws, opt);
  if (phi.domain.ambient() != f.source_complex()) throw ContractError("pushforward: function lives on another complex");
  auto fine = ConstructibleFn::zero(sf.source.fine);
  for (int s : sf.domain.ids()) fine.set(s, phi.at(sf.source.carrier[s]));
  auto push = pushforward(fine, sf.data());
  Tree t = base_report("pushforward");
  t["map"] = opt.maps[0];
  t["input"] = !opt.fn.empty() ? opt.fn : "1_" + (opt.set.empty() ? ws.map(opt.maps[0]).domain : opt.set);
  // Values on target cells, by ambient id when constant on every carrier.
  const auto& r = sf.target;
  std::vector<std::optional<long>> coarse(r.coarse->size());
  std::vector<bool> mixed(r.coarse->size(), false);
  for (std::size_t s = 0; s < r.fine->size(); ++s) {
    int c = r.carrier[s];
    long v = push.at(static_cast<int>(s));
    if (coarse[c] && *coarse[c] != v) mixed[c] = true;
    coarse[c] = v;
  }
  bool is_coarse = std::none_of(mixed.begin(), mixed.end(), [](bool b) { return b; });
  Tree vals = Tree::array();
  if (is_coarse) {
    for (std::size_t c = 0; c < coarse.size(); ++c)
      if (coarse[c] && *coarse[c] != 0) vals.push_back(std::to_string(c) + ":" + std::to_string(*coarse[c]));
  } else {
    for (std::size_t s = 0; s < r.fine->size(); ++s)
      if (push.at(static_cast<int>(s)) != 0)
        vals.push_back(simplex_text(*r.fine, static_cast<int>(s)) + ":" + std::to_string(push.at(static_cast<int>(s))));
  }
  t["on_ambient_cells"] = is_coarse;
  t["values"] = vals;
  t["integral_before"] = integrate(fine);
  t["integral_after"] = integrate(push);
  return t;
}

Family family_arg(const Workspace& ws, const Options& opt) {
  if (!opt.family.empty()) return ws.family_model(opt.family);
  return Family::all_cellsets(ws.set(need(opt.set, "--family or --set")));
}

Tree cmd_closure(const Workspace& ws, const Options& opt) {
  auto a = ws.set(need(opt.set, "--set"));
  auto fam = ws.family_model(need(opt.family, "--family"));
  if (fam.ambient() != a.ambient()) throw ContractError("closure: set and family live on different complexes");
  auto g = closure_gap_report(a, fam);
  Tree t = base_report("closure");
  t["set"] = opt.set;
  t["family"] = opt.family;
  t["topological"] = ids(g.topological);
  t["c_closure"] = ids(g.c_closure);
  t["flag_closure"] = ids(g.flag_closure);
  t["c_closure_strictly_contains_topological"] = g.first_strict;
  t["c_closure_strictly_inside_flag"] = g.second_strict && g.c_closure.subset_of(g.flag_closure);
  return t;
}

Tree cmd_axioms(const Workspace& ws, const Options& opt) {
  auto fam = family_arg(ws, opt);
  std::vector<MapTransport> maps;
  for (const auto& m : opt.maps) maps.push_back(transport_of(map_from_corpus(ws, m), budget_or(opt, 200000)));
  auto r = check_axioms(fam, maps);
  Tree t = base_report("axioms");
  t["family"] = opt.family.empty() ? "all cell sets of " + opt.set : opt.family;
  t["atoms"] = fam.atoms().size();
  t["all_pass"] = r.all_pass;
  Tree vs = Tree::array();
  for (const auto& v : r.verdicts) {
    Tree e;
    e["axiom"] = v.axiom;
    e["pass"] = v.pass;
    e["detail"] = v.detail;
    if (v.witness) e["witness"] = ids(*v.witness);
    if (v.witness_extra) e["witness_extra"] = ids(*v.witness_extra);
    vs.push_back(e);
  }
  t["verdicts"] = vs;
  t["scope"] = r.scope;
  return t;
}

Tree cmd_verify_map(const Workspace& ws, const Options& opt) {
  auto f = map_from_corpus(ws, one_map(opt));
  int k = opt.depth < 0 ? 1 : opt.depth;
  PLMap g = k == 1 ? f : iterate(f, k, budget_or(opt, 200000));
  auto sf = simplicial_form(g, budget_or(opt, 200000));
  auto v = verify_injective(sf);
  Tree t = base_report("verify-map");
  t["map"] = opt.maps[0];
  t["iterate"] = k;
  t["injective"] = v.injective;
  if (!v.injective) {
    t["reason"] = v.reason;
    if (v.witness_a) t["witness_a"] = point_text(*v.witness_a);
    if (v.witness_b) t["witness_b"] = point_text(*v.witness_b);
  }
  CellSet img = sf.image(sf.domain);
  t["image"] = refined_set(sf.target, img);
  t["surjective"] = img == sf.target.transport(g.target);
  // Sampled cross-check of the verdict with --seed.
  std::mt19937 gen(opt.seed);
  auto dom = sf.domain.ids();
  std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
  std::uniform_int_distribution<long> w(1, 97);
  auto sample = [&] {
    const auto& k2 = *sf.source.fine;
    const auto& verts = k2.simplex(dom[pick(gen)]);
    std::vector<long> ws2;
    long total = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) total += ws2.emplace_back(w(gen));
    QPoint p(k2.ambient_dim());
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t c = 0; c < p.dim(); ++c) p.coords[c] += k2.vertex(verts[i]).coords[c] * make_rational(ws2[i], total);
    return p;
  };
  int collisions = 0;
  const int pairs = 100;
  for (int i = 0; i < pairs; ++i) {
    auto p = sample(), q = sample();
    if (!(p == q) && g(p) == g(q)) ++collisions;
  }
  t["sampled_pairs"] = pairs;
  t["sampled_collisions"] = collisions;
  return t;
}

Tree borel_tree(const BorelReport& r) {
  Tree t;
  t["d"] = r.d;
  t["increasing"] = r.increasing;
  if (r.first_codim1_failure) t["first_codim1_failure"] = *r.first_codim1_failure;
  Tree steps = Tree::array();
  for (const auto& s : r.steps) {
    Tree e;
    e["k"] = s.k;
    e["y"] = ids(s.y);
    e["closed_in_x"] = s.closed_in_x;
    e["locally_closed"] = s.locally_closed;
    e["bm_rank"] = s.bm_rank;
    e["euler_codim1"] = s.euler_codim1;
    e["independence_rank"] = s.independence_rank;
    steps.push_back(e);
  }
  t["steps"] = steps;
  return t;
}

Tree cmd_borel(const Workspace& ws, const Options& opt) {
  Tree t = base_report("borel");
  if (!opt.chain.empty()) {
    const auto& ch = ws.chain(opt.chain);
    std::vector<CellSet> ys;
    for (const auto& s : ch.sets) ys.push_back(ws.set(s));
    t["chain"] = opt.chain;
    t.update(borel_tree(borel_chain_analysis(ws.set(ch.space), ys)));
    return t;
  }
  auto f = map_from_corpus(ws, one_map(opt));
  int k = opt.depth < 0 ? 3 : opt.depth;
  auto r = borel_analysis(f, k, budget_or(opt, 200000));
  t["map"] = opt.maps[0];
  t["iterations"] = k;
  Tree body = borel_tree(r);
  // Y_k live on a common refinement; print their cells by coordinates.
  for (std::size_t i = 0; i < r.steps.size(); ++i) body["steps"][i]["y"] = cells(r.steps[i].y);
  t.update(body);
  return t;
}

Tree cmd_theorem_lab(const Workspace& ws, const Options& opt) {
  auto f = map_from_corpus(ws, one_map(opt));
  if (!opt.set.empty() && ws.set(opt.set) != f.domain)
    throw ContractError("theorem-lab: --set " + opt.set + " is not the domain of " + opt.maps[0]);
  std::optional<Family> fam;
  if (!opt.family.empty()) fam = ws.family_model(opt.family);
  auto lab = theorem_lab(f, fam ? &*fam : nullptr, budget_or(opt, 200000));
  Tree t = base_report("theorem-lab");
  t["map"] = opt.maps[0];
  t["injective"] = lab.injective;
  t["surjective"] = lab.surjective;
  t["euler"] = lab.euler;
  t["pure"] = lab.pure;
  t["open_onto_image"] = lab.open_onto_image;
  t["homeomorphism"] = lab.homeomorphism;
  t["S"] = ids(lab.sing.s);
  t["A"] = ids(lab.sing.a);
  t["sigma"] = ids(lab.sing.sigma);
  t["proxy"] = lab.sing.proxy;
  t["s_invariant"] = lab.s_invariant;
  if (lab.cc_sigma) t["cc_sigma"] = ids(*lab.cc_sigma);
  if (lab.cc_sigma_invariant) t["cc_sigma_invariant"] = *lab.cc_sigma_invariant;
  if (lab.hypothesis_failure) t["hypothesis_failure"] = *lab.hypothesis_failure;
  t["alarm"] = lab.alarm;
  Tree notes = Tree::array();
  for (const auto& n : lab.notes) notes.push_back(n);
  t["notes"] = notes;
  return t;
}

Tree verdict_tree(const PrecedenceVerdict& v, const Germ& gy, const Germ& gx) {
  Tree t;
  t["verdict"] = v.kind_name();
  t["depth"] = v.depth;
  if (v.kind == PrecedenceVerdict::Kind::Obstructed) t["obstruction"] = v.obstruction;
  t["explored"] = v.explored;
  t["budget_hit"] = v.budget_hit;
  if (v.found()) {
    auto tgt = germ_cone(gx, 0);
    Tree m = Tree::array();
    for (std::size_t i = 0; i < v.vertex_map.size(); ++i)
      m.push_back(point_text(v.domain.complex->vertex(static_cast<int>(i))) + " -> " +
                  point_text(tgt.complex->vertex(v.vertex_map[i])));
    t["vertex_map"] = m;
    auto why = verify_embedding(v, gy, gx);
    t["reverified"] = why.empty();
  }
  return t;
}

Tree cmd_precedes(const Workspace& ws, const Options& opt) {
  if (opt.germs.size() != 2) throw UsageError("precedes takes --germ Y --germ X");
  auto gy = ws.germ(opt.germs[0]), gx = ws.germ(opt.germs[1]);
  int depth = opt.depth < 0 ? 1 : opt.depth;
  Tree t = base_report("precedes");
  t["y"] = opt.germs[0];
  t["x"] = opt.germs[1];
  t["type_y"] = local_type(gy).str();
  t["type_x"] = local_type(gx).str();
  if (!opt.antisymmetry) {
    t.update(verdict_tree(precedes(gy, gx, depth, budget_or(opt, 1000000)), gy, gx));
    return t;
  }
  auto r = check_antisymmetry(gy, gx, depth, budget_or(opt, 1000000));
  t["forward"] = verdict_tree(r.forward, gy, gx);
  t["backward"] = verdict_tree(r.backward, gx, gy);
  t["both_found"] = r.both_found;
  if (r.invariants_equal) t["invariants_equal"] = *r.invariants_equal;
  if (r.composite_local_homeomorphism) t["composite_local_homeomorphism"] = *r.composite_local_homeomorphism;
  t["alarm"] = r.alarm;
  Tree notes = Tree::array();
  for (const auto& n : r.notes) notes.push_back(n);
  t["notes"] = notes;
  return t;
}

Tree cmd_stratify(const Workspace& ws, const Options& opt) {
  auto x = ws.set(need(opt.set, "--set"));
  auto st = stratify(x);
  Tree t = base_report("stratify");
  t["set"] = opt.set;
  t["strata_count"] = st.strata.size();
  t["all_homology_manifolds"] = st.all_homology_manifolds;
  Tree strata = Tree::array();
  for (const auto& s : st.strata) {
    Tree e;
    e["type"] = s.type.str();
    e["cells"] = ids(s.cells);
    e["dimension"] = s.dimension;
    e["pure"] = s.pure;
    e["homology_manifold"] = s.homology_manifold;
    strata.push_back(e);
  }
  t["strata"] = strata;
  t["type_proxy"] = "local type invariants stand in for the homeomorphism type";
  if (opt.maps.empty()) return t;
  auto f = map_from_corpus(ws, one_map(opt));
  auto c = check_strata_preserved(st, f, budget_or(opt, 200000));
  t["map"] = opt.maps[0];
  t["strata_into"] = c.into;
  t["strata_onto"] = c.onto;
  auto fam = opt.family.empty() ? Family::all_cellsets(x) : ws.family_model(opt.family);
  auto fr = build_filtration(x, f, fam, budget_or(opt, 200000));
  Tree levels = Tree::array();
  for (const auto& l : fr.levels) {
    Tree e;
    e["index"] = l.index;
    e["set"] = ids(l.set);
    e["closed"] = l.closed;
    e["member"] = l.member;
    e["f_stable"] = l.f_stable;
    e["difference_is_manifold"] = l.difference_is_manifold;
    levels.push_back(e);
  }
  Tree fil;
  fil["family"] = opt.family.empty() ? "all cell sets of " + opt.set : opt.family;
  fil["certified"] = fr.certified;
  fil["proxy"] = fr.proxy;
  if (!fr.failure.empty()) fil["failure"] = fr.failure;
  if (fr.offending) fil["offending"] = ids(*fr.offending);
  fil["levels"] = levels;
  t["filtration"] = fil;
  return t;
}

Tree cmd_search(const Workspace& ws, const Options& opt) {
  auto x = ws.set(need(opt.set, "--set"));
  int depth = opt.depth < 0 ? 1 : opt.depth;
  auto r = search_selfmaps(x, depth, budget_or(opt, 2000000));
  Tree t = base_report("search");
  t["set"] = opt.set;
  t["depth"] = depth;
  t["explored"] = r.explored;
  t["maps"] = r.maps;
  t["injective"] = r.injective;
  t["surjective"] = r.surjective;
  t["homeomorphisms"] = r.homeomorphisms;
  t["injective_non_surjective"] = r.injective - r.surjective;
  t["exhausted"] = r.exhausted;
  return t;
}

Tree cmd_corpus_build(const Options& opt) {
  namespace fs = std::filesystem;
  fs::path dir = opt.out.empty() ? fs::path("corpus") : fs::path(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  Tree t = base_report("corpus-build");
  t["directory"] = dir.string();
  Tree files = Tree::array();
  for (const auto& c : standard_corpus()) {
    auto path = dir / (c.name + ".corpus");
    std::ofstream o(path, std::ios::binary);
    o << print_corpus(c);
    if (!o) throw std::runtime_error("cannot write " + path.string());
    Tree e;
    e["file"] = path.filename().string();
    e["vertices"] = c.vertices.size();
    e["simplices"] = c.simplices.size();
    e["sets"] = c.sets.size();
    e["maps"] = c.maps.size();
    files.push_back(e);
  }
  t["files"] = files;
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler sets, constructible categories and injective self-maps"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* c) {
    c->add_option("--corpus", opt.corpus, "corpus file (repeatable); default: the built-in standard corpus");
    c->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--budget", opt.budget, "refinement / search budget (0: the command default)");
    c->add_option("--seed", opt.seed, "random seed");
    return c;
  };
  struct Command {
    const char* name;
    const char* help;
    std::function<Tree(const Workspace&)> run;
  };
  std::vector<Command> commands = {
      {"euler-check", "Euler condition and non-Euler locus of a set", [&](auto& ws) { return cmd_euler_check(ws, opt); }},
      {"homology", "Borel-Moore and homotopy-model homology of a set", [&](auto& ws) { return cmd_homology(ws, opt); }},
      {"fundamental-class", "Z2 fundamental class or its failure witness",
       [&](auto& ws) { return cmd_fundamental_class(ws, opt); }},
      {"integrate", "Euler integral of a constructible function", [&](auto& ws) { return cmd_integrate(ws, opt); }},
      {"pushforward", "pushforward of a constructible function along a map",
       [&](auto& ws) { return cmd_pushforward(ws, opt); }},
      {"closure", "topological, C- and flag closure of a set", [&](auto& ws) { return cmd_closure(ws, opt); }},
      {"axioms", "check the category axioms for a family", [&](auto& ws) { return cmd_axioms(ws, opt); }},
      {"verify-map", "injectivity, image and surjectivity of a map or its iterate",
       [&](auto& ws) { return cmd_verify_map(ws, opt); }},
      {"borel", "the sets Y_k = X - f^k(X) or a supplied chain", [&](auto& ws) { return cmd_borel(ws, opt); }},
      {"theorem-lab", "hypotheses and conclusions of the surjectivity theorem for a map",
       [&](auto& ws) { return cmd_theorem_lab(ws, opt); }},
      {"precedes", "bounded search for a germ embedding", [&](auto& ws) { return cmd_precedes(ws, opt); }},
      {"stratify", "strata by local type, strata preservation and filtration",
       [&](auto& ws) { return cmd_stratify(ws, opt); }},
      {"search", "enumerate PL self-maps of a set", [&](auto& ws) { return cmd_search(ws, opt); }},
  };
  for (auto& c : commands) {
    auto* sub = common(app.add_subcommand(c.name, c.help));
    sub->add_option("--set", opt.set, "set name");
    sub->add_option("--map", opt.maps, "map name");
    sub->add_option("--family", opt.family, "family name");
    sub->add_option("--fn", opt.fn, "constructible function name");
    sub->add_option("--chain", opt.chain, "chain name");
    sub->add_option("--germ", opt.germs, "germ name (precedes: Y then X)");
    sub->add_option("--depth", opt.depth, "iterations, subdivision depth or search depth");
    sub->add_flag("--antisymmetry", opt.antisymmetry, "precedes: check both directions");
  }
  auto* build = common(app.add_subcommand("corpus-build", "write the standard corpus files"));
  build->add_option("--out", opt.out, "output directory (default: corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Tree report;
    if (build->parsed()) {
      report = cmd_corpus_build(opt);
    } else {
      auto ws = load(opt);
      for (auto& c : commands)
        if (app.got_subcommand(c.name)) report = c.run(*ws);
    }
    emit(opt, report);
    return 0;
  } catch (const ContractError& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "eulerlab/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace eulerlab {

namespace {

constexpr int kFormatVersion = 1;

std::string point_text(const QPoint& p) {
  std::string s;
  for (const auto& c : p.coords) s += " " + to_string(c);
  return s;
}

bool valid_name(const std::string& n) {
  if (n.empty()) return false;
  for (char c : n)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
  return true;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

struct LineReader {
  int lineno = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  }
  long integer(const std::string& t) const {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(t, &pos);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + t + "'");
    }
    if (pos != t.size()) fail("expected an integer, got '" + t + "'");
    return v;
  }
  Rational rational(const std::string& t) const {
    try {
      return parse_rational(t);
    } catch (const std::invalid_argument&) {
      fail("malformed rational '" + t + "'");
    }
  }
  std::string name(const std::string& t) const {
    if (!valid_name(t)) fail("invalid name '" + t + "'");
    return t;
  }
};

}  // namespace

std::string print_corpus(const CorpusFile& c) {
  std::ostringstream o;
  o << "eulerlab-corpus " << kFormatVersion << "\n";
  o << "name " << c.name << "\n";
  o << "ambient " << c.ambient_dim << "\n";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) o << "vertex " << i << point_text(c.vertices[i]) << "\n";
  for (std::size_t i = 0; i < c.simplices.size(); ++i) {
    o << "simplex " << i;
    for (int v : c.simplices[i]) o << " " << v;
    o << "\n";
  }
  for (const auto& s : c.sets) {
    o << "set " << s.name;
    for (int m : s.members) o << " " << m;
    o << "\n";
  }
  for (const auto& f : c.functions) {
    o << "fn " << f.name;
    for (const auto& [id, v] : f.values) o << " " << id << ":" << v;
    o << "\n";
  }
  for (const auto& f : c.families) {
    o << "family " << f.name;
    for (const auto& g : f.generators) o << " " << g.set << ":" << (g.algebraic ? "algebraic" : "free");
    o << "\n";
  }
  for (const auto& m : c.maps) {
    o << "map " << m.name << " " << m.domain << " " << m.target << " " << m.depth << "\n";
    for (std::size_t i = 0; i < m.images.size(); ++i) o << "image " << i << point_text(m.images[i]) << "\n";
  }
  for (const auto& ch : c.chains) {
    o << "chain " << ch.name << " " << ch.space;
    for (const auto& s : ch.sets) o << " " << s;
    o << "\n";
  }
  for (const auto& g : c.germs) o << "germ " << g.name << " " << g.set << " " << g.base << "\n";
  o << "end\n";
  return o.str();
}

CorpusFile parse_corpus(const std::string& text) {
  CorpusFile c;
  LineReader r;
  std::istringstream in(text);
  std::string line;
  bool header = false, ended = false, have_name = false, have_ambient = false;
  CorpusFile::NamedMap* open_map = nullptr;
  while (std::getline(in, line)) {
    ++r.lineno;
    auto t = split(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (ended) r.fail("content after 'end'");
    const std::string& kw = t[0];
    if (!header) {
      if (kw != "eulerlab-corpus" || t.size() != 2) r.fail("expected 'eulerlab-corpus <version>'");
      if (r.integer(t[1]) != kFormatVersion) r.fail("unsupported format version " + t[1]);
      header = true;
      continue;
    }
    if (kw != "image") open_map = nullptr;
    if (kw == "name") {
      if (t.size() != 2) r.fail("expected 'name <name>'");
      c.name = r.name(t[1]);
      have_name = true;
    } else if (kw == "ambient") {
      if (t.size() != 2) r.fail("expected 'ambient <dimension>'");
      long d = r.integer(t[1]);
      if (d < 1) r.fail("ambient dimension must be positive");
      c.ambient_dim = static_cast<std::size_t>(d);
      have_ambient = true;
    } else if (kw == "vertex") {
      if (!have_ambient) r.fail("vertex before 'ambient'");
      if (t.size() != 2 + c.ambient_dim) r.fail("vertex needs an id and " + std::to_string(c.ambient_dim) + " coordinates");
      if (r.integer(t[1]) != static_cast<long>(c.vertices.size())) r.fail("vertex ids must be consecutive from 0");
      QPoint p(c.ambient_dim);
      for (std::size_t k = 0; k < c.ambient_dim; ++k) p[k] = r.rational(t[2 + k]);
      c.vertices.push_back(std::move(p));
    } else if (kw == "simplex") {
      if (t.size() < 3) r.fail("simplex needs an id and at least one vertex");
      if (r.integer(t[1]) != static_cast<long>(c.simplices.size())) r.fail("simplex ids must be consecutive from 0");
      std::vector<int> s;
      for (std::size_t k = 2; k < t.size(); ++k) s.push_back(static_cast<int>(r.integer(t[k])));
      c.simplices.push_back(std::move(s));
    } else if (kw == "set") {
      if (t.size() < 2) r.fail("expected 'set <name> <ids...>'");
      CorpusFile::NamedSet s{r.name(t[1]), {}};
      for (std::size_t k = 2; k < t.size(); ++k) s.members.push_back(static_cast<int>(r.integer(t[k])));
      c.sets.push_back(std::move(s));
    } else if (kw == "fn") {
      if (t.size() < 2) r.fail("expected 'fn <name> <id:value...>'");
      CorpusFile::NamedFn f{r.name(t[1]), {}};
      for (std::size_t k = 2; k < t.size(); ++k) {
        auto colon = t[k].find(':');
        if (colon == std::string::npos) r.fail("expected id:value, got '" + t[k] + "'");
        f.values.emplace_back(static_cast<int>(r.integer(t[k].substr(0, colon))), r.integer(t[k].substr(colon + 1)));
      }
      c.functions.push_back(std::move(f));
    } else if (kw == "family") {
      if (t.size() < 2) r.fail("expected 'family <name> <set:flag...>'");
      CorpusFile::NamedFamily f{r.name(t[1]), {}};
      for (std::size_t k = 2; k < t.size(); ++k) {
        auto colon = t[k].find(':');
        if (colon == std::string::npos) r.fail("expected set:algebraic or set:free, got '" + t[k] + "'");
        std::string flag = t[k].substr(colon + 1);
        if (flag != "algebraic" && flag != "free") r.fail("unknown generator flag '" + flag + "'");
        f.generators.push_back({r.name(t[k].substr(0, colon)), flag == "algebraic"});
      }
      c.families.push_back(std::move(f));
    } else if (kw == "map") {
      if (t.size() != 5) r.fail("expected 'map <name> <domain> <target> <depth>'");
      CorpusFile::NamedMap m{r.name(t[1]), r.name(t[2]), r.name(t[3]), static_cast<int>(r.integer(t[4])), {}};
      if (m.depth < 0) r.fail("negative refinement depth");
      c.maps.push_back(std::move(m));
      open_map = &c.maps.back();
    } else if (kw == "image") {
      if (!open_map) r.fail("image outside a map block");
      if (t.size() != 2 + c.ambient_dim) r.fail("image needs an id and " + std::to_string(c.ambient_dim) + " coordinates");
      if (r.integer(t[1]) != static_cast<long>(open_map->images.size())) r.fail("image ids must be consecutive from 0");
      QPoint p(c.ambient_dim);
      for (std::size_t k = 0; k < c.ambient_dim; ++k) p[k] = r.rational(t[2 + k]);
      open_map->images.push_back(std::move(p));
    } else if (kw == "chain") {
      if (t.size() < 3) r.fail("expected 'chain <name> <space> <sets...>'");
      CorpusFile::NamedChain ch{r.name(t[1]), r.name(t[2]), {}};
      for (std::size_t k = 3; k < t.size(); ++k) ch.sets.push_back(r.name(t[k]));
      c.chains.push_back(std::move(ch));
    } else if (kw == "germ") {
      if (t.size() != 4) r.fail("expected 'germ <name> <set> <base vertex>'");
      c.germs.push_back({r.name(t[1]), r.name(t[2]), static_cast<int>(r.integer(t[3]))});
    } else if (kw == "end") {
      ended = true;
    } else {
      r.fail("unknown keyword '" + kw + "'");
    }
  }
  if (!header) throw ParseError("empty corpus file");
  if (!ended) throw ParseError("missing 'end'");
  if (!have_name || !have_ambient) throw ParseError("missing 'name' or 'ambient'");
  return c;
}

CorpusFile read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  try {
    return parse_corpus(s.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

CorpusFile corpus_of(std::string name, const GeomComplex& k) {
  CorpusFile c;
  c.name = std::move(name);
  c.ambient_dim = k.ambient_dim();
  c.vertices = k.vertices();
  for (std::size_t i = 0; i < k.size(); ++i) c.simplices.push_back(k.simplex(static_cast<int>(i)));
  return c;
}

Workspace::Workspace(std::vector<CorpusFile> files) : files_(std::move(files)) {
  auto add = [](auto& index, const std::string& kind, const std::string& name, std::size_t f, std::size_t i) {
    if (!index.emplace(name, std::make_pair(f, i)).second) throw ParseError("duplicate " + kind + " name '" + name + "'");
  };
  for (std::size_t f = 0; f < files_.size(); ++f) {
    const auto& c = files_[f];
    const std::string where = "corpus '" + c.name + "': ";
    ComplexPtr k;
    try {
      k = GeomComplex::create(c.vertices, c.simplices, false);
    } catch (const ContractError& e) {
      throw ParseError(where + e.what());
    }
    for (std::size_t i = 0; i < c.simplices.size(); ++i)
      if (k->simplex(static_cast<int>(i)) != c.simplices[i])
        throw ParseError(where + "simplices are not in canonical order (dimension, then lexicographic)");
    complexes_.push_back(k);
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
      for (int m : c.sets[i].members)
        if (m < 0 || m >= static_cast<int>(k->size()))
          throw ParseError(where + "set '" + c.sets[i].name + "' has unknown simplex " + std::to_string(m));
      add(sets_, "set", c.sets[i].name, f, i);
    }
    auto need_set = [&](const std::string& s, const std::string& who) {
      auto it = sets_.find(s);
      if (it == sets_.end() || it->second.first != f)
        throw ParseError(where + who + " refers to unknown set '" + s + "'");
    };
    for (std::size_t i = 0; i < c.functions.size(); ++i) {
      for (const auto& [id, v] : c.functions[i].values)
        if (id < 0 || id >= static_cast<int>(k->size()))
          throw ParseError(where + "function '" + c.functions[i].name + "' has unknown simplex " + std::to_string(id));
      add(fns_, "function", c.functions[i].name, f, i);
    }
    for (std::size_t i = 0; i < c.families.size(); ++i) {
      for (const auto& g : c.families[i].generators) need_set(g.set, "family '" + c.families[i].name + "'");
      add(families_, "family", c.families[i].name, f, i);
    }
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
      const auto& m = c.maps[i];
      need_set(m.domain, "map '" + m.name + "'");
      need_set(m.target, "map '" + m.name + "'");
      std::size_t want = iterated_subdivision(k, m.depth).fine->num_vertices();
      if (m.images.size() != want)
        throw ParseError(where + "map '" + m.name + "' lists " + std::to_string(m.images.size()) +
                         " images; its refinement has " + std::to_string(want) + " vertices");
      add(maps_, "map", m.name, f, i);
    }
    for (std::size_t i = 0; i < c.chains.size(); ++i) {
      need_set(c.chains[i].space, "chain '" + c.chains[i].name + "'");
      for (const auto& s : c.chains[i].sets) need_set(s, "chain '" + c.chains[i].name + "'");
      add(chains_, "chain", c.chains[i].name, f, i);
    }
    for (std::size_t i = 0; i < c.germs.size(); ++i) {
      const auto& g = c.germs[i];
      need_set(g.set, "germ '" + g.name + "'");
      if (g.base < 0 || g.base >= static_cast<int>(k->num_vertices()))
        throw ParseError(where + "germ '" + g.name + "' has unknown base vertex");
      add(germs_, "germ", g.name, f, i);
    }
  }
  for (const auto& [name, at] : germs_) {
    Germ g = germ(name);
    if (!g.set.contains(g.ambient()->vertex_simplex(g.base)))
      throw ParseError("germ '" + name + "': base vertex is not in the set");
  }
}

namespace {

template <class M>
const std::pair<std::size_t, std::size_t>& lookup(const M& m, const std::string& kind, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw ParseError("unknown " + kind + " '" + name + "'");
  return it->second;
}

template <class M>
std::vector<std::string> names(const M& m) {
  std::vector<std::string> out;
  for (const auto& [n, at] : m) out.push_back(n);
  return out;
}

}  // namespace

CellSet Workspace::set(const std::string& name) const {
  auto [f, i] = lookup(sets_, "set", name);
  return CellSet::from_ids(complexes_[f], files_[f].sets[i].members);
}

std::size_t Workspace::file_of_set(const std::string& name) const { return lookup(sets_, "set", name).first; }

const CorpusFile::NamedMap& Workspace::map(const std::string& name) const {
  auto [f, i] = lookup(maps_, "map", name);
  return files_[f].maps[i];
}

std::size_t Workspace::file_of_map(const std::string& name) const { return lookup(maps_, "map", name).first; }

const CorpusFile::NamedFamily& Workspace::family(const std::string& name) const {
  auto [f, i] = lookup(families_, "family", name);
  return files_[f].families[i];
}

std::size_t Workspace::file_of_family(const std::string& name) const {
  return lookup(families_, "family", name).first;
}

Family Workspace::family_model(const std::string& name) const {
  std::vector<FamilyGenerator> g;
  for (const auto& [s, algebraic] : family(name).generators) g.push_back({s, set(s), algebraic});
  return Family(std::move(g));
}

const CorpusFile::NamedChain& Workspace::chain(const std::string& name) const {
  auto [f, i] = lookup(chains_, "chain", name);
  return files_[f].chains[i];
}

const CorpusFile::NamedFn& Workspace::function(const std::string& name) const {
  auto [f, i] = lookup(fns_, "function", name);
  return files_[f].functions[i];
}

std::size_t Workspace::file_of_function(const std::string& name) const { return lookup(fns_, "function", name).first; }

Germ Workspace::germ(const std::string& name) const {
  auto [f, i] = lookup(germs_, "germ", name);
  const auto& g = files_[f].germs[i];
  return Germ{g.name, g.base, set(g.set)};
}

std::vector<std::string> Workspace::set_names() const { return names(sets_); }
std::vector<std::string> Workspace::map_names() const { return names(maps_); }
std::vector<std::string> Workspace::germ_names() const { return names(germs_); }

// ---------------------------------------------------------------------------
// Standard corpus

namespace {

QPoint pt(std::initializer_list<long> c) {
  QPoint p;
  for (long x : c) p.coords.emplace_back(x);
  return p;
}

QPoint ptq(std::initializer_list<std::pair<long, long>> c) {
  QPoint p;
  for (auto [n, d] : c) p.coords.push_back(make_rational(n, d));
  return p;
}

struct Builder {
  ComplexPtr k;
  CorpusFile c;

  Builder(std::string name, std::vector<QPoint> verts, std::vector<std::vector<int>> maximal) {
    k = GeomComplex::create(std::move(verts), std::move(maximal), true);
    c = corpus_of(std::move(name), *k);
  }
  int id(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    return k->find(verts).value();
  }
  void set(std::string name, const CellSet& s) { c.sets.push_back({std::move(name), s.ids()}); }
  CellSet ids(std::vector<std::vector<int>> simplices) const {
    std::vector<int> out;
    for (auto& s : simplices) out.push_back(id(s));
    return CellSet::from_ids(k, out);
  }
  void map(std::string name, std::string domain, std::string target, std::vector<QPoint> images) {
    c.maps.push_back({std::move(name), std::move(domain), std::move(target), 0, std::move(images)});
  }
  void ones(std::string name, const CellSet& s) {
    CorpusFile::NamedFn f{std::move(name), {}};
    for (int id : s.ids()) f.values.emplace_back(id, 1);
    c.functions.push_back(std::move(f));
  }
};

CorpusFile circle() {
  // p = 0, q = 1, r = 2
  Builder b("circle", {pt({0, 0}), pt({1, 0}), pt({0, 1})}, {{0, 1}, {1, 2}, {0, 2}});
  auto all = CellSet::full(b.k);
  b.set("circle", all);
  b.set("circle_p", b.ids({{0}}));
  b.set("circle_open_pq", b.ids({{0, 1}}));
  b.set("circle_minus_p", all - b.ids({{0}}));
  b.ones("circle_ones", all);
  b.c.families.push_back({"circle_points", {{"circle", true}, {"circle_p", true}}});
  b.c.families.push_back({"circle_full", {{"circle", true}}});
  b.map("rotation", "circle", "circle", {pt({1, 0}), pt({0, 1}), pt({0, 0})});
  b.map("collapse", "circle", "circle_p", {pt({0, 0}), pt({0, 0}), pt({0, 0})});
  b.c.germs.push_back({"circle_vertex", "circle", 0});
  return b.c;
}

CorpusFile sphere() {
  Builder b("sphere", {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})},
            {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  b.set("sphere", CellSet::full(b.k));
  b.ones("sphere_ones", CellSet::full(b.k));
  // Cyclic permutation of the three vertices other than the origin.
  b.map("sphere_rotation", "sphere", "sphere", {pt({0, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 0, 0})});
  b.c.germs.push_back({"sphere_vertex", "sphere", 0});
  return b.c;
}

CorpusFile segment() {
  Builder b("segment", {pt({0}), pt({1})}, {{0, 1}});
  b.set("segment", CellSet::full(b.k));
  b.set("half_open", b.ids({{0}, {0, 1}}));
  b.set("segment_ends", b.ids({{0}, {1}}));
  b.set("open_segment", b.ids({{0, 1}}));
  b.ones("segment_ones", CellSet::full(b.k));
  b.map("shift", "half_open", "half_open", {ptq({{1, 2}}), pt({1})});
  b.map("segment_shrink", "segment", "segment", {ptq({{1, 4}}), ptq({{3, 4}})});
  b.c.germs.push_back({"segment_end", "segment", 0});
  b.c.germs.push_back({"half_open_end", "half_open", 0});
  return b.c;
}

CorpusFile line() {
  // -1 = 0, 0 = 1, 1 = 2
  Builder b("line", {pt({-1}), pt({0}), pt({1})}, {{0, 1}, {1, 2}});
  b.set("line", b.ids({{1}, {0, 1}, {1, 2}}));
  b.set("line_closed", CellSet::full(b.k));
  b.c.functions.push_back({"line_weights", {{0, 2}, {1, -1}, {3, 3}, {4, 1}}});
  b.map("fold", "line_closed", "line_closed", {pt({1}), pt({0}), pt({1})});
  b.c.germs.push_back({"line_origin", "line", 1});
  return b.c;
}

CorpusFile tripod() {
  // center c = 0, legs a = 1, b = 2, d = 3
  Builder b("tripod", {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({-1, -1})}, {{0, 1}, {0, 2}, {0, 3}});
  b.set("tripod", CellSet::full(b.k));
  b.set("tripod_center", b.ids({{0}}));
  b.set("tripod_ends", b.ids({{1}, {2}, {3}}));
  b.ones("tripod_ones", CellSet::full(b.k));
  b.map("shrink", "tripod", "tripod", {pt({0, 0}), ptq({{1, 2}, {0, 1}}), ptq({{0, 1}, {1, 2}}), ptq({{-1, 2}, {-1, 2}})});
  b.c.germs.push_back({"tripod_center", "tripod", 0});
  b.c.germs.push_back({"tripod_end", "tripod", 1});
  return b.c;
}

// Open cone from the origin over a link made of a figure-eight (whose double
// point D lies on the positive z-axis) and one point H on the negative z-axis.
// The segment OD is the double line, OH the handle.
CorpusFile whitney() {
  enum { O, D, A1, B1, C1, A2, B2, C2, H };
  std::vector<QPoint> v{pt({0, 0, 0}),  pt({0, 0, 1}),  pt({1, 1, 1}),   pt({0, 1, 0}), pt({-1, 1, 1}),
                        pt({1, -1, 1}), pt({0, -1, 0}), pt({-1, -1, 1}), pt({0, 0, -1})};
  std::vector<std::vector<int>> link{{D, A1}, {A1, B1}, {B1, C1}, {C1, D}, {D, A2}, {A2, B2}, {B2, C2}, {C2, D}};
  std::vector<std::vector<int>> top;
  for (auto e : link) top.push_back({O, e[0], e[1]});
  top.push_back({O, H});
  Builder b("whitney", v, top);
  auto model = open_star(b.k, b.id({O}));
  auto axis = b.ids({{O}, {O, D}, {O, H}});
  b.set("whitney", model);
  b.set("whitney_axis", axis);
  b.set("whitney_regular_part", model - axis);
  b.set("whitney_handle", b.ids({{O, H}}));
  b.ones("whitney_ones", model);
  b.c.families.push_back({"whitney_family", {{"whitney", true}, {"whitney_axis", true}}});
  // (x, y, z) -> (x, -y, z)
  std::vector<QPoint> flip;
  for (const auto& p : v) flip.push_back(QPoint{p[0], -p[1], p[2]});
  b.map("whitney_flip", "whitney", "whitney", flip);
  b.c.germs.push_back({"whitney_pinch", "whitney", O});
  return b.c;
}

// Open cone over a square (the sheet) plus the two points of the z-axis.
CorpusFile cartan() {
  enum { O, E1, E2, E3, E4, N, S };
  std::vector<QPoint> v{pt({0, 0, 0}),  pt({1, 0, 1}), pt({0, 1, 0}),  pt({-1, 0, -1}),
                        pt({0, -1, 0}), pt({0, 0, 1}), pt({0, 0, -1})};
  Builder b("cartan", v, {{O, E1, E2}, {O, E2, E3}, {O, E3, E4}, {O, E1, E4}, {O, N}, {O, S}});
  auto model = open_star(b.k, b.id({O}));
  auto axis = b.ids({{O}, {O, N}, {O, S}});
  auto sheet = model - b.ids({{O, N}, {O, S}});
  b.set("cartan", model);
  b.set("cartan_axis", axis);
  b.set("cartan_sheet", sheet);
  b.set("cartan_regular_part", sheet - b.ids({{O}}));
  b.ones("cartan_ones", model);
  b.c.families.push_back({"cartan_family", {{"cartan", true}, {"cartan_axis", true}, {"cartan_sheet", false}}});
  // (x, y, z) -> (-x, -y, -z)
  std::vector<QPoint> flip;
  for (const auto& p : v) flip.push_back(QPoint{-p[0], -p[1], -p[2]});
  b.map("cartan_flip", "cartan", "cartan", flip);
  b.c.germs.push_back({"cartan_origin", "cartan", O});
  return b.c;
}

CorpusFile nested_circles() {
  std::vector<QPoint> v;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < 3; ++i) {
    v.push_back(pt({3L * i, 0}));
    v.push_back(pt({3L * i + 1, 0}));
    v.push_back(pt({3L * i, 1}));
    int a = 3 * i;
    edges.push_back({a, a + 1});
    edges.push_back({a + 1, a + 2});
    edges.push_back({a, a + 2});
  }
  Builder b("nested_circles", v, edges);
  CellSet acc(b.k);
  for (int i = 0; i < 3; ++i) {
    int a = 3 * i;
    acc = acc | b.ids({{a}, {a + 1}, {a + 2}, {a, a + 1}, {a + 1, a + 2}, {a, a + 2}});
    b.set("nested_" + std::to_string(i + 1), acc);
  }
  b.c.chains.push_back({"nested_circles", "nested_3", {"nested_1", "nested_2", "nested_3"}});
  return b.c;
}

}  // namespace

std::vector<CorpusFile> standard_corpus() {
  return {circle(), sphere(), segment(), line(), tripod(), whitney(), cartan(), nested_circles()};
}

}  // namespace eulerlab

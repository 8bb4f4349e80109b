#include "eulerlab/geom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace eulerlab {

std::string to_string(const Rational& r) {
  mpq_class q = r;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { return std::invalid_argument("malformed rational '" + text + "'"); };
  auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw bad();
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

QPoint& QPoint::operator+=(const QPoint& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}
QPoint& QPoint::operator-=(const QPoint& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}
QPoint& QPoint::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

std::string QPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += to_string(coords[i]);
  }
  return out + ")";
}

QPoint centroid(std::span<const QPoint> pts) {
  QPoint c(pts[0].dim());
  for (const auto& p : pts) c += p;
  c *= Rational(1, static_cast<long>(pts.size()));
  return c;
}

Rational AffineForm::operator()(const QPoint& p) const {
  Rational v = c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) v += a[i] * p[i];
  return v;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  c += o.c;
  return *this;
}

AffineForm AffineForm::operator*(const Rational& s) const {
  AffineForm r = *this;
  for (auto& x : r.a) x *= s;
  r.c *= s;
  return r;
}

bool AffineForm::is_constant() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

AffineForm AffineForm::normalized() const {
  for (const auto& x : a)
    if (x != 0) return *this * (Rational(1) / x);
  return *this;
}

namespace linalg {

namespace {

// Row-reduces m in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m, m[0].size()).size());
}

int affine_rank(std::span<const QPoint> pts) {
  if (pts.empty()) return -1;
  Matrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back((pts[i] - pts[0]).coords);
  return rank(std::move(m));
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols) {
  Matrix a = m;
  auto piv = rref(a, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linalg

bool GeomSimplex::is_nondegenerate() const {
  return linalg::affine_rank(vertices) == dim();
}

SimplexFrame::SimplexFrame(const GeomSimplex& s) {
  const std::size_t n = s.ambient_dim();
  const int d = s.dim();
  const QPoint& v0 = s.vertices[0];
  // Rows of the N x d edge matrix.
  linalg::Matrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int i = 1; i <= d; ++i) m[k].push_back(s.vertices[i][k] - v0[k]);
  }
  // Choose d independent coordinate rows (pivot rows).
  std::vector<std::size_t> rows;
  linalg::Matrix acc;
  for (std::size_t k = 0; k < n && static_cast<int>(rows.size()) < d; ++k) {
    auto trial = acc;
    trial.push_back(m[k]);
    if (linalg::rank(trial) > static_cast<int>(acc.size())) {
      acc = std::move(trial);
      rows.push_back(k);
    }
  }
  if (static_cast<int>(rows.size()) != d) throw ContractError("degenerate simplex");
  // mu = E_P^{-1} (x_P - v0_P); solve column by column for E_P^{-1}.
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> e(d);
    e[j] = 1;
    auto col = linalg::solve(acc, e);
    for (int i = 0; i < d; ++i) inv[i][j] = (*col)[i];
  }
  std::vector<AffineForm> mu(d);
  for (int i = 0; i < d; ++i) {
    mu[i].a.assign(n, 0);
    for (int j = 0; j < d; ++j) {
      mu[i].a[rows[j]] += inv[i][j];
      mu[i].c -= inv[i][j] * v0[rows[j]];
    }
  }
  AffineForm l0;
  l0.a.assign(n, 0);
  l0.c = 1;
  for (int i = 0; i < d; ++i) l0 += mu[i] * Rational(-1);
  bary.push_back(l0);
  for (auto& f : mu) bary.push_back(f);
  // x_k = v0_k + sum_i E_{k,i} mu_i on aff(s) for the remaining coordinates.
  std::set<std::size_t> pivot_rows(rows.begin(), rows.end());
  for (std::size_t k = 0; k < n; ++k) {
    if (pivot_rows.count(k)) continue;
    AffineForm eq;
    eq.a.assign(n, 0);
    eq.a[k] = 1;
    eq.c = -v0[k];
    for (int i = 0; i < d; ++i) eq += mu[i] * (-m[k][i]);
    equations.push_back(eq);
  }
}

bool SimplexFrame::in_affine_hull(const QPoint& p) const {
  return std::all_of(equations.begin(), equations.end(),
                     [&](const AffineForm& e) { return e(p) == 0; });
}

std::vector<Rational> SimplexFrame::coordinates(const QPoint& p) const {
  std::vector<Rational> out;
  out.reserve(bary.size());
  for (const auto& b : bary) out.push_back(b(p));
  return out;
}

AffineForm combine(const std::vector<AffineForm>& forms, const std::vector<Rational>& values) {
  AffineForm r;
  r.a.assign(forms.at(0).a.size(), 0);
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (values[i] != 0) r += forms[i] * values[i];
  return r;
}

std::optional<std::vector<Rational>> barycentric(const GeomSimplex& s, const QPoint& p) {
  SimplexFrame f(s);
  if (!f.in_affine_hull(p)) return std::nullopt;
  return f.coordinates(p);
}

ClipPolytope::ClipPolytope(const GeomSimplex& s) {
  if (!s.is_nondegenerate()) throw ContractError("degenerate simplex");
  const int n = static_cast<int>(s.vertices.size());
  for (int i = 0; i < n; ++i) {
    verts_.push_back(s.vertices[i]);
    std::vector<int> t;
    for (int j = 0; j < n; ++j)
      if (j != i) t.push_back(j);
    tight_.push_back(std::move(t));
  }
  next_id_ = n;
}

bool ClipPolytope::adjacent(std::size_t u, std::size_t v) const {
  std::vector<int> common;
  std::set_intersection(tight_[u].begin(), tight_[u].end(), tight_[v].begin(), tight_[v].end(),
                        std::back_inserter(common));
  for (std::size_t w = 0; w < verts_.size(); ++w) {
    if (w == u || w == v) continue;
    if (std::includes(tight_[w].begin(), tight_[w].end(), common.begin(), common.end()))
      return false;
  }
  return true;
}

void ClipPolytope::clip(const AffineForm& h) {
  if (verts_.empty()) return;
  const int id = next_id_++;
  std::vector<Rational> val;
  val.reserve(verts_.size());
  bool any_neg = false;
  for (const auto& p : verts_) {
    val.push_back(h(p));
    if (val.back() < 0) any_neg = true;
  }
  std::vector<QPoint> nv;
  std::vector<std::vector<int>> nt;
  for (std::size_t u = 0; u < verts_.size(); ++u) {
    if (val[u] < 0) continue;
    nv.push_back(verts_[u]);
    nt.push_back(tight_[u]);
    if (val[u] == 0) nt.back().push_back(id);
  }
  if (any_neg) {
    for (std::size_t u = 0; u < verts_.size(); ++u) {
      if (val[u] <= 0) continue;
      for (std::size_t v = 0; v < verts_.size(); ++v) {
        if (val[v] >= 0 || !adjacent(u, v)) continue;
        Rational t = val[u] / (val[u] - val[v]);
        nv.push_back(verts_[u] + (verts_[v] - verts_[u]) * t);
        std::vector<int> common;
        std::set_intersection(tight_[u].begin(), tight_[u].end(), tight_[v].begin(),
                              tight_[v].end(), std::back_inserter(common));
        common.push_back(id);
        nt.push_back(std::move(common));
      }
    }
  }
  verts_ = std::move(nv);
  tight_ = std::move(nt);
}

void ClipPolytope::restrict_to(const AffineForm& h) {
  clip(h);
  clip(h * Rational(-1));
}

int ClipPolytope::dimension() const { return linalg::affine_rank(verts_); }

ConvexCell ClipPolytope::cell() const {
  ConvexCell c;
  c.vertices = verts_;
  std::sort(c.vertices.begin(), c.vertices.end());
  c.dimension = linalg::affine_rank(c.vertices);
  return c;
}

ConvexCell clip(const GeomSimplex& s, const GeomSimplex& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw ContractError("ambient dimension mismatch");
  ClipPolytope p(s);
  SimplexFrame ft(t);
  for (const auto& e : ft.equations) {
    p.restrict_to(e);
    if (p.empty()) return {};
  }
  for (const auto& b : ft.bary) {
    p.clip(b);
    if (p.empty()) return {};
  }
  return p.cell();
}

std::vector<std::size_t> projection_coords(std::span<const QPoint> pts) {
  std::vector<std::size_t> coords;
  if (pts.empty()) return coords;
  const std::size_t n = pts[0].dim();
  // Columns of the difference matrix that are pivots in column order.
  linalg::Matrix cols;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> col;
    for (std::size_t i = 1; i < pts.size(); ++i) col.push_back(pts[i][k] - pts[0][k]);
    auto trial = cols;
    trial.push_back(col);
    if (linalg::rank(trial) > static_cast<int>(cols.size())) {
      cols = std::move(trial);
      coords.push_back(k);
    }
  }
  return coords;
}

namespace {

std::vector<Rational> project(const QPoint& p, const std::vector<std::size_t>& coords) {
  std::vector<Rational> out;
  for (auto k : coords) out.push_back(p[k]);
  return out;
}

Rational det(linalg::Matrix m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

Rational projected_volume(const GeomSimplex& s, const std::vector<std::size_t>& coords) {
  const int d = s.dim();
  if (d <= 0) return 1;
  linalg::Matrix m;
  for (int i = 1; i <= d; ++i) m.push_back(project(s.vertices[i] - s.vertices[0], coords));
  Rational v = abs(det(m));
  for (int i = 2; i <= d; ++i) v /= i;
  return v;
}

std::vector<ConvexCell> facets(const ConvexCell& c) {
  std::vector<ConvexCell> out;
  const int d = c.dimension;
  if (d <= 0) return out;
  auto coords = projection_coords(c.vertices);
  std::vector<std::vector<Rational>> pts;
  for (const auto& v : c.vertices) pts.push_back(project(v, coords));
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> cur;
  subsets(pts.size(), static_cast<std::size_t>(d), 0, cur, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix m;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      std::vector<Rational> row;
      for (int k = 0; k < d; ++k) row.push_back(pts[idx[i]][k] - pts[idx[0]][k]);
      m.push_back(row);
    }
    auto ns = linalg::nullspace(m, static_cast<std::size_t>(d));
    if (ns.size() != 1) return;
    const auto& nrm = ns[0];
    auto dot = [&](const std::vector<Rational>& p) {
      Rational s = 0;
      for (int k = 0; k < d; ++k) s += nrm[k] * p[k];
      return s;
    };
    Rational base = dot(pts[idx[0]]);
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational v = dot(pts[i]) - base;
      if (v > 0) pos = true;
      else if (v < 0) neg = true;
      else on.push_back(i);
    }
    if (pos && neg) return;
    if (!seen.insert(on).second) return;
    ConvexCell f;
    for (auto i : on) f.vertices.push_back(c.vertices[i]);
    f.dimension = linalg::affine_rank(f.vertices);
    if (f.dimension == d - 1) out.push_back(std::move(f));
  });
  return out;
}

std::vector<GeomSimplex> triangulate_cell(const ConvexCell& c, Apex apex) {
  if (c.empty()) throw ContractError("triangulate_cell: empty cell");
  std::vector<QPoint> verts = c.vertices;
  std::sort(verts.begin(), verts.end());
  if (static_cast<int>(verts.size()) == c.dimension + 1) return {GeomSimplex{verts}};
  const QPoint& v0 = apex == Apex::LexMin ? verts.front() : verts.back();
  std::vector<GeomSimplex> out;
  ConvexCell sorted{verts, c.dimension};
  for (const auto& f : facets(sorted)) {
    if (std::find(f.vertices.begin(), f.vertices.end(), v0) != f.vertices.end()) continue;
    for (auto& s : triangulate_cell(f, apex)) {
      s.vertices.push_back(v0);
      std::sort(s.vertices.begin(), s.vertices.end());
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GeomSimplex& a, const GeomSimplex& b) { return a.vertices < b.vertices; });
  return out;
}

}  // namespace eulerlab

#include "fundom/rep.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fundom {

int Rep::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

Rep zero_rep(const Quiver& q) {
  Rep m;
  m.q = &q;
  m.dims.assign(q.n, 0);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) m.mats.push_back(zeros(0, 0));
  return m;
}

Rep simple(const Quiver& q, int i) {
  if (i < 0 || i >= q.n) throw std::invalid_argument("simple: vertex out of range");
  Rep m = zero_rep(q);
  m.dims[i] = 1;
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    m.mats[a] = zeros(m.dims[q.arrows[a].second], m.dims[q.arrows[a].first]);
  return m;
}

namespace {

const std::vector<Path>& cached_paths(const Quiver& q) {
  static std::mutex mu;
  static std::map<const Quiver*, std::vector<Path>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(&q);
  if (it == cache.end()) it = cache.emplace(&q, all_paths(q)).first;
  return it->second;
}

int path_index(const std::vector<Path>& basis, const std::vector<int>& arrows) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].arrows == arrows) return static_cast<int>(i);
  throw std::logic_error("path_index: path not in basis");
}

Path concat(const Path& s, const Path& r) {
  if (s.to != r.from) throw std::logic_error("concat: paths not composable");
  Path p;
  p.from = s.from;
  p.to = r.to;
  p.arrows = s.arrows;
  p.arrows.insert(p.arrows.end(), r.arrows.begin(), r.arrows.end());
  return p;
}

}  // namespace

std::vector<Path> paths_between(const Quiver& q, int i, int j) {
  std::vector<Path> out;
  for (const auto& p : cached_paths(q))
    if (p.from == i && p.to == j) out.push_back(p);
  return out;
}

Rep projective(const Quiver& q, int i) {
  if (i < 0 || i >= q.n) throw std::invalid_argument("projective: vertex out of range");
  Rep m;
  m.q = &q;
  std::vector<std::vector<Path>> basis(q.n);
  for (int j = 0; j < q.n; ++j) {
    basis[j] = paths_between(q, i, j);
    m.dims.push_back(static_cast<int>(basis[j].size()));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [u, v] = q.arrows[a];
    Mat mat = zeros(m.dims[v], m.dims[u]);
    for (std::size_t c = 0; c < basis[u].size(); ++c) {
      std::vector<int> ext = basis[u][c].arrows;
      ext.push_back(static_cast<int>(a));
      mat(path_index(basis[v], ext), static_cast<int>(c)) = Fp(1);
    }
    m.mats.push_back(std::move(mat));
  }
  return m;
}

const Quiver& opposite_cached(const Quiver& q) {
  static std::mutex mu;
  static std::map<const Quiver*, const Quiver*> link;
  static std::vector<std::unique_ptr<Quiver>> owned;
  std::scoped_lock lock(mu);
  auto it = link.find(&q);
  if (it != link.end()) return *it->second;
  owned.push_back(std::make_unique<Quiver>(opposite(q)));
  const Quiver* op = owned.back().get();
  link[&q] = op;
  link[op] = &q;
  return *op;
}

Rep dual_rep(const Rep& m) {
  Rep d;
  d.q = &opposite_cached(*m.q);
  d.dims = m.dims;
  for (const auto& mat : m.mats) d.mats.push_back(mat.transpose());
  return d;
}

RepMap dual_map(const RepMap& f) {
  RepMap d;
  d.source = dual_rep(f.target);
  d.target = dual_rep(f.source);
  for (const auto& c : f.comps) d.comps.push_back(c.transpose());
  return d;
}

Rep injective(const Quiver& q, int i) {
  return dual_rep(projective(opposite_cached(q), i));
}

Mat path_action(const Rep& m, const Path& p) {
  Mat r = identity(m.dims[p.from]);
  for (int a : p.arrows) r = m.mats[a] * r;
  return r;
}

RepMap right_mult(const Quiver& q, const Path& s) {
  RepMap f;
  f.source = projective(q, s.to);
  f.target = projective(q, s.from);
  for (int j = 0; j < q.n; ++j) {
    auto src = paths_between(q, s.to, j);
    auto tgt = paths_between(q, s.from, j);
    Mat c = zeros(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (std::size_t col = 0; col < src.size(); ++col)
      c(path_index(tgt, concat(s, src[col]).arrows), static_cast<int>(col)) = Fp(1);
    f.comps.push_back(std::move(c));
  }
  return f;
}

bool is_rep_map(const RepMap& f) {
  const Quiver& q = *f.source.q;
  if (f.target.q != &q) return false;
  for (int v = 0; v < q.n; ++v)
    if (f.comps[v].rows() != f.target.dims[v] || f.comps[v].cols() != f.source.dims[v])
      return false;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [u, v] = q.arrows[a];
    if (Mat(f.target.mats[a] * f.comps[u]) != Mat(f.comps[v] * f.source.mats[a]))
      return false;
  }
  return true;
}

RepMap identity_map(const Rep& m) {
  RepMap f;
  f.source = m;
  f.target = m;
  for (int d : m.dims) f.comps.push_back(identity(d));
  return f;
}

RepMap zero_map(const Rep& source, const Rep& target) {
  RepMap f;
  f.source = source;
  f.target = target;
  for (int v = 0; v < source.q->n; ++v)
    f.comps.push_back(zeros(target.dims[v], source.dims[v]));
  return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  if (g.source.dims != f.target.dims)
    throw std::invalid_argument("compose: middle objects differ");
  RepMap h;
  h.source = f.source;
  h.target = g.target;
  for (std::size_t v = 0; v < f.comps.size(); ++v)
    h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

SumRep direct_sum_reps(const Quiver& q, std::vector<Rep> parts) {
  SumRep s;
  s.rep = zero_rep(q);
  s.parts = std::move(parts);
  for (const auto& p : s.parts) {
    s.offset.emplace_back();
    for (int v = 0; v < q.n; ++v) s.offset.back().push_back(s.rep.dims[v]);
    for (int v = 0; v < q.n; ++v) s.rep.dims[v] += p.dims[v];
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [u, v] = q.arrows[a];
    Mat m = zeros(s.rep.dims[v], s.rep.dims[u]);
    for (std::size_t k = 0; k < s.parts.size(); ++k)
      m.block(s.offset[k][v], s.offset[k][u], s.parts[k].dims[v], s.parts[k].dims[u]) =
          s.parts[k].mats[a];
    s.rep.mats[a] = std::move(m);
  }
  return s;
}

RepMap sum_inclusion(const SumRep& s, int part) {
  RepMap f;
  f.source = s.parts[part];
  f.target = s.rep;
  for (int v = 0; v < s.rep.q->n; ++v) {
    Mat m = zeros(s.rep.dims[v], s.parts[part].dims[v]);
    m.block(s.offset[part][v], 0, s.parts[part].dims[v], s.parts[part].dims[v]) =
        identity(s.parts[part].dims[v]);
    f.comps.push_back(std::move(m));
  }
  return f;
}

RepMap sum_projection(const SumRep& s, int part) {
  RepMap f;
  f.source = s.rep;
  f.target = s.parts[part];
  for (int v = 0; v < s.rep.q->n; ++v) {
    Mat m = zeros(s.parts[part].dims[v], s.rep.dims[v]);
    m.block(0, s.offset[part][v], s.parts[part].dims[v], s.parts[part].dims[v]) =
        identity(s.parts[part].dims[v]);
    f.comps.push_back(std::move(m));
  }
  return f;
}

RepMap sub_rep(const Rep& m, const std::vector<Mat>& span) {
  const Quiver& q = *m.q;
  std::vector<Mat> basis;
  for (int v = 0; v < q.n; ++v) basis.push_back(col_space_basis(span[v]));
  RepMap inc;
  inc.source.q = &q;
  for (int v = 0; v < q.n; ++v) inc.source.dims.push_back(static_cast<int>(basis[v].cols()));
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [u, v] = q.arrows[a];
    inc.source.mats.push_back(coords_in_basis(basis[v], m.mats[a] * basis[u]));
  }
  inc.target = m;
  inc.comps = std::move(basis);
  return inc;
}

QuotientData quotient_with_section(const Rep& m, const std::vector<Mat>& span) {
  const Quiver& q = *m.q;
  QuotientData out;
  out.proj.source = m;
  out.proj.target.q = &q;
  std::vector<Mat> pis;
  for (int v = 0; v < q.n; ++v) {
    Mat u = col_space_basis(span[v]);
    int d = m.dims[v], du = static_cast<int>(u.cols());
    // Extend u to a basis by standard vectors: pivots of [u | I] past du.
    Rref r = rref(hstack(u, identity(d)));
    Mat w = zeros(d, d - du);
    int wc = 0;
    for (int piv : r.pivots)
      if (piv >= du) w(piv - du, wc++) = Fp(1);
    Mat full = hstack(u, w);
    Mat inv = coords_in_basis(full, identity(d));
    out.proj.target.dims.push_back(d - du);
    out.proj.comps.push_back(inv.bottomRows(d - du));
    out.section.push_back(std::move(w));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [u, v] = q.arrows[a];
    out.proj.target.mats.push_back(out.proj.comps[v] * m.mats[a] * out.section[u]);
  }
  return out;
}

RepMap quotient_rep(const Rep& m, const std::vector<Mat>& span) {
  return quotient_with_section(m, span).proj;
}

RepMap kernel_map(const RepMap& f) {
  std::vector<Mat> span;
  for (const auto& c : f.comps) span.push_back(kernel_basis(c));
  return sub_rep(f.source, span);
}

RepMap image_map(const RepMap& f) {
  std::vector<Mat> span(f.comps.begin(), f.comps.end());
  return sub_rep(f.target, span);
}

RepMap cokernel_map(const RepMap& f) {
  std::vector<Mat> span(f.comps.begin(), f.comps.end());
  return quotient_rep(f.target, span);
}

std::vector<Mat> radical_span(const Rep& m) {
  const Quiver& q = *m.q;
  std::vector<Mat> span;
  for (int v = 0; v < q.n; ++v) span.push_back(zeros(m.dims[v], 0));
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    span[q.arrows[a].second] = hstack(span[q.arrows[a].second], m.mats[a]);
  return span;
}

RepMap top_proj(const Rep& m) { return quotient_rep(m, radical_span(m)); }
RepMap radical_inc(const Rep& m) { return sub_rep(m, radical_span(m)); }

RepMap socle_inc(const Rep& m) {
  const Quiver& q = *m.q;
  std::vector<Mat> span;
  for (int v = 0; v < q.n; ++v) {
    Mat out = zeros(0, m.dims[v]);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].first == v) out = vstack(out, m.mats[a]);
    span.push_back(kernel_basis(out));
  }
  return sub_rep(m, span);
}

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) {
  if (m.q != n.q) throw std::invalid_argument("hom_basis: different quivers");
  const Quiver& q = *m.q;
  std::vector<int> off(q.n + 1, 0);
  for (int v = 0; v < q.n; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  int unknowns = off[q.n];
  int rows = 0;
  for (auto [u, v] : q.arrows) rows += n.dims[v] * m.dims[u];
  Mat sys = zeros(rows, unknowns);
  int row0 = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [u, v] = q.arrows[a];
    // N_a C_u - C_v M_a = 0; unknown C_w(k,c) at off[w] + c*n.dims[w] + k.
    for (int r = 0; r < n.dims[v]; ++r)
      for (int c = 0; c < m.dims[u]; ++c) {
        int row = row0 + c * n.dims[v] + r;
        for (int k = 0; k < n.dims[u]; ++k)
          sys(row, off[u] + c * n.dims[u] + k) += n.mats[a](r, k);
        for (int k = 0; k < m.dims[v]; ++k)
          sys(row, off[v] + k * n.dims[v] + r) -= m.mats[a](k, c);
      }
    row0 += n.dims[v] * m.dims[u];
  }
  Mat ker = unknowns ? kernel_basis(sys) : zeros(0, 0);
  std::vector<RepMap> basis;
  for (int j = 0; j < ker.cols(); ++j) {
    RepMap f;
    f.source = m;
    f.target = n;
    for (int v = 0; v < q.n; ++v) {
      Mat c = zeros(n.dims[v], m.dims[v]);
      for (int cc = 0; cc < m.dims[v]; ++cc)
        for (int rr = 0; rr < n.dims[v]; ++rr)
          c(rr, cc) = ker(off[v] + cc * n.dims[v] + rr, j);
      f.comps.push_back(std::move(c));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

int hom_dim(const Rep& m, const Rep& n) {
  return static_cast<int>(hom_basis(m, n).size());
}

ProjCover proj_cover(const Rep& m) {
  const Quiver& q = *m.q;
  RepMap t = top_proj(m);
  ProjCover pc;
  std::vector<Rep> parts;
  std::vector<Vec> gens;  // generator image in m at pc.vertices[s]
  for (int i = 0; i < q.n; ++i) {
    int ti = t.target.dims[i];
    for (int s = 0; s < ti; ++s) {
      Vec e = zeros(ti, 1).col(0);
      e(s) = Fp(1);
      auto lift = solve(t.comps[i], e);
      if (!lift) throw std::logic_error("proj_cover: top projection not surjective");
      pc.vertices.push_back(i);
      parts.push_back(projective(q, i));
      gens.push_back(*lift);
    }
  }
  pc.sum = direct_sum_reps(q, parts);
  pc.map.source = pc.sum.rep;
  pc.map.target = m;
  for (int j = 0; j < q.n; ++j) {
    Mat c = zeros(m.dims[j], pc.sum.rep.dims[j]);
    for (std::size_t s = 0; s < pc.vertices.size(); ++s) {
      auto paths = paths_between(q, pc.vertices[s], j);
      for (std::size_t p = 0; p < paths.size(); ++p)
        c.col(pc.sum.offset[s][j] + static_cast<int>(p)) =
            path_action(m, paths[p]) * gens[s];
    }
    pc.map.comps.push_back(std::move(c));
  }
  return pc;
}

MinPresentation min_presentation(const Rep& m) {
  MinPresentation mp;
  mp.p0 = proj_cover(m);
  RepMap k = kernel_map(mp.p0.map);
  mp.p1 = proj_cover(k.source);
  mp.f = compose(k, mp.p1.map);
  return mp;
}

int ext1_dim(const Rep& m, const Rep& n) {
  if (m.is_zero()) return 0;
  MinPresentation mp = min_presentation(m);
  return hom_dim(mp.p1.sum.rep, n) - hom_dim(mp.p0.sum.rep, n) + hom_dim(m, n);
}

int euler_form(const Rep& m, const Rep& n) {
  int e = 0;
  for (int v = 0; v < m.q->n; ++v) e += m.dims[v] * n.dims[v];
  for (auto [u, v] : m.q->arrows) e -= m.dims[u] * n.dims[v];
  return e;
}

Rep transpose_rep(const Rep& m) {
  const Quiver& q = *m.q;
  const Quiver& qop = opposite_cached(q);
  MinPresentation mp = min_presentation(m);
  // Hom(-, H) sends P_i to the opposite projective at i and a map given by
  // a path p to right multiplication by the reversed path.
  std::vector<Rep> r0parts, r1parts;
  for (int b : mp.p0.vertices) r0parts.push_back(projective(qop, b));
  for (int a : mp.p1.vertices) r1parts.push_back(projective(qop, a));
  SumRep r0 = direct_sum_reps(qop, r0parts);
  SumRep r1 = direct_sum_reps(qop, r1parts);
  RepMap g = zero_map(r0.rep, r1.rep);
  for (std::size_t l = 0; l < mp.p1.vertices.size(); ++l) {
    int al = mp.p1.vertices[l];
    // coordinates of f(generator of summand l) across the P0 path basis
    int gen_col = mp.p1.sum.offset[l][al];  // trivial path is basis index 0
    Vec gv = mp.f.comps[al].col(gen_col);
    for (std::size_t k = 0; k < mp.p0.vertices.size(); ++k) {
      int bk = mp.p0.vertices[k];
      auto paths = paths_between(q, bk, al);
      for (std::size_t t = 0; t < paths.size(); ++t) {
        Fp c = gv(mp.p0.sum.offset[k][al] + static_cast<int>(t));
        if (c.is_zero()) continue;
        Path rev;
        rev.from = paths[t].to;
        rev.to = paths[t].from;
        rev.arrows.assign(paths[t].arrows.rbegin(), paths[t].arrows.rend());
        RepMap rm = right_mult(qop, rev);  // opposite P_{bk} -> opposite P_{al}
        for (int j = 0; j < qop.n; ++j)
          g.comps[j].block(r1.offset[l][j], r0.offset[k][j],
                           rm.target.dims[j], rm.source.dims[j]) += c * rm.comps[j];
      }
    }
  }
  return cokernel_map(g).target;
}

Rep tau_h(const Rep& m) {
  if (m.is_zero()) return m;
  if (!is_indecomposable(m))
    throw std::invalid_argument("tau_h: input must be indecomposable");
  return dual_rep(transpose_rep(m));
}

Rep tau_h_inv(const Rep& m) {
  if (m.is_zero()) return m;
  if (!is_indecomposable(m))
    throw std::invalid_argument("tau_h_inv: input must be indecomposable");
  return transpose_rep(dual_rep(m));
}

bool is_indecomposable(const Rep& m) {
  if (m.is_zero()) return false;
  auto ends = hom_basis(m, m);
  int d = static_cast<int>(ends.size());
  // Trace form on End(M); its radical is rad End(M) since char >> dim M,
  // and End is local iff the semisimple quotient is 1-dimensional.
  Mat gram = zeros(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Fp tr(0);
      for (int v = 0; v < m.q->n; ++v) {
        Mat prod = ends[i].comps[v] * ends[j].comps[v];
        for (int k = 0; k < prod.rows(); ++k) tr += prod(k, k);
      }
      gram(i, j) = tr;
    }
  return rank(gram) == 1;
}

bool iso_indec(const Rep& m, const Rep& n) {
  if (m.dims != n.dims) return false;
  return hom_dim(m, n) > 0 && hom_dim(n, m) > 0;
}

std::vector<IndH> indecomposables_h(const Quiver& q) {
  if (!is_dynkin(q))
    throw std::domain_error("indecomposables_h: quiver is not of Dynkin type");
  std::vector<IndH> out;
  std::vector<IndH> gen;
  for (int i = 0; i < q.n; ++i) gen.push_back({projective(q, i), i, 0});
  while (!gen.empty()) {
    std::vector<IndH> next;
    for (auto& m : gen) {
      Rep t = tau_h_inv(m.rep);
      if (!t.is_zero()) next.push_back({std::move(t), m.vertex, m.power + 1});
      out.push_back(std::move(m));
    }
    gen = std::move(next);
  }
  return out;
}

}  // namespace fundom

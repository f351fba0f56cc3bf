#include "fundom/triple.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fundom {

namespace {

std::mutex instance_mu;
std::map<std::pair<int, const Quiver*>, std::shared_ptr<Instance>> instance_cache;

Mat right_inverse(const Mat& a) {
  Mat r = zeros(static_cast<int>(a.cols()), static_cast<int>(a.rows()));
  for (int j = 0; j < a.rows(); ++j) {
    Vec e = zeros(static_cast<int>(a.rows()), 1).col(0);
    e(j) = Fp(1);
    auto x = solve(a, e);
    if (!x) throw std::logic_error("right_inverse: matrix not surjective");
    if (a.cols() > 0) r.col(j) = *x;
  }
  return r;
}

}  // namespace

const Instance& lambda_of(const Quiver& h) {
  std::scoped_lock lock(instance_mu);
  auto key = std::make_pair(0, &h);
  auto it = instance_cache.find(key);
  if (it != instance_cache.end()) return *it->second;
  auto r = std::make_shared<Instance>();
  r->kind = Instance::Kind::Lambda;
  r->h = &h;
  r->left = &h;
  for (int i = 0; i < h.n; ++i) r->delta.push_back(i);
  r->bim = dh_bimodule(h);
  instance_cache[key] = r;
  return *r;
}

const Instance& gamma_of(const Quiver& h) {
  std::scoped_lock lock(instance_mu);
  auto key = std::make_pair(1, &h);
  auto it = instance_cache.find(key);
  if (it != instance_cache.end()) return *it->second;
  if (!is_acyclic(h)) throw std::invalid_argument("gamma_of: quiver must be acyclic");
  auto r = std::make_shared<Instance>();
  r->kind = Instance::Kind::Gamma;
  r->h = &h;
  r->delta = sinks(h);
  auto disc = std::make_shared<Quiver>();
  disc->n = static_cast<int>(r->delta.size());
  for (int s : r->delta) disc->labels.push_back(h.labels[s] + "'");
  r->owned_left = disc;
  r->left = disc.get();
  r->bim.qa = r->left;
  r->bim.qb = &h;
  for (int s : r->delta) r->bim.col.push_back(injective(h, s));
  instance_cache[key] = r;
  return *r;
}

const Instance& opposite_instance(const Instance& r) {
  std::scoped_lock lock(instance_mu);
  if (r.op_back_) return *r.op_back_;
  if (r.op_) return *r.op_;
  auto op = std::make_shared<Instance>();
  op->kind = Instance::Kind::Other;
  op->h = &opposite_cached(*r.left);
  op->left = &opposite_cached(*r.h);
  for (int i = 0; i < r.h->n; ++i) op->delta.push_back(i);
  op->bim.qa = op->left;
  op->bim.qb = op->h;
  // Columns swap roles: col'[i]_a = col[a]_i, the left action of the
  // opposite of the old right action and vice versa.
  for (int i = 0; i < r.h->n; ++i) {
    Rep c;
    c.q = op->h;
    for (int a = 0; a < r.left->n; ++a) c.dims.push_back(r.bim.col[a].dims[i]);
    for (std::size_t e = 0; e < r.left->arrows.size(); ++e)
      c.mats.push_back(r.bim.right_act[e].comps[i]);
    op->bim.col.push_back(std::move(c));
  }
  for (std::size_t e = 0; e < r.h->arrows.size(); ++e) {
    auto [u, v] = r.h->arrows[e];
    RepMap act;
    act.source = op->bim.col[u];
    act.target = op->bim.col[v];
    for (int a = 0; a < r.left->n; ++a) act.comps.push_back(r.bim.col[a].mats[e]);
    op->bim.right_act.push_back(std::move(act));
  }
  op->op_back_ = &r;
  r.op_ = op;
  return *op;
}

Triple make_triple(const Instance& r, Rep x, Rep y, std::vector<Mat> fcomps) {
  if (x.q != r.left || y.q != r.h)
    throw std::invalid_argument("make_triple: components over wrong quivers");
  Triple m;
  m.alg = &r;
  m.x = std::move(x);
  m.y = std::move(y);
  m.tx = tensor(r.bim, m.x);
  m.f.source = m.tx.rep;
  m.f.target = m.y;
  m.f.comps = std::move(fcomps);
  if (!is_rep_map(m.f)) throw std::invalid_argument("make_triple: f is not a map");
  return m;
}

Triple zero_triple(const Instance& r) {
  std::vector<Mat> f;
  for (int i = 0; i < r.h->n; ++i) f.push_back(zeros(0, 0));
  return make_triple(r, zero_rep(*r.left), zero_rep(*r.h), std::move(f));
}

Triple embed_h(const Instance& r, const Rep& y) {
  std::vector<Mat> f;
  for (int i = 0; i < r.h->n; ++i) f.push_back(zeros(y.dims[i], 0));
  return make_triple(r, zero_rep(*r.left), y, std::move(f));
}

TripleMap embed_h_map(const Instance& r, const RepMap& g) {
  TripleMap f;
  f.source = embed_h(r, g.source);
  f.target = embed_h(r, g.target);
  f.ax = zero_map(f.source.x, f.target.x);
  f.by = g;
  return f;
}

bool is_triple_map(const TripleMap& f) {
  if (f.source.alg != f.target.alg) return false;
  if (!is_rep_map(f.ax) || !is_rep_map(f.by)) return false;
  RepMap tax = tensor_map(f.source.alg->bim, f.source.tx, f.target.tx, f.ax);
  for (int i = 0; i < f.source.alg->h->n; ++i)
    if (Mat(f.by.comps[i] * f.source.f.comps[i]) !=
        Mat(f.target.f.comps[i] * tax.comps[i]))
      return false;
  return true;
}

TripleMap make_triple_map(Triple source, Triple target, RepMap ax, RepMap by) {
  TripleMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.ax = std::move(ax);
  f.by = std::move(by);
  if (!is_triple_map(f))
    throw std::invalid_argument("make_triple_map: compatibility square fails");
  return f;
}

TripleMap identity_triple_map(const Triple& m) {
  TripleMap f;
  f.source = m;
  f.target = m;
  f.ax = identity_map(m.x);
  f.by = identity_map(m.y);
  return f;
}

TripleMap zero_triple_map(const Triple& source, const Triple& target) {
  TripleMap f;
  f.source = source;
  f.target = target;
  f.ax = zero_map(source.x, target.x);
  f.by = zero_map(source.y, target.y);
  return f;
}

TripleMap compose(const TripleMap& g, const TripleMap& f) {
  TripleMap h;
  h.source = f.source;
  h.target = g.target;
  h.ax = compose(g.ax, f.ax);
  h.by = compose(g.by, f.by);
  return h;
}

Triple projective_triple(const Instance& r, int right_vertex) {
  return embed_h(r, projective(*r.h, right_vertex));
}

Triple left_projective_triple(const Instance& r, int left_vertex) {
  Rep x = projective(*r.left, left_vertex);
  TensorResult tx = tensor(r.bim, x);
  std::vector<Mat> f;
  for (int i = 0; i < r.h->n; ++i) f.push_back(identity(tx.rep.dims[i]));
  return make_triple(r, std::move(x), tx.rep, std::move(f));
}

std::vector<Triple> projective_triples(const Instance& r) {
  std::vector<Triple> out;
  for (int i = 0; i < r.h->n; ++i) out.push_back(projective_triple(r, i));
  for (int a = 0; a < r.left->n; ++a) out.push_back(left_projective_triple(r, a));
  return out;
}

std::vector<TripleMap> hom_triples(const Triple& m, const Triple& n) {
  if (m.alg != n.alg) throw std::invalid_argument("hom_triples: mixed instances");
  const Instance& r = *m.alg;
  const Quiver& qa = *r.left;
  const Quiver& qb = *r.h;
  std::vector<int> offa(qa.n + 1, 0), offb(qb.n + 1, 0);
  for (int a = 0; a < qa.n; ++a) offa[a + 1] = offa[a] + n.x.dims[a] * m.x.dims[a];
  offb[0] = offa[qa.n];
  for (int i = 0; i < qb.n; ++i) offb[i + 1] = offb[i] + n.y.dims[i] * m.y.dims[i];
  int unknowns = offb[qb.n];

  int rows = 0;
  for (auto [u, v] : qa.arrows) rows += n.x.dims[v] * m.x.dims[u];
  for (auto [u, v] : qb.arrows) rows += n.y.dims[v] * m.y.dims[u];
  for (int i = 0; i < qb.n; ++i) rows += n.y.dims[i] * m.tx.rep.dims[i];
  Mat sys = zeros(rows, unknowns);
  int row0 = 0;
  // x-component is a map of left-quiver representations
  for (std::size_t e = 0; e < qa.arrows.size(); ++e) {
    auto [u, v] = qa.arrows[e];
    for (int rr = 0; rr < n.x.dims[v]; ++rr)
      for (int cc = 0; cc < m.x.dims[u]; ++cc) {
        int row = row0 + cc * n.x.dims[v] + rr;
        for (int k = 0; k < n.x.dims[u]; ++k)
          sys(row, offa[u] + cc * n.x.dims[u] + k) += n.x.mats[e](rr, k);
        for (int k = 0; k < m.x.dims[v]; ++k)
          sys(row, offa[v] + k * n.x.dims[v] + rr) -= m.x.mats[e](k, cc);
      }
    row0 += n.x.dims[v] * m.x.dims[u];
  }
  // y-component is a map of right-quiver representations
  for (std::size_t e = 0; e < qb.arrows.size(); ++e) {
    auto [u, v] = qb.arrows[e];
    for (int rr = 0; rr < n.y.dims[v]; ++rr)
      for (int cc = 0; cc < m.y.dims[u]; ++cc) {
        int row = row0 + cc * n.y.dims[v] + rr;
        for (int k = 0; k < n.y.dims[u]; ++k)
          sys(row, offb[u] + cc * n.y.dims[u] + k) += n.y.mats[e](rr, k);
        for (int k = 0; k < m.y.dims[v]; ++k)
          sys(row, offb[v] + k * n.y.dims[v] + rr) -= m.y.mats[e](k, cc);
      }
    row0 += n.y.dims[v] * m.y.dims[u];
  }
  // compatibility: by . f_M = f_N . T(ax), with T(ax) linear in ax
  for (int i = 0; i < qb.n; ++i) {
    int tm = m.tx.rep.dims[i];
    Mat fnpi = n.f.comps[i] * n.tx.pi[i];  // ambient_N -> y_N at i
    for (int rr = 0; rr < n.y.dims[i]; ++rr)
      for (int s = 0; s < tm; ++s) {
        int row = row0 + s * n.y.dims[i] + rr;
        for (int k = 0; k < m.y.dims[i]; ++k)
          sys(row, offb[i] + k * n.y.dims[i] + rr) += m.f.comps[i](k, s);
        for (int a = 0; a < qa.n; ++a) {
          int c = r.bim.col[a].dims[i];
          if (c == 0) continue;
          for (int xo = 0; xo < n.x.dims[a]; ++xo)
            for (int xi = 0; xi < m.x.dims[a]; ++xi) {
              Fp coef(0);
              for (int t = 0; t < c; ++t)
                coef += fnpi(rr, n.tx.offset[a][i] + xo * c + t) *
                        m.tx.section[i](m.tx.offset[a][i] + xi * c + t, s);
              sys(row, offa[a] + xi * n.x.dims[a] + xo) -= coef;
            }
        }
      }
    row0 += n.y.dims[i] * tm;
  }

  Mat ker = unknowns ? kernel_basis(sys) : zeros(0, 0);
  std::vector<TripleMap> basis;
  for (int j = 0; j < ker.cols(); ++j) {
    TripleMap tmap;
    tmap.source = m;
    tmap.target = n;
    tmap.ax.source = m.x;
    tmap.ax.target = n.x;
    for (int a = 0; a < qa.n; ++a) {
      Mat c = zeros(n.x.dims[a], m.x.dims[a]);
      for (int cc = 0; cc < m.x.dims[a]; ++cc)
        for (int rr = 0; rr < n.x.dims[a]; ++rr)
          c(rr, cc) = ker(offa[a] + cc * n.x.dims[a] + rr, j);
      tmap.ax.comps.push_back(std::move(c));
    }
    tmap.by.source = m.y;
    tmap.by.target = n.y;
    for (int i = 0; i < qb.n; ++i) {
      Mat c = zeros(n.y.dims[i], m.y.dims[i]);
      for (int cc = 0; cc < m.y.dims[i]; ++cc)
        for (int rr = 0; rr < n.y.dims[i]; ++rr)
          c(rr, cc) = ker(offb[i] + cc * n.y.dims[i] + rr, j);
      tmap.by.comps.push_back(std::move(c));
    }
    basis.push_back(std::move(tmap));
  }
  return basis;
}

int hom_dim(const Triple& m, const Triple& n) {
  return static_cast<int>(hom_triples(m, n).size());
}

Vec flatten_triple_map(const TripleMap& f) {
  std::vector<Fp> entries;
  for (const auto& c : f.ax.comps)
    for (int j = 0; j < c.cols(); ++j)
      for (int i = 0; i < c.rows(); ++i) entries.push_back(c(i, j));
  for (const auto& c : f.by.comps)
    for (int j = 0; j < c.cols(); ++j)
      for (int i = 0; i < c.rows(); ++i) entries.push_back(c(i, j));
  Vec v(static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<int>(i)) = entries[i];
  return v;
}

Vec map_coords(const std::vector<TripleMap>& basis, const TripleMap& f) {
  Vec fv = flatten_triple_map(f);
  Mat b(fv.rows(), static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    b.col(k) = flatten_triple_map(basis[k]);
  Mat c = coords_in_basis(b, fv);
  return c.col(0);
}

Triple dual_triple(const Triple& m) {
  const Instance& rop = opposite_instance(*m.alg);
  Rep dx = dual_rep(m.y);  // over rop.left... no: over opposite of m's right
  Rep dy = dual_rep(m.x);
  TensorResult txd = tensor(rop.bim, dx);
  // Df(mu (x) phi)(xi) = phi(f(mu (x) xi))
  std::vector<Mat> fcomps;
  for (int a = 0; a < rop.h->n; ++a) {
    Mat amb = zeros(m.x.dims[a], static_cast<int>(txd.pi[a].cols()));
    for (int i = 0; i < m.alg->h->n; ++i) {
      int c = m.alg->bim.col[a].dims[i];
      if (c == 0) continue;
      Mat fpi = m.f.comps[i] * m.tx.pi[i];
      for (int xi = 0; xi < m.x.dims[a]; ++xi)
        for (int eta = 0; eta < m.y.dims[i]; ++eta)
          for (int mu = 0; mu < c; ++mu)
            amb(xi, txd.offset[i][a] + eta * c + mu) =
                fpi(eta, m.tx.offset[a][i] + xi * c + mu);
    }
    fcomps.push_back(amb * txd.section[a]);
  }
  return make_triple(rop, std::move(dx), std::move(dy), std::move(fcomps));
}

TripleMap dual_triple_map(const TripleMap& f) {
  TripleMap d;
  d.source = dual_triple(f.target);
  d.target = dual_triple(f.source);
  d.ax.source = d.source.x;
  d.ax.target = d.target.x;
  for (const auto& c : f.by.comps) d.ax.comps.push_back(c.transpose());
  d.by.source = d.source.y;
  d.by.target = d.target.y;
  for (const auto& c : f.ax.comps) d.by.comps.push_back(c.transpose());
  return d;
}

SubTriple sub_triple(const Triple& m, const std::vector<Mat>& span_x,
                     const std::vector<Mat>& span_y) {
  const Instance& r = *m.alg;
  RepMap incx = sub_rep(m.x, span_x);
  RepMap incy = sub_rep(m.y, span_y);
  SubTriple out;
  out.sub.alg = &r;
  out.sub.x = incx.source;
  out.sub.y = incy.source;
  out.sub.tx = tensor(r.bim, out.sub.x);
  RepMap tinc = tensor_map(r.bim, out.sub.tx, m.tx, incx);
  out.sub.f.source = out.sub.tx.rep;
  out.sub.f.target = out.sub.y;
  for (int i = 0; i < r.h->n; ++i)
    out.sub.f.comps.push_back(
        coords_in_basis(incy.comps[i], m.f.comps[i] * tinc.comps[i]));
  out.inc.source = out.sub;
  out.inc.target = m;
  out.inc.ax = std::move(incx);
  out.inc.by = std::move(incy);
  return out;
}

QuotTriple quot_triple(const Triple& m, const std::vector<Mat>& span_x,
                       const std::vector<Mat>& span_y) {
  const Instance& r = *m.alg;
  RepMap projx = quotient_rep(m.x, span_x);
  RepMap projy = quotient_rep(m.y, span_y);
  QuotTriple out;
  out.quot.alg = &r;
  out.quot.x = projx.target;
  out.quot.y = projy.target;
  out.quot.tx = tensor(r.bim, out.quot.x);
  RepMap tproj = tensor_map(r.bim, m.tx, out.quot.tx, projx);
  out.quot.f.source = out.quot.tx.rep;
  out.quot.f.target = out.quot.y;
  for (int i = 0; i < r.h->n; ++i)
    out.quot.f.comps.push_back(projy.comps[i] * m.f.comps[i] *
                               right_inverse(tproj.comps[i]));
  out.proj.source = m;
  out.proj.target = out.quot;
  out.proj.ax = std::move(projx);
  out.proj.by = std::move(projy);
  return out;
}

SubTriple kernel_triple(const TripleMap& f) {
  std::vector<Mat> sx, sy;
  for (const auto& c : f.ax.comps) sx.push_back(kernel_basis(c));
  for (const auto& c : f.by.comps) sy.push_back(kernel_basis(c));
  return sub_triple(f.source, sx, sy);
}

SubTriple image_triple(const TripleMap& f) {
  std::vector<Mat> sx(f.ax.comps.begin(), f.ax.comps.end());
  std::vector<Mat> sy(f.by.comps.begin(), f.by.comps.end());
  return sub_triple(f.target, sx, sy);
}

QuotTriple cokernel_triple(const TripleMap& f) {
  std::vector<Mat> sx(f.ax.comps.begin(), f.ax.comps.end());
  std::vector<Mat> sy(f.by.comps.begin(), f.by.comps.end());
  return quot_triple(f.target, sx, sy);
}

namespace {

void radical_spans(const Triple& m, std::vector<Mat>& sx, std::vector<Mat>& sy) {
  sx = radical_span(m.x);
  sy = radical_span(m.y);
  for (int i = 0; i < m.alg->h->n; ++i) sy[i] = hstack(sy[i], m.f.comps[i]);
}

}  // namespace

SubTriple radical_triple(const Triple& m) {
  std::vector<Mat> sx, sy;
  radical_spans(m, sx, sy);
  return sub_triple(m, sx, sy);
}

QuotTriple top_triple(const Triple& m) {
  std::vector<Mat> sx, sy;
  radical_spans(m, sx, sy);
  return quot_triple(m, sx, sy);
}

SubTriple socle_triple(const Triple& m) {
  const Instance& r = *m.alg;
  const Quiver& qa = *r.left;
  const Quiver& qb = *r.h;
  std::vector<Mat> sx, sy;
  // X-part: x in soc X with f(mu (x) x) = 0 for every mu.
  for (int a = 0; a < qa.n; ++a) {
    Mat cond = zeros(0, m.x.dims[a]);
    for (std::size_t e = 0; e < qa.arrows.size(); ++e)
      if (qa.arrows[e].first == a) cond = vstack(cond, m.x.mats[e]);
    for (int i = 0; i < qb.n; ++i) {
      int c = r.bim.col[a].dims[i];
      if (c == 0) continue;
      Mat fpi = m.f.comps[i] * m.tx.pi[i];
      Mat block = zeros(m.y.dims[i] * c, m.x.dims[a]);
      for (int xi = 0; xi < m.x.dims[a]; ++xi)
        for (int mu = 0; mu < c; ++mu)
          for (int rr = 0; rr < m.y.dims[i]; ++rr)
            block(mu * m.y.dims[i] + rr, xi) =
                fpi(rr, m.tx.offset[a][i] + xi * c + mu);
      cond = vstack(cond, block);
    }
    sx.push_back(kernel_basis(cond));
  }
  for (int i = 0; i < qb.n; ++i) {
    Mat cond = zeros(0, m.y.dims[i]);
    for (std::size_t e = 0; e < qb.arrows.size(); ++e)
      if (qb.arrows[e].first == i) cond = vstack(cond, m.y.mats[e]);
    sy.push_back(kernel_basis(cond));
  }
  return sub_triple(m, sx, sy);
}

SumTriple direct_sum_triples(const Instance& r, std::vector<Triple> parts) {
  SumTriple s;
  std::vector<Rep> xs, ys;
  for (const auto& p : parts) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  SumRep xsum = direct_sum_reps(*r.left, xs);
  SumRep ysum = direct_sum_reps(*r.h, ys);
  s.rep.alg = &r;
  s.rep.x = xsum.rep;
  s.rep.y = ysum.rep;
  s.rep.tx = tensor(r.bim, s.rep.x);
  s.rep.f.source = s.rep.tx.rep;
  s.rep.f.target = s.rep.y;
  for (int i = 0; i < r.h->n; ++i)
    s.rep.f.comps.push_back(zeros(s.rep.y.dims[i], s.rep.tx.rep.dims[i]));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    RepMap tproj = tensor_map(r.bim, s.rep.tx, parts[k].tx,
                              sum_projection(xsum, static_cast<int>(k)));
    RepMap yinc = sum_inclusion(ysum, static_cast<int>(k));
    for (int i = 0; i < r.h->n; ++i)
      s.rep.f.comps[i] += yinc.comps[i] * parts[k].f.comps[i] * tproj.comps[i];
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    TripleMap inc;
    inc.source = parts[k];
    inc.target = s.rep;
    inc.ax = sum_inclusion(xsum, static_cast<int>(k));
    inc.by = sum_inclusion(ysum, static_cast<int>(k));
    s.inc.push_back(std::move(inc));
    TripleMap proj;
    proj.source = s.rep;
    proj.target = parts[k];
    proj.ax = sum_projection(xsum, static_cast<int>(k));
    proj.by = sum_projection(ysum, static_cast<int>(k));
    s.proj.push_back(std::move(proj));
  }
  s.parts = std::move(parts);
  return s;
}

TripleCover proj_cover_triple(const Triple& m) {
  const Instance& r = *m.alg;
  QuotTriple t = top_triple(m);
  TripleCover pc;
  std::vector<Triple> parts;
  std::vector<TripleMap> maps;  // part -> m
  for (int i = 0; i < r.h->n; ++i) {
    for (int s = 0; s < t.quot.y.dims[i]; ++s) {
      Vec e = zeros(t.quot.y.dims[i], 1).col(0);
      e(s) = Fp(1);
      auto lift = solve(t.proj.by.comps[i], e);
      if (!lift) throw std::logic_error("proj_cover_triple: top not surjective");
      Triple p = projective_triple(r, i);
      TripleMap g;
      g.source = p;
      g.target = m;
      g.ax = zero_map(p.x, m.x);
      g.by.source = p.y;
      g.by.target = m.y;
      for (int j = 0; j < r.h->n; ++j) {
        auto paths = paths_between(*r.h, i, j);
        Mat c = zeros(m.y.dims[j], p.y.dims[j]);
        for (std::size_t pi = 0; pi < paths.size(); ++pi)
          c.col(static_cast<int>(pi)) = path_action(m.y, paths[pi]) * *lift;
        g.by.comps.push_back(std::move(c));
      }
      pc.right_vertices.push_back(i);
      pc.left_vertices.push_back(-1);
      parts.push_back(std::move(p));
      maps.push_back(std::move(g));
    }
  }
  for (int a = 0; a < r.left->n; ++a) {
    for (int s = 0; s < t.quot.x.dims[a]; ++s) {
      Vec e = zeros(t.quot.x.dims[a], 1).col(0);
      e(s) = Fp(1);
      auto lift = solve(t.proj.ax.comps[a], e);
      if (!lift) throw std::logic_error("proj_cover_triple: top not surjective");
      Triple p = left_projective_triple(r, a);
      TripleMap g;
      g.source = p;
      g.target = m;
      g.ax.source = p.x;
      g.ax.target = m.x;
      for (int b = 0; b < r.left->n; ++b) {
        auto paths = paths_between(*r.left, a, b);
        Mat c = zeros(m.x.dims[b], p.x.dims[b]);
        for (std::size_t pi = 0; pi < paths.size(); ++pi)
          c.col(static_cast<int>(pi)) = path_action(m.x, paths[pi]) * *lift;
        g.ax.comps.push_back(std::move(c));
      }
      // y-component forced by compatibility: by = f_M . T(ax)
      RepMap tax = tensor_map(r.bim, p.tx, m.tx, g.ax);
      g.by.source = p.y;
      g.by.target = m.y;
      for (int i = 0; i < r.h->n; ++i)
        g.by.comps.push_back(m.f.comps[i] * tax.comps[i]);
      pc.right_vertices.push_back(-1);
      pc.left_vertices.push_back(a);
      parts.push_back(std::move(p));
      maps.push_back(std::move(g));
    }
  }
  pc.sum = direct_sum_triples(r, parts);
  pc.map.source = pc.sum.rep;
  pc.map.target = m;
  pc.map.ax = zero_map(pc.sum.rep.x, m.x);
  pc.map.by = zero_map(pc.sum.rep.y, m.y);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    for (int a = 0; a < r.left->n; ++a)
      pc.map.ax.comps[a] +=
          maps[k].ax.comps[a] * pc.sum.proj[k].ax.comps[a];
    for (int i = 0; i < r.h->n; ++i)
      pc.map.by.comps[i] +=
          maps[k].by.comps[i] * pc.sum.proj[k].by.comps[i];
  }
  return pc;
}

bool is_indec_triple(const Triple& m) {
  if (m.is_zero()) return false;
  auto ends = hom_triples(m, m);
  int d = static_cast<int>(ends.size());
  Mat gram = zeros(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Fp tr(0);
      for (int a = 0; a < m.alg->left->n; ++a) {
        Mat p = ends[i].ax.comps[a] * ends[j].ax.comps[a];
        for (int k = 0; k < p.rows(); ++k) tr += p(k, k);
      }
      for (int v = 0; v < m.alg->h->n; ++v) {
        Mat p = ends[i].by.comps[v] * ends[j].by.comps[v];
        for (int k = 0; k < p.rows(); ++k) tr += p(k, k);
      }
      gram(i, j) = tr;
    }
  return rank(gram) == 1;
}

bool iso_triple(const Triple& m, const Triple& n) {
  if (m.x.dims != n.x.dims || m.y.dims != n.y.dims) return false;
  if (m.is_zero()) return true;
  return hom_dim(m, n) > 0 && hom_dim(n, m) > 0;
}

std::string render_triple(const Triple& m) {
  const Instance& r = *m.alg;
  struct Part {
    int num;
    bool primed;
    std::string text;
  };
  std::vector<std::string> layers;
  Triple cur = m;
  while (!cur.is_zero()) {
    QuotTriple t = top_triple(cur);
    std::vector<Part> parts;
    for (int i = 0; i < r.h->n; ++i)
      for (int s = 0; s < t.quot.y.dims[i]; ++s)
        parts.push_back({i, false, r.h->labels[i]});
    for (int a = 0; a < r.left->n; ++a)
      for (int s = 0; s < t.quot.x.dims[a]; ++s)
        parts.push_back({r.delta[a], true, r.h->labels[r.delta[a]] + "'"});
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
      return std::tie(a.num, a.primed) < std::tie(b.num, b.primed);
    });
    std::string layer;
    for (const auto& p : parts) layer += p.text;
    layers.push_back(layer);
    cur = radical_triple(cur).sub;
  }
  std::string out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) out += "/";
    out += layers[i];
  }
  return out.empty() ? "0" : out;
}

std::vector<Triple> injective_triples(const Instance& r) {
  const Instance& op = opposite_instance(r);
  std::vector<Triple> out;
  // dual of the opposite left projective at i = injective at right vertex i
  for (int i = 0; i < r.h->n; ++i)
    out.push_back(dual_triple(left_projective_triple(op, i)));
  for (int a = 0; a < r.left->n; ++a)
    out.push_back(dual_triple(projective_triple(op, a)));
  return out;
}

}  // namespace fundom

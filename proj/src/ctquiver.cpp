#include "fundom/ctquiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace fundom {

namespace {

void check_summands(const std::vector<Triple>& summands) {
  if (summands.empty())
    throw std::invalid_argument("end_algebra: no summands");
  for (const auto& t : summands) {
    if (t.alg != summands[0].alg)
      throw std::invalid_argument("end_algebra: mixed instances");
    if (!is_indec_triple(t))
      throw std::invalid_argument("end_algebra: summand not indecomposable");
  }
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (std::size_t j = i + 1; j < summands.size(); ++j)
      if (iso_triple(summands[i], summands[j]))
        throw std::invalid_argument("end_algebra: repeated summand");
}

// Coordinates of f in the chosen class basis of Hom(T_i, T_j), dropping the
// modded-out part.
Vec class_coords(const BasicAlgebra& e, int i, int j, const TripleMap& f) {
  Vec fv = flatten_triple_map(f);
  int hd = e.dim(i, j);
  int dd = static_cast<int>(e.dead[i][j].cols());
  Mat b(fv.rows(), hd + dd);
  for (int k = 0; k < hd; ++k) b.col(k) = flatten_triple_map(e.hom[i][j][k]);
  if (dd > 0) b.block(0, hd, fv.rows(), dd) = e.dead[i][j];
  Mat c = coords_in_basis(b, fv);
  Vec out(hd);
  for (int k = 0; k < hd; ++k) out(k) = c(k, 0);
  return out;
}

}  // namespace

BasicAlgebra end_algebra(std::vector<Triple> summands) {
  check_summands(summands);
  BasicAlgebra e;
  e.alg = summands[0].alg;
  e.summands = std::move(summands);
  int m = static_cast<int>(e.summands.size());
  for (const auto& t : e.summands) e.labels.push_back(render_triple(t));
  e.hom.resize(m);
  e.dead.resize(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      e.hom[i].push_back(hom_triples(e.summands[i], e.summands[j]));
      TripleMap probe = zero_triple_map(e.summands[i], e.summands[j]);
      e.dead[i].push_back(zeros(
          static_cast<int>(flatten_triple_map(probe).rows()), 0));
    }
  return e;
}

BasicAlgebra stable_end(std::vector<Triple> summands) {
  check_summands(summands);
  const Instance& r = *summands[0].alg;
  Triple w = i0_delta(r);
  for (const auto& t : summands)
    if (factors_through(identity_triple_map(t), w))
      throw std::invalid_argument("stable_end: summand lies in add I_0(Delta)");
  BasicAlgebra e;
  e.alg = &r;
  e.stable = true;
  e.summands = std::move(summands);
  int m = static_cast<int>(e.summands.size());
  for (const auto& t : e.summands) e.labels.push_back(render_triple(t));
  e.hom.resize(m);
  e.dead.resize(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto full = hom_triples(e.summands[i], e.summands[j]);
      auto gs = hom_triples(e.summands[i], w);
      auto hs = hom_triples(w, e.summands[j]);
      int flat_rows = static_cast<int>(flatten_triple_map(
          zero_triple_map(e.summands[i], e.summands[j])).rows());
      Mat comps = zeros(flat_rows, static_cast<int>(gs.size() * hs.size()));
      int c = 0;
      for (const auto& g : gs)
        for (const auto& h : hs)
          comps.col(c++) = flatten_triple_map(compose(h, g));
      Mat deadb = col_space_basis(comps);
      // greedy class representatives spanning Hom modulo the dead part
      std::vector<TripleMap> reps;
      Mat span = deadb;
      for (const auto& f : full) {
        Vec fv = flatten_triple_map(f);
        if (!in_col_span(span, fv)) {
          reps.push_back(f);
          span = hstack(span, fv);
        }
      }
      e.hom[i].push_back(std::move(reps));
      e.dead[i].push_back(std::move(deadb));
    }
  return e;
}

Quiver algebra_quiver(const BasicAlgebra& e) {
  int m = static_cast<int>(e.summands.size());
  Quiver q;
  q.n = m;
  q.labels = e.labels;
  // printed arrow i->j corresponds to an irreducible map T_j -> T_i
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      int d = e.dim(j, i);
      if (d == 0) continue;
      std::vector<Vec> comps;
      for (int k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        for (const auto& f : e.hom[j][k])
          for (const auto& g : e.hom[k][i])
            comps.push_back(class_coords(e, j, i, compose(g, f)));
      }
      int r2 = 0;
      if (!comps.empty()) {
        Mat b(d, static_cast<int>(comps.size()));
        for (std::size_t c = 0; c < comps.size(); ++c)
          b.col(static_cast<int>(c)) = comps[c];
        r2 = rank(b);
      }
      for (int a = 0; a < d - r2; ++a) q.arrows.emplace_back(i, j);
    }
  return q;
}

namespace {

// A finite-dimensional left module over a BasicAlgebra: a space per summand
// vertex and the action matrix of every chosen Hom basis element.
struct EMod {
  std::vector<int> dims;
  std::vector<std::vector<std::vector<Mat>>> act;  // act[i][j][b]: M_i -> M_j
};

EMod regular_column(const BasicAlgebra& e, int v) {
  int m = static_cast<int>(e.summands.size());
  EMod p;
  for (int j = 0; j < m; ++j) p.dims.push_back(e.dim(v, j));
  p.act.resize(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Mat> mats;
      for (int b = 0; b < e.dim(i, j); ++b) {
        Mat c = zeros(p.dims[j], p.dims[i]);
        for (int a = 0; a < p.dims[i]; ++a)
          c.col(a) = class_coords(
              e, v, j, compose(e.hom[i][j][b], e.hom[v][i][a]));
        mats.push_back(std::move(c));
      }
      p.act[i].push_back(std::move(mats));
    }
  return p;
}

struct ECover {
  std::vector<int> mults;  // per vertex
  EMod p;
  std::vector<Mat> comps;  // p_j -> m_j
};

ECover e_cover(const BasicAlgebra& e, const EMod& m) {
  int nv = static_cast<int>(e.summands.size());
  ECover out;
  out.mults.assign(nv, 0);
  // radical span: images of all basis elements between distinct vertices
  // (each local End is one-dimensional on the covered fixtures)
  std::vector<Mat> rad;
  for (int j = 0; j < nv; ++j) {
    Mat s = zeros(m.dims[j], 0);
    for (int i = 0; i < nv; ++i) {
      if (i == j) continue;
      for (const auto& a : m.act[i][j]) s = hstack(s, a);
    }
    rad.push_back(std::move(s));
  }
  // generator lifts: a complement basis of the radical at each vertex
  std::vector<std::vector<Vec>> gens(nv);
  for (int j = 0; j < nv; ++j) {
    Mat span = col_space_basis(rad[j]);
    for (int k = 0; k < m.dims[j]; ++k) {
      Vec u = zeros(m.dims[j], 1).col(0);
      u(k) = Fp(1);
      if (!in_col_span(span, u)) {
        gens[j].push_back(u);
        span = hstack(span, u);
      }
    }
    out.mults[j] = static_cast<int>(gens[j].size());
  }
  // assemble P = (+) regular columns and the cover map
  std::vector<EMod> cols;
  std::vector<int> colv;
  for (int v = 0; v < nv; ++v)
    for (int g = 0; g < out.mults[v]; ++g) {
      cols.push_back(regular_column(e, v));
      colv.push_back(v);
    }
  out.p.dims.assign(nv, 0);
  for (const auto& c : cols)
    for (int j = 0; j < nv; ++j) out.p.dims[j] += c.dims[j];
  out.p.act.resize(nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      std::vector<Mat> mats;
      for (int b = 0; b < e.dim(i, j); ++b) {
        Mat blk = zeros(out.p.dims[j], out.p.dims[i]);
        int ri = 0, rj = 0;
        for (const auto& c : cols) {
          blk.block(rj, ri, c.dims[j], c.dims[i]) = c.act[i][j][b];
          ri += c.dims[i];
          rj += c.dims[j];
        }
        mats.push_back(std::move(blk));
      }
      out.p.act[i].push_back(std::move(mats));
    }
  for (int j = 0; j < nv; ++j) {
    Mat comp = zeros(m.dims[j], out.p.dims[j]);
    int off = 0;
    int gi = 0;
    for (int v = 0; v < nv; ++v)
      for (int g = 0; g < out.mults[v]; ++g) {
        const Vec& lift = gens[v][g];
        for (int b = 0; b < e.dim(v, j); ++b)
          comp.col(off + b) = m.act[v][j][b] * lift;
        off += e.dim(v, j);
        ++gi;
      }
    out.comps.push_back(std::move(comp));
  }
  return out;
}

EMod e_kernel(const BasicAlgebra& e, const EMod& p,
              const std::vector<Mat>& comps) {
  int nv = static_cast<int>(e.summands.size());
  std::vector<Mat> kb;
  EMod k;
  for (int j = 0; j < nv; ++j) {
    kb.push_back(kernel_basis(comps[j]));
    k.dims.push_back(static_cast<int>(kb[j].cols()));
  }
  k.act.resize(nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      std::vector<Mat> mats;
      for (int b = 0; b < e.dim(i, j); ++b)
        mats.push_back(coords_in_basis(kb[j], p.act[i][j][b] * kb[i]));
      k.act[i].push_back(std::move(mats));
    }
  return k;
}

int emod_total(const EMod& m) {
  int t = 0;
  for (int d : m.dims) t += d;
  return t;
}

// Multiplicity vectors of the minimal projective resolution of the simple
// at vertex v, one per homological degree, until the resolution stops.
std::vector<std::vector<int>> resolve_simple(const BasicAlgebra& e, int v,
                                             int cap) {
  int nv = static_cast<int>(e.summands.size());
  EMod s;
  s.dims.assign(nv, 0);
  s.dims[v] = 1;
  s.act.resize(nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      std::vector<Mat> mats;
      for (int b = 0; b < e.dim(i, j); ++b)
        mats.push_back(zeros(s.dims[j], s.dims[i]));
      s.act[i].push_back(std::move(mats));
    }
  // the local End(T_v) basis element acts by the same scalar as on the top
  // of P_v (basis^2 = c * basis)
  s.act[v][v][0] = class_coords(
      e, v, v, compose(e.hom[v][v][0], e.hom[v][v][0]));
  std::vector<std::vector<int>> out;
  EMod cur = std::move(s);
  for (int step = 0; step <= cap; ++step) {
    if (emod_total(cur) == 0) return out;
    ECover c = e_cover(e, cur);
    out.push_back(c.mults);
    cur = e_kernel(e, c.p, c.comps);
  }
  throw std::logic_error("resolve_simple: resolution does not terminate");
}

}  // namespace

int gldim_basic(const BasicAlgebra& e) {
  int g = 0;
  for (std::size_t v = 0; v < e.summands.size(); ++v)
    g = std::max(g, static_cast<int>(
                        resolve_simple(e, static_cast<int>(v), 8).size()) -
                        1);
  return g;
}

Eigen::MatrixXi min_relation_counts(const BasicAlgebra& e) {
  if (e.stable)
    throw std::invalid_argument("min_relation_counts: needs the plain End");
  int m = static_cast<int>(e.summands.size());
  Eigen::MatrixXi rel = Eigen::MatrixXi::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    auto res = resolve_simple(e, i, 8);
    if (res.size() > 3)
      throw std::logic_error(
          "min_relation_counts: gldim of the endomorphism algebra exceeds 2");
    // #relations from T_i to T_j = multiplicity of the j-th projective in
    // homological degree 2 of the resolution of the simple at i
    if (res.size() == 3)
      for (int j = 0; j < m; ++j) rel(i, j) = res[2][j];
  }
  return rel;
}

Quiver cluster_tilted_quiver(const ARQuiver& ar, const FundamentalDomain& fd,
                             const ClusterTiltObj& t) {
  if (ar.alg->kind != Instance::Kind::Gamma)
    throw std::invalid_argument("cluster_tilted_quiver: requires Gamma");
  const Instance& r = *ar.alg;
  std::vector<Triple> summands;
  std::vector<std::string> labels;
  for (int p : t.objects) {
    if (p < 0 || p >= static_cast<int>(fd.nodes.size()))
      throw std::invalid_argument("cluster_tilted_quiver: bad FD position");
    summands.push_back(ar.nodes[fd.nodes[p]].rep);
    labels.push_back(ar.nodes[fd.nodes[p]].name);
  }
  int m = static_cast<int>(summands.size());

  BasicAlgebra b = stable_end(summands);
  Quiver qb = algebra_quiver(b);

  std::vector<Triple> with_pi = summands;
  auto injs = injective_triples(r);
  for (int s : sinks(*r.h)) with_pi.push_back(injs[s]);
  BasicAlgebra e = end_algebra(std::move(with_pi));
  if (gldim_basic(e) > 2)
    throw std::logic_error(
        "cluster_tilted_quiver: gldim End(T + I_0(Delta)) exceeds 2");
  Eigen::MatrixXi rel = min_relation_counts(e);

  Quiver qc;
  qc.n = m;
  qc.labels = labels;
  Eigen::MatrixXi stable_arrows = Eigen::MatrixXi::Zero(m, m);
  for (auto [u, v] : qb.arrows) ++stable_arrows(u, v);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (stable_arrows(i, j) > 0 && rel(i, j) > 0)
        throw std::logic_error(
            "cluster_tilted_quiver: stable arrows and relations overlap");
      for (int a = 0; a < stable_arrows(i, j) + rel(i, j); ++a)
        qc.arrows.emplace_back(i, j);
    }
  return qc;
}

int cluster_hom_dim(const Quiver& h, int xpos, int ypos) {
  auto inds = indecomposables_h(h);
  int ni = static_cast<int>(inds.size());
  int total = ni + h.n;
  if (xpos < 0 || xpos >= total || ypos < 0 || ypos >= total)
    throw std::invalid_argument("cluster_hom_dim: position outside the FD");
  bool xs = xpos >= ni, ys = ypos >= ni;
  if (xs && ys)  // Hom(P[1], Q[1]) = Hom(P, Q)
    return hom_dim(projective(h, xpos - ni), projective(h, ypos - ni));
  if (xs)  // Hom(P[1], N) = Ext^1(nu P, N)
    return ext1_dim(injective(h, xpos - ni), inds[ypos].rep);
  if (ys)  // Hom(M, P[1]) = Ext^1(M, P)
    return ext1_dim(inds[xpos].rep, projective(h, ypos - ni));
  const Rep& mm = inds[xpos].rep;
  const Rep& nn = inds[ypos].rep;
  int d = hom_dim(mm, nn);
  Rep tm = tau_h(mm);
  if (!tm.is_zero()) d += ext1_dim(tm, nn);
  return d;
}

bool verify_mutation_class(const Quiver& qc, const Quiver& q, std::size_t cap) {
  if (qc.n != q.n) return false;
  ExchangeMatrix b = exchange_matrix(qc);
  for (const auto& m : mutation_class(q, cap))
    if (same_up_to_iso(b, m)) return true;
  return false;
}

}  // namespace fundom

#include "fundom/artheory.hpp"

#include <map>
#include <stdexcept>

namespace fundom {

namespace {

constexpr int kResolutionCap = 16;

}  // namespace

TriplePresentation min_presentation_triple(const Triple& m) {
  TriplePresentation mp;
  mp.p0 = proj_cover_triple(m);
  SubTriple k = kernel_triple(mp.p0.map);
  mp.p1 = proj_cover_triple(k.sub);
  mp.f = compose(k.inc, mp.p1.map);
  return mp;
}

int pd_triple(const Triple& m) {
  Triple cur = m;
  for (int d = 0; d <= kResolutionCap; ++d) {
    if (cur.is_zero()) return d == 0 ? 0 : d - 1;
    TripleCover pc = proj_cover_triple(cur);
    SubTriple k = kernel_triple(pc.map);
    if (k.sub.is_zero()) return d;
    cur = k.sub;
  }
  throw std::logic_error("pd_triple: resolution does not terminate");
}

int gldim_instance(const Instance& r) {
  int g = 0;
  for (int i = 0; i < r.h->n; ++i)
    g = std::max(g, pd_triple(embed_h(r, simple(*r.h, i))));
  for (int a = 0; a < r.left->n; ++a) {
    Rep x = simple(*r.left, a);
    TensorResult tx = tensor(r.bim, x);
    std::vector<Mat> f;
    for (int i = 0; i < r.h->n; ++i) f.push_back(zeros(0, tx.rep.dims[i]));
    g = std::max(g, pd_triple(make_triple(r, std::move(x), zero_rep(*r.h),
                                          std::move(f))));
  }
  return g;
}

namespace {

// Right multiplication by the left-quiver path s: a ~> a' as a map of left
// projective triples Pleft_{a'} -> Pleft_a.
TripleMap left_right_mult(const Instance& r, const Path& s) {
  Triple src = left_projective_triple(r, s.to);
  Triple tgt = left_projective_triple(r, s.from);
  RepMap ax = right_mult(*r.left, s);
  RepMap tax = tensor_map(r.bim, src.tx, tgt.tx, ax);
  RepMap by;
  by.source = src.y;
  by.target = tgt.y;
  by.comps = tax.comps;  // f of a left projective is the identity
  return make_triple_map(std::move(src), std::move(tgt), std::move(ax),
                         std::move(by));
}

// Right multiplication by the bimodule element mu (basis index into
// col[a]_i) as a map of projective triples (0, P_i, 0) -> Pleft_a.
TripleMap bimodule_right_mult(const Instance& r, int i, int a, int mu) {
  Triple src = projective_triple(r, i);
  Triple tgt = left_projective_triple(r, a);
  int c = r.bim.col[a].dims[i];
  // generator of P_i goes to (mu (x) e_a) inside Y = M (x) P^A_a
  Vec amb = zeros(static_cast<int>(tgt.tx.pi[i].cols()), 1).col(0);
  amb(tgt.tx.offset[a][i] + 0 * c + mu) = Fp(1);
  Vec v0 = tgt.tx.pi[i] * amb;
  RepMap by;
  by.source = src.y;
  by.target = tgt.y;
  for (int j = 0; j < r.h->n; ++j) {
    auto paths = paths_between(*r.h, i, j);
    Mat comp = zeros(tgt.y.dims[j], src.y.dims[j]);
    for (std::size_t p = 0; p < paths.size(); ++p)
      comp.col(static_cast<int>(p)) = path_action(tgt.y, paths[p]) * v0;
    by.comps.push_back(std::move(comp));
  }
  return make_triple_map(src, tgt, zero_map(src.x, tgt.x), std::move(by));
}

Path single_arrow_path(const Quiver& q, int e) {
  Path p;
  p.from = q.arrows[e].first;
  p.to = q.arrows[e].second;
  p.arrows = {e};
  return p;
}

}  // namespace

HomRResult hom_r(const Triple& n) {
  const Instance& r = *n.alg;
  const Instance& rop = opposite_instance(r);
  HomRResult res;
  for (int i = 0; i < r.h->n; ++i)
    res.xbasis.push_back(hom_triples(n, projective_triple(r, i)));
  for (int a = 0; a < r.left->n; ++a)
    res.ybasis.push_back(hom_triples(n, left_projective_triple(r, a)));

  // X' over rop.left = (r.h)^op: the arrow u -> v of r.h acts by
  // postcomposition with right multiplication P_v -> P_u.
  Rep zx;
  zx.q = rop.left;
  for (int i = 0; i < r.h->n; ++i)
    zx.dims.push_back(static_cast<int>(res.xbasis[i].size()));
  for (std::size_t e = 0; e < r.h->arrows.size(); ++e) {
    auto [u, v] = r.h->arrows[e];
    TripleMap rho = embed_h_map(r, right_mult(*r.h, single_arrow_path(*r.h, e)));
    Mat comp = zeros(zx.dims[u], zx.dims[v]);
    for (int j = 0; j < zx.dims[v]; ++j)
      comp.col(j) = map_coords(res.xbasis[u], compose(rho, res.xbasis[v][j]));
    zx.mats.push_back(std::move(comp));
  }

  // Y' over rop.h = (r.left)^op, via right multiplication by left arrows.
  Rep zy;
  zy.q = rop.h;
  for (int a = 0; a < r.left->n; ++a)
    zy.dims.push_back(static_cast<int>(res.ybasis[a].size()));
  for (std::size_t e = 0; e < r.left->arrows.size(); ++e) {
    auto [a, ap] = r.left->arrows[e];
    TripleMap rho = left_right_mult(r, single_arrow_path(*r.left, e));
    Mat comp = zeros(zy.dims[a], zy.dims[ap]);
    for (int j = 0; j < zy.dims[ap]; ++j)
      comp.col(j) = map_coords(res.ybasis[a], compose(rho, res.ybasis[ap][j]));
    zy.mats.push_back(std::move(comp));
  }

  // f': mu (x) phi |-> rho_mu . phi
  TensorResult txz = tensor(rop.bim, zx);
  std::vector<Mat> fcomps;
  for (int a = 0; a < rop.h->n; ++a) {
    Mat amb = zeros(zy.dims[a], static_cast<int>(txz.pi[a].cols()));
    for (int i = 0; i < r.h->n; ++i) {
      int c = r.bim.col[a].dims[i];
      if (c == 0) continue;
      for (int mu = 0; mu < c; ++mu) {
        TripleMap rho = bimodule_right_mult(r, i, a, mu);
        for (int eta = 0; eta < zx.dims[i]; ++eta)
          amb.col(txz.offset[i][a] + eta * c + mu) =
              map_coords(res.ybasis[a], compose(rho, res.xbasis[i][eta]));
      }
    }
    fcomps.push_back(amb * txz.section[a]);
  }
  res.z = make_triple(rop, std::move(zx), std::move(zy), std::move(fcomps));
  return res;
}

namespace {

// Hom(g, R): HomR(target of g) -> HomR(source of g), phi |-> phi . g.
TripleMap hom_r_map(const TripleMap& g, const HomRResult& ztarget,
                    const HomRResult& zsource) {
  const Instance& r = *g.source.alg;
  RepMap ax;
  ax.source = ztarget.z.x;
  ax.target = zsource.z.x;
  for (int i = 0; i < r.h->n; ++i) {
    Mat comp = zeros(ax.target.dims[i], ax.source.dims[i]);
    for (int j = 0; j < ax.source.dims[i]; ++j)
      comp.col(j) = map_coords(zsource.xbasis[i], compose(ztarget.xbasis[i][j], g));
    ax.comps.push_back(std::move(comp));
  }
  RepMap by;
  by.source = ztarget.z.y;
  by.target = zsource.z.y;
  for (int a = 0; a < r.left->n; ++a) {
    Mat comp = zeros(by.target.dims[a], by.source.dims[a]);
    for (int j = 0; j < by.source.dims[a]; ++j)
      comp.col(j) = map_coords(zsource.ybasis[a], compose(ztarget.ybasis[a][j], g));
    by.comps.push_back(std::move(comp));
  }
  return make_triple_map(ztarget.z, zsource.z, std::move(ax), std::move(by));
}

}  // namespace

Triple transpose_triple(const Triple& m) {
  TriplePresentation mp = min_presentation_triple(m);
  HomRResult z0 = hom_r(mp.p0.sum.rep);
  HomRResult z1 = hom_r(mp.p1.sum.rep);
  TripleMap g = hom_r_map(mp.f, z0, z1);
  return cokernel_triple(g).quot;
}

Triple tau_triple(const Triple& m) {
  if (m.is_zero()) return zero_triple(*m.alg);
  if (!is_indec_triple(m))
    throw std::invalid_argument("tau_triple: input must be indecomposable");
  return dual_triple(transpose_triple(m));
}

Triple tau_inv_triple(const Triple& m) {
  if (m.is_zero()) return zero_triple(*m.alg);
  if (!is_indec_triple(m))
    throw std::invalid_argument("tau_inv_triple: input must be indecomposable");
  return transpose_triple(dual_triple(m));
}

int ext_dim(const Triple& m, const Triple& n, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("ext_dim: k must be 1..3");
  // minimal projective resolution ... P_2 -> P_1 -> P_0 -> M
  std::vector<Triple> terms;
  std::vector<TripleMap> d;  // d[j]: terms[j+1] -> terms[j]
  TripleCover c0 = proj_cover_triple(m);
  terms.push_back(c0.sum.rep);
  SubTriple ker = kernel_triple(c0.map);
  for (int j = 1; j <= k + 1; ++j) {
    TripleCover cj = proj_cover_triple(ker.sub);
    terms.push_back(cj.sum.rep);
    d.push_back(compose(ker.inc, cj.map));
    ker = kernel_triple(cj.map);
  }
  // dim of homology at Hom(P_k, N)
  auto precomp_rank = [&](int j) {  // rank of Hom(P_{j-1},N) -> Hom(P_j,N)
    auto hsrc = hom_triples(terms[j - 1], n);
    auto htgt = hom_triples(terms[j], n);
    if (hsrc.empty() || htgt.empty()) return 0;
    Mat b(flatten_triple_map(compose(hsrc[0], d[j - 1])).rows(),
          static_cast<int>(hsrc.size()));
    for (std::size_t c = 0; c < hsrc.size(); ++c)
      b.col(static_cast<int>(c)) = flatten_triple_map(compose(hsrc[c], d[j - 1]));
    return rank(b);
  };
  int hk = hom_dim(terms[k], n);
  return hk - precomp_rank(k) - precomp_rank(k + 1);
}

int ARQuiver::find(const Triple& m) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (iso_triple(nodes[i].rep, m)) return static_cast<int>(i);
  return -1;
}

ARQuiver ar_quiver(const Instance& r) {
  if (!is_dynkin(*r.h))
    throw std::domain_error("ar_quiver: underlying quiver must be Dynkin");
  ARQuiver ar;
  ar.alg = &r;
  auto projs = projective_triples(r);
  std::map<std::pair<int, int>, int> idx;
  for (std::size_t o = 0; o < projs.size(); ++o) {
    Triple cur = projs[o];
    for (int p = 0; !cur.is_zero(); ++p) {
      if (p > 1000) throw std::logic_error("ar_quiver: tau^- orbit does not end");
      idx[{static_cast<int>(o), p}] = static_cast<int>(ar.nodes.size());
      ar.nodes.push_back({cur, static_cast<int>(o), p, render_triple(cur)});
      cur = tau_inv_triple(cur);
    }
  }
  int nn = static_cast<int>(ar.nodes.size());
  ar.tau_of.assign(nn, -1);
  ar.tau_inv_of.assign(nn, -1);
  for (const auto& [key, i] : idx) {
    auto it = idx.find({key.first, key.second + 1});
    if (it != idx.end()) {
      ar.tau_inv_of[i] = it->second;
      ar.tau_of[it->second] = i;
    }
  }
  for (int i = 0; i < nn; ++i) ar.pd.push_back(pd_triple(ar.nodes[i].rep));

  // hom bases between all nodes, then arrows = dim rad / rad^2
  std::vector<std::vector<std::vector<TripleMap>>> hom(nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      hom[i].push_back(i == j ? std::vector<TripleMap>{}
                              : hom_triples(ar.nodes[i].rep, ar.nodes[j].rep));
  ar.arrows = Eigen::MatrixXi::Zero(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      if (i == j || hom[i][j].empty()) continue;
      std::vector<Vec> comps;
      for (int z = 0; z < nn; ++z) {
        if (z == i || z == j) continue;
        for (const auto& f : hom[i][z])
          for (const auto& g : hom[z][j]) comps.push_back(flatten_triple_map(compose(g, f)));
      }
      int r2 = 0;
      if (!comps.empty()) {
        Mat b(comps[0].rows(), static_cast<int>(comps.size()));
        for (std::size_t c = 0; c < comps.size(); ++c)
          b.col(static_cast<int>(c)) = comps[c];
        r2 = rank(b);
      }
      ar.arrows(i, j) = static_cast<int>(hom[i][j].size()) - r2;
    }
  return ar;
}

FundamentalDomain fundamental_domain(const Instance& r, const ARQuiver& ar) {
  FundamentalDomain fd;
  auto inds = indecomposables_h(*r.h);
  for (std::size_t k = 0; k < inds.size(); ++k) {
    int node = ar.find(embed_h(r, inds[k].rep));
    if (node < 0) throw std::logic_error("fundamental_domain: ind H not found");
    fd.nodes.push_back(node);
    fd.is_shift.push_back(false);
    fd.h_index.push_back(static_cast<int>(k));
  }
  for (int i = 0; i < r.h->n; ++i) {
    Triple t = tau_inv_triple(embed_h(r, injective(*r.h, i)));
    int node = ar.find(t);
    if (node < 0) throw std::logic_error("fundamental_domain: shift not found");
    fd.nodes.push_back(node);
    fd.is_shift.push_back(true);
    fd.h_index.push_back(i);
  }
  return fd;
}

std::vector<int> left_part(const ARQuiver& ar) {
  int nn = static_cast<int>(ar.nodes.size());
  std::vector<std::vector<bool>> reach(nn, std::vector<bool>(nn, false));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      reach[i][j] = (i != j && hom_dim(ar.nodes[i].rep, ar.nodes[j].rep) > 0);
  for (int z = 0; z < nn; ++z)
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        if (reach[i][z] && reach[z][j]) reach[i][j] = true;
  std::vector<int> out;
  for (int i = 0; i < nn; ++i) {
    bool ok = ar.pd[i] <= 1;
    for (int j = 0; ok && j < nn; ++j)
      if (reach[j][i] && ar.pd[j] > 1) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

Triple i0_delta(const Instance& r) {
  auto injs = injective_triples(r);
  std::vector<Triple> parts;
  for (int s : sinks(*r.h)) parts.push_back(injs[s]);
  return direct_sum_triples(r, std::move(parts)).rep;
}

bool factors_through(const TripleMap& f, const Triple& w) {
  auto gs = hom_triples(f.source, w);
  auto hs = hom_triples(w, f.target);
  Vec fv = flatten_triple_map(f);
  if (fv.rows() == 0) return true;
  Mat b = zeros(static_cast<int>(fv.rows()),
                static_cast<int>(gs.size() * hs.size()));
  int c = 0;
  for (const auto& g : gs)
    for (const auto& h : hs) b.col(c++) = flatten_triple_map(compose(h, g));
  return in_col_span(b, fv);
}

bool factors_through_proj_inj(const TripleMap& f) {
  return factors_through(f, i0_delta(*f.source.alg));
}

}  // namespace fundom

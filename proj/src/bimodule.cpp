#include "fundom/bimodule.hpp"

#include <map>
#include <mutex>

namespace fundom {

Bimodule dh_bimodule(const Quiver& q) {
  const Quiver& qop = opposite_cached(q);
  Bimodule m;
  m.qa = &q;
  m.qb = &q;
  for (int a = 0; a < q.n; ++a) m.col.push_back(injective(q, a));
  for (std::size_t e = 0; e < q.arrows.size(); ++e) {
    // Right action of alpha: a -> a' on DH is the dual of left
    // multiplication by alpha on H, i.e. the dual of right_mult over the
    // opposite quiver.
    Path s;
    s.from = q.arrows[e].second;  // a', as an opposite-quiver arrow a' -> a
    s.to = q.arrows[e].first;
    s.arrows = {static_cast<int>(e)};
    m.right_act.push_back(dual_map(right_mult(qop, s)));
  }
  return m;
}

TensorResult tensor(const Bimodule& m, const Rep& x) {
  const Quiver& qa = *m.qa;
  const Quiver& qb = *m.qb;
  if (x.q != &qa) throw std::invalid_argument("tensor: module not over Q_A");

  TensorResult t;
  Rep big = zero_rep(qb);
  t.offset.assign(qa.n, std::vector<int>(qb.n, 0));
  for (int a = 0; a < qa.n; ++a)
    for (int b = 0; b < qb.n; ++b) {
      t.offset[a][b] = big.dims[b];
      big.dims[b] += m.col[a].dims[b] * x.dims[a];
    }
  for (std::size_t e = 0; e < qb.arrows.size(); ++e) {
    auto [u, v] = qb.arrows[e];
    Mat mat = zeros(big.dims[v], big.dims[u]);
    for (int a = 0; a < qa.n; ++a) {
      int cu = m.col[a].dims[u], cv = m.col[a].dims[v];
      for (int xi = 0; xi < x.dims[a]; ++xi)
        mat.block(t.offset[a][v] + xi * cv, t.offset[a][u] + xi * cu, cv, cu) =
            m.col[a].mats[e];
    }
    big.mats[e] = std::move(mat);
  }

  // Relations (m alpha) (x) y - m (x) (alpha y), per qb-vertex.
  std::vector<Mat> rel;
  for (int b = 0; b < qb.n; ++b) {
    int nrel = 0;
    for (std::size_t e = 0; e < qa.arrows.size(); ++e) {
      auto [a, ap] = qa.arrows[e];
      nrel += m.col[ap].dims[b] * x.dims[a];
    }
    Mat r = zeros(big.dims[b], nrel);
    int c = 0;
    for (std::size_t e = 0; e < qa.arrows.size(); ++e) {
      auto [a, ap] = qa.arrows[e];
      const Mat& ra = m.right_act[e].comps[b];  // col[ap]_b -> col[a]_b
      const Mat& xa = x.mats[e];                // X_a -> X_ap
      int ca = m.col[a].dims[b], cap = m.col[ap].dims[b];
      for (int mi = 0; mi < cap; ++mi)
        for (int xi = 0; xi < x.dims[a]; ++xi) {
          for (int i = 0; i < ca; ++i)
            r(t.offset[a][b] + xi * ca + i, c) += ra(i, mi);
          for (int xj = 0; xj < x.dims[ap]; ++xj)
            r(t.offset[ap][b] + xj * cap + mi, c) -= xa(xj, xi);
          ++c;
        }
    }
    rel.push_back(std::move(r));
  }

  QuotientData qd = quotient_with_section(big, rel);
  t.rep = qd.proj.target;
  t.pi = qd.proj.comps;
  t.section = std::move(qd.section);
  return t;
}

RepMap tensor_map(const Bimodule& m, const TensorResult& tx,
                  const TensorResult& txp, const RepMap& f) {
  const Quiver& qa = *m.qa;
  const Quiver& qb = *m.qb;
  RepMap g;
  g.source = tx.rep;
  g.target = txp.rep;
  for (int b = 0; b < qb.n; ++b) {
    Mat amb = zeros(static_cast<int>(txp.pi[b].cols()),
                    static_cast<int>(tx.pi[b].cols()));
    for (int a = 0; a < qa.n; ++a) {
      int c = m.col[a].dims[b];
      for (int xo = 0; xo < f.target.dims[a]; ++xo)
        for (int xi = 0; xi < f.source.dims[a]; ++xi) {
          Fp coef = f.comps[a](xo, xi);
          if (coef.is_zero()) continue;
          for (int i = 0; i < c; ++i)
            amb(txp.offset[a][b] + xo * c + i, tx.offset[a][b] + xi * c + i) += coef;
        }
    }
    g.comps.push_back(txp.pi[b] * amb * tx.section[b]);
  }
  return g;
}

Rep nakayama(const Rep& m) {
  static std::mutex mu;
  static std::map<const Quiver*, Bimodule> cache;
  const Bimodule* dh;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(m.q);
    if (it == cache.end()) it = cache.emplace(m.q, dh_bimodule(*m.q)).first;
    dh = &it->second;
  }
  return tensor(*dh, m).rep;
}

}  // namespace fundom

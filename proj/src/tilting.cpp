#include "fundom/tilting.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace fundom {

namespace {

// Candidate vertices (pd <= 1) and the full pairwise Ext^1 vanishing table,
// computed from one stored presentation per candidate (pd <= 1 means the
// resolution is 0 -> P1 -> P0 -> M -> 0).
struct Compat {
  std::vector<int> verts;               // ARQuiver node indices
  std::vector<std::vector<bool>> ok;    // ok[i][j]: Ext^1(v_i, v_j) = 0
};

Compat compat_table(const ARQuiver& ar) {
  Compat c;
  for (std::size_t i = 0; i < ar.nodes.size(); ++i)
    if (ar.pd[i] <= 1) c.verts.push_back(static_cast<int>(i));
  int m = static_cast<int>(c.verts.size());
  std::vector<TriplePresentation> pres;
  for (int i = 0; i < m; ++i)
    pres.push_back(min_presentation_triple(ar.nodes[c.verts[i]].rep));
  c.ok.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Triple& n = ar.nodes[c.verts[j]].rep;
      auto h1 = hom_triples(pres[i].p1.sum.rep, n);
      int ext1 = static_cast<int>(h1.size());
      if (ext1 > 0) {
        auto h0 = hom_triples(pres[i].p0.sum.rep, n);
        if (!h0.empty()) {
          Mat b(flatten_triple_map(compose(h0[0], pres[i].f)).rows(),
                static_cast<int>(h0.size()));
          for (std::size_t k = 0; k < h0.size(); ++k)
            b.col(static_cast<int>(k)) = flatten_triple_map(compose(h0[k], pres[i].f));
          ext1 -= rank(b);
        }
      }
      c.ok[i][j] = (ext1 == 0);
    }
  return c;
}

int instance_rank(const ARQuiver& ar) {
  return ar.alg->h->n + ar.alg->left->n;
}

void bron_kerbosch(const Compat& c, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, int want,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    if (static_cast<int>(r.size()) == want) out.push_back(r);
    return;
  }
  std::vector<int> pcopy = p;
  for (int v : pcopy) {
    r.push_back(v);
    std::vector<int> p2, x2;
    for (int u : p)
      if (u != v && c.ok[u][v] && c.ok[v][u]) p2.push_back(u);
    for (int u : x)
      if (c.ok[u][v] && c.ok[v][u]) x2.push_back(u);
    bron_kerbosch(c, r, std::move(p2), std::move(x2), want, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<TiltingSet> tilting_modules(const ARQuiver& ar) {
  Compat c = compat_table(ar);
  std::vector<int> p;
  for (std::size_t i = 0; i < c.verts.size(); ++i)
    if (c.ok[i][i]) p.push_back(static_cast<int>(i));
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  bron_kerbosch(c, r, std::move(p), {}, instance_rank(ar), cliques);
  std::vector<TiltingSet> out;
  for (const auto& cl : cliques) {
    TiltingSet t;
    for (int i : cl) t.nodes.push_back(c.verts[i]);
    std::sort(t.nodes.begin(), t.nodes.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TiltingSet> tilting_modules_bruteforce(const ARQuiver& ar) {
  Compat c = compat_table(ar);
  int m = static_cast<int>(c.verts.size());
  int want = instance_rank(ar);
  std::vector<TiltingSet> out;
  std::vector<int> pick;
  // enumerate all subsets of size `want` in lexicographic order
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == want) {
      for (int i : pick)
        for (int j : pick)
          if (!c.ok[i][j]) return;
      TiltingSet t;
      for (int i : pick) t.nodes.push_back(c.verts[i]);
      out.push_back(std::move(t));
      return;
    }
    for (int v = from; v < m; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> proj_injective_nodes(const ARQuiver& ar) {
  const Instance& r = *ar.alg;
  std::vector<int> out;
  auto projs = projective_triples(r);
  auto injs = injective_triples(r);
  for (std::size_t k = 0; k < ar.nodes.size(); ++k) {
    bool p = false, i = false;
    for (const auto& t : projs) p = p || iso_triple(ar.nodes[k].rep, t);
    for (const auto& t : injs) i = i || iso_triple(ar.nodes[k].rep, t);
    if (p && i) out.push_back(static_cast<int>(k));
  }
  return out;
}

namespace {

void require_gamma(const ARQuiver& ar, const char* who) {
  if (ar.alg->kind != Instance::Kind::Gamma)
    throw std::invalid_argument(std::string(who) + ": requires a Gamma instance");
}

}  // namespace

TiltingSet theta(const ARQuiver& ar, const FundamentalDomain& fd,
                 const ClusterTiltObj& t) {
  require_gamma(ar, "theta");
  TiltingSet s;
  for (int p : t.objects) {
    if (p < 0 || p >= static_cast<int>(fd.nodes.size()))
      throw std::invalid_argument("theta: summand outside the fundamental domain");
    s.nodes.push_back(fd.nodes[p]);
  }
  for (int n : proj_injective_nodes(ar)) s.nodes.push_back(n);
  std::sort(s.nodes.begin(), s.nodes.end());
  s.nodes.erase(std::unique(s.nodes.begin(), s.nodes.end()), s.nodes.end());
  return s;
}

ClusterTiltObj theta_inv(const ARQuiver& ar, const FundamentalDomain& fd,
                         const TiltingSet& s) {
  require_gamma(ar, "theta_inv");
  std::vector<int> pi = proj_injective_nodes(ar);
  for (int n : pi)
    if (std::find(s.nodes.begin(), s.nodes.end(), n) == s.nodes.end())
      throw std::logic_error(
          "theta_inv: tilting module misses a projective-injective summand");
  ClusterTiltObj t;
  for (int n : s.nodes) {
    if (std::find(pi.begin(), pi.end(), n) != pi.end()) continue;
    auto it = std::find(fd.nodes.begin(), fd.nodes.end(), n);
    if (it == fd.nodes.end())
      throw std::logic_error("theta_inv: summand outside the fundamental domain");
    t.objects.push_back(static_cast<int>(it - fd.nodes.begin()));
  }
  std::sort(t.objects.begin(), t.objects.end());
  return t;
}

std::vector<ClusterTiltObj> cluster_tilting_objects(const ARQuiver& ar,
                                                    const FundamentalDomain& fd) {
  require_gamma(ar, "cluster_tilting_objects");
  std::vector<ClusterTiltObj> out;
  for (const auto& s : tilting_modules(ar)) out.push_back(theta_inv(ar, fd, s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClusterTiltObj> cluster_tilting_oracle(const Quiver& h) {
  auto inds = indecomposables_h(h);
  int ni = static_cast<int>(inds.size());
  int total = ni + h.n;
  std::vector<std::vector<bool>> ok(total, std::vector<bool>(total, true));
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < ni; ++j)
      ok[i][j] = ext1_dim(inds[i].rep, inds[j].rep) == 0 &&
                 ext1_dim(inds[j].rep, inds[i].rep) == 0;
  for (int i = 0; i < ni; ++i)
    for (int v = 0; v < h.n; ++v) {
      bool c = hom_dim(projective(h, v), inds[i].rep) == 0;
      ok[i][ni + v] = ok[ni + v][i] = c;
    }
  std::vector<ClusterTiltObj> out;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == h.n) {
      ClusterTiltObj t;
      t.objects = pick;
      out.push_back(std::move(t));
      return;
    }
    for (int v = from; v < total; ++v) {
      bool good = ok[v][v];
      for (int u : pick) good = good && ok[u][v];
      if (!good) continue;
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complements(const ARQuiver& ar, const FundamentalDomain& fd,
                             const std::vector<int>& almost) {
  auto cts = cluster_tilting_objects(ar, fd);
  std::set<int> comps;
  bool extended = false;
  for (const auto& ct : cts) {
    bool contains = true;
    for (int p : almost)
      contains = contains && std::find(ct.objects.begin(), ct.objects.end(), p) !=
                                 ct.objects.end();
    if (!contains) continue;
    extended = true;
    for (int p : ct.objects)
      if (std::find(almost.begin(), almost.end(), p) == almost.end())
        comps.insert(p);
  }
  if (!extended)
    throw std::invalid_argument("complements: input is not almost complete");
  return std::vector<int>(comps.begin(), comps.end());
}

TiltingSet lambda_correspondence(const ARQuiver& ar_gamma,
                                 const FundamentalDomain& fd_gamma,
                                 const TiltingSet& s,
                                 const ARQuiver& ar_lambda,
                                 const FundamentalDomain& fd_lambda) {
  if (ar_lambda.alg->kind != Instance::Kind::Lambda)
    throw std::invalid_argument("lambda_correspondence: needs a Lambda instance");
  ClusterTiltObj ct = theta_inv(ar_gamma, fd_gamma, s);
  TiltingSet out;
  for (int p : ct.objects) out.nodes.push_back(fd_lambda.nodes[p]);
  for (int n : proj_injective_nodes(ar_lambda)) out.nodes.push_back(n);
  std::sort(out.nodes.begin(), out.nodes.end());
  out.nodes.erase(std::unique(out.nodes.begin(), out.nodes.end()),
                  out.nodes.end());
  return out;
}

}  // namespace fundom

#ifndef FUNDOM_TILTING_HPP_
#define FUNDOM_TILTING_HPP_

#include "fundom/artheory.hpp"

namespace fundom {

// A basic tilting module, as a sorted set of ARQuiver node indices.
struct TiltingSet {
  std::vector<int> nodes;
  friend bool operator==(const TiltingSet& a, const TiltingSet& b) {
    return a.nodes == b.nodes;
  }
  friend bool operator<(const TiltingSet& a, const TiltingSet& b) {
    return a.nodes < b.nodes;
  }
};

// A cluster-tilting object, as a sorted set of positions into the
// fundamental domain's object list.
struct ClusterTiltObj {
  std::vector<int> objects;
  friend bool operator==(const ClusterTiltObj& a, const ClusterTiltObj& b) {
    return a.objects == b.objects;
  }
  friend bool operator<(const ClusterTiltObj& a, const ClusterTiltObj& b) {
    return a.objects < b.objects;
  }
};

// All basic tilting modules: maximal Ext^1-orthogonal sets of pd <= 1
// indecomposables of full rank, via clique enumeration.
std::vector<TiltingSet> tilting_modules(const ARQuiver& ar);
// Oracle: exhaustive scan over all full-rank subsets.
std::vector<TiltingSet> tilting_modules_bruteforce(const ARQuiver& ar);

std::vector<int> proj_injective_nodes(const ARQuiver& ar);

// theta(T) = T (+) I_0(Delta); its inverse strips exactly the
// projective-injective summands.  Both require a Gamma instance.
TiltingSet theta(const ARQuiver& ar, const FundamentalDomain& fd,
                 const ClusterTiltObj& t);
ClusterTiltObj theta_inv(const ARQuiver& ar, const FundamentalDomain& fd,
                         const TiltingSet& s);

// Cluster-tilting objects of C_H realized inside the fundamental domain of
// mod Gamma, as theta^{-1} of the tilting Gamma-modules.
std::vector<ClusterTiltObj> cluster_tilting_objects(const ARQuiver& ar,
                                                    const FundamentalDomain& fd);

// Independent oracle from mod H data only: objects are ind H plus the
// shifted projectives P_i[1]; compatibility uses
//   Ext^1_C(M, N) = Ext^1_H(M, N) (+) D Ext^1_H(N, M),
//   Ext^1_C(P[1], M) = Hom_H(P, M),  Ext^1_C(P[1], Q[1]) = 0.
std::vector<ClusterTiltObj> cluster_tilting_oracle(const Quiver& h);

// All FD objects completing an almost complete cluster-tilting object
// (n - 1 FD positions); always exactly two on the covered fixtures.
std::vector<int> complements(const ARQuiver& ar, const FundamentalDomain& fd,
                             const std::vector<int>& almost);

// T |-> T (+) Qbar: the tilting Lambda-module matching a tilting
// Gamma-module under the FD identification plus all projective-injectives.
TiltingSet lambda_correspondence(const ARQuiver& ar_gamma,
                                 const FundamentalDomain& fd_gamma,
                                 const TiltingSet& s,
                                 const ARQuiver& ar_lambda,
                                 const FundamentalDomain& fd_lambda);

}  // namespace fundom

#endif  // FUNDOM_TILTING_HPP_

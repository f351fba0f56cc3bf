#ifndef FUNDOM_CTQUIVER_HPP_
#define FUNDOM_CTQUIVER_HPP_

#include "fundom/tilting.hpp"

namespace fundom {

// Endomorphism algebra of a direct sum of pairwise non-isomorphic
// indecomposables, kept as explicit Hom bases; `dead` holds a flattened
// basis of the modded-out subspace (maps through add I_0(Delta)) when the
// algebra is a stable quotient, and is empty otherwise.
struct BasicAlgebra {
  const Instance* alg = nullptr;
  std::vector<Triple> summands;
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<TripleMap>>> hom;  // hom[i][j]: T_i -> T_j
  std::vector<std::vector<Mat>> dead;
  bool stable = false;

  int dim(int i, int j) const { return static_cast<int>(hom[i][j].size()); }
};

BasicAlgebra end_algebra(std::vector<Triple> summands);
// End with every Hom space replaced by its quotient modulo maps factoring
// through add I_0(Delta); summands that are themselves in add I_0(Delta)
// are rejected (their identity would die).
BasicAlgebra stable_end(std::vector<Triple> summands);

// Ordinary quiver: #arrows i->j = dim rad Hom(T_j, T_i) / rad^2 (the
// left-module convention e_i A e_j = Hom(P_i, P_j), pinned by the fixtures).
Quiver algebra_quiver(const BasicAlgebra& e);

// entry (i, j) = #elements from T_i to T_j in a minimal generating set of
// the relation ideal = dim Ext^2_E(S_j, S_i); requires a plain (non-stable)
// algebra with gldim <= 2 (violation reported as std::logic_error).
Eigen::MatrixXi min_relation_counts(const BasicAlgebra& e);

int gldim_basic(const BasicAlgebra& e);

// The cluster-tilted quiver Q_C: arrows of the stable End(T) plus the
// minimal-relation counts through add(T (+) I_0(Delta)).
Quiver cluster_tilted_quiver(const ARQuiver& ar, const FundamentalDomain& fd,
                             const ClusterTiltObj& t);

// dim Hom_{C_H}(X, Y) for fundamental-domain positions (ind H first, then
// the shifted projectives P_i[1]), from mod H data only.
int cluster_hom_dim(const Quiver& h, int xpos, int ypos);

// True iff the exchange matrix of qc lies in the mutation class of q.
bool verify_mutation_class(const Quiver& qc, const Quiver& q,
                           std::size_t cap = 100000);

}  // namespace fundom

#endif  // FUNDOM_CTQUIVER_HPP_

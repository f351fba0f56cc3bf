#ifndef FUNDOM_ARTHEORY_HPP_
#define FUNDOM_ARTHEORY_HPP_

#include "fundom/triple.hpp"

namespace fundom {

struct TriplePresentation {
  TripleCover p0;  // P0 -> M
  TripleCover p1;  // P1 -> ker(P0 -> M)
  TripleMap f;     // P1 -> P0
};
TriplePresentation min_presentation_triple(const Triple& m);

int pd_triple(const Triple& m);
int gldim_instance(const Instance& r);

// Hom_R(N, R) as a module over the opposite instance, with the concrete
// Hom bases used for each component space.
struct HomRResult {
  Triple z;  // over opposite_instance(alg of n)
  std::vector<std::vector<TripleMap>> xbasis;  // per right vertex i: Hom(N,(0,P_i,0))
  std::vector<std::vector<TripleMap>> ybasis;  // per left vertex a: Hom(N,Pleft_a)
};
HomRResult hom_r(const Triple& n);

// Transpose: coker of Hom(P0,R) -> Hom(P1,R); zero for projectives.
Triple transpose_triple(const Triple& m);

Triple tau_triple(const Triple& m);      // D Tr
Triple tau_inv_triple(const Triple& m);  // Tr D

// dim Ext^k(M, N) from a minimal projective resolution of M, 1 <= k <= 3.
int ext_dim(const Triple& m, const Triple& n, int k);

struct ARNode {
  Triple rep;
  int orbit;  // index of the projective whose tau^{-} orbit this is
  int power;
  std::string name;  // render_triple
};

struct ARQuiver {
  const Instance* alg = nullptr;
  std::vector<ARNode> nodes;
  std::vector<int> tau_of;      // node index of tau(node), -1 for projectives
  std::vector<int> tau_inv_of;  // -1 for injectives
  Eigen::MatrixXi arrows;       // arrows(i,j) = #irreducible maps node_i -> node_j
  std::vector<int> pd;          // projective dimension per node

  int find(const Triple& m) const;  // -1 when not present
};
// All indecomposables as tau^{-} orbits of the projectives; requires the
// underlying quiver of H to be Dynkin.
ARQuiver ar_quiver(const Instance& r);

// The fundamental domain: embedded ind H followed by tau^{-1} of the
// embedded injective H-modules ("shifted projectives" P_i[1]).
struct FundamentalDomain {
  std::vector<int> nodes;       // indices into the ARQuiver
  std::vector<bool> is_shift;   // true for the tau^{-1}(I_i) tail
  std::vector<int> h_index;     // index into ind H, or vertex i for shifts
};
FundamentalDomain fundamental_domain(const Instance& r, const ARQuiver& ar);

// Nodes all of whose predecessors (Hom-reachability) have pd <= 1.
std::vector<int> left_part(const ARQuiver& ar);

// I_0(Delta) = I_0(soc H): direct sum of the injective envelopes of the
// sink simples; over Gamma these are the projective-injectives.
Triple i0_delta(const Instance& r);

bool factors_through(const TripleMap& f, const Triple& w);
// Through add I_0(soc H).
bool factors_through_proj_inj(const TripleMap& f);

}  // namespace fundom

#endif  // FUNDOM_ARTHEORY_HPP_

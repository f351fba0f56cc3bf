#ifndef FUNDOM_BIMODULE_HPP_
#define FUNDOM_BIMODULE_HPP_

#include "fundom/rep.hpp"

namespace fundom {

// A (kQ_B, kQ_A)-bimodule M given by its columns M e_a (left modules, one
// per vertex a of Q_A) and the right action of the arrows of Q_A.
struct Bimodule {
  const Quiver* qa = nullptr;  // acting on the right
  const Quiver* qb = nullptr;  // acting on the left; columns live over qb
  std::vector<Rep> col;        // col[a] = M e_a, a representation of qb
  // For the Q_A-arrow alpha: a -> a', the right action m |-> m alpha is a
  // qb-map col[a'] -> col[a].
  std::vector<RepMap> right_act;
};

// DH as an (H, H)-bimodule: columns are the injectives I_a.
Bimodule dh_bimodule(const Quiver& q);

// M (x)_A X for a Q_A-representation X, with the projection from and a
// section into the ambient sum  (+)_a  col[a] (x) X_a.  Basis order of the
// ambient block at qb-vertex b: index = x * dim(col[a]_b) + m.
struct TensorResult {
  Rep rep;  // over qb
  std::vector<Mat> pi;                   // per qb-vertex, ambient -> rep
  std::vector<Mat> section;              // per qb-vertex, rep -> ambient
  std::vector<std::vector<int>> offset;  // offset[a][b] of block a at vertex b
};
TensorResult tensor(const Bimodule& m, const Rep& x);

// Induced map M (x) f for a Q_A-map f: X -> X'.
RepMap tensor_map(const Bimodule& m, const TensorResult& tx,
                  const TensorResult& txp, const RepMap& f);

}  // namespace fundom

#endif  // FUNDOM_BIMODULE_HPP_

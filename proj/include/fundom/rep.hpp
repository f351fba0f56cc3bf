#ifndef FUNDOM_REP_HPP_
#define FUNDOM_REP_HPP_

#include <vector>

#include "fundom/linalg.hpp"
#include "fundom/quiver.hpp"

namespace fundom {

// A representation of an acyclic quiver: left kQ-modules are covariant
// representations, the matrix of an arrow a: i->j maps the space at i to
// the space at j.  Composition is written right to left.
struct Rep {
  const Quiver* q = nullptr;
  std::vector<int> dims;
  std::vector<Mat> mats;  // per arrow, dims[target] x dims[source]

  int total() const;
  bool is_zero() const { return total() == 0; }
};

struct RepMap {
  Rep source;
  Rep target;
  std::vector<Mat> comps;  // per vertex, target.dims[v] x source.dims[v]
};

Rep zero_rep(const Quiver& q);
Rep simple(const Quiver& q, int i);
// Basis of P_i at vertex j: the paths i~>j in all_paths order.
Rep projective(const Quiver& q, int i);
// Basis of I_i at vertex j: duals of the paths j~>i (all_paths order of
// the opposite quiver).
Rep injective(const Quiver& q, int i);

// Stable opposite quiver of q, cached so that reps over it can share a
// pointer; opposite_cached(opposite_cached(q)) is q itself.
const Quiver& opposite_cached(const Quiver& q);

// k-linear dual as a representation of the (cached) opposite quiver.
Rep dual_rep(const Rep& m);
RepMap dual_map(const RepMap& f);  // contravariant: swaps source and target

// Ordered basis paths i~>j, the order used by projective().
std::vector<Path> paths_between(const Quiver& q, int i, int j);
// Matrix of the action of a path on m (identity for a trivial path).
Mat path_action(const Rep& m, const Path& p);
// Right multiplication by the path s: a~>b, as a map P_b -> P_a sending
// the generator to s.
RepMap right_mult(const Quiver& q, const Path& s);

bool is_rep_map(const RepMap& f);
RepMap identity_map(const Rep& m);
RepMap compose(const RepMap& g, const RepMap& f);  // g after f
RepMap zero_map(const Rep& source, const Rep& target);

// Direct sum with block bookkeeping.
struct SumRep {
  Rep rep;
  std::vector<Rep> parts;
  std::vector<std::vector<int>> offset;  // offset[s][v] of part s at vertex v
};
SumRep direct_sum_reps(const Quiver& q, std::vector<Rep> parts);
RepMap sum_inclusion(const SumRep& s, int part);
RepMap sum_projection(const SumRep& s, int part);

// Subobject spanned per vertex by the columns of span[v] (must be
// arrow-invariant); returns the inclusion S -> M.
RepMap sub_rep(const Rep& m, const std::vector<Mat>& span);
// Projection M -> M/U for the invariant subspace spanned by span[v].
RepMap quotient_rep(const Rep& m, const std::vector<Mat>& span);
struct QuotientData {
  RepMap proj;
  std::vector<Mat> section;  // per vertex, proj.comps[v] * section[v] = id
};
QuotientData quotient_with_section(const Rep& m, const std::vector<Mat>& span);
RepMap kernel_map(const RepMap& f);    // inclusion ker f -> source
RepMap image_map(const RepMap& f);     // inclusion im f -> target
RepMap cokernel_map(const RepMap& f);  // projection target -> coker f

std::vector<Mat> radical_span(const Rep& m);
RepMap top_proj(const Rep& m);   // M -> M/rad M
RepMap radical_inc(const Rep& m);
RepMap socle_inc(const Rep& m);  // soc M -> M

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

struct ProjCover {
  std::vector<int> vertices;  // summand P_{vertices[s]}
  SumRep sum;
  RepMap map;  // P -> M, surjective with superfluous kernel
};
ProjCover proj_cover(const Rep& m);

struct MinPresentation {
  ProjCover p0;  // P0 -> M
  ProjCover p1;  // P1 -> ker(P0 -> M)
  RepMap f;      // P1 -> P0
};
MinPresentation min_presentation(const Rep& m);

// dim Ext^1(M, N) for hereditary kQ, from a minimal presentation of M.
int ext1_dim(const Rep& m, const Rep& n);

// Euler form <dim M, dim N>.
int euler_form(const Rep& m, const Rep& n);

// Transpose Tr M = coker Hom(f, H), a representation of the opposite
// quiver; zero for projective M.
Rep transpose_rep(const Rep& m);

Rep tau_h(const Rep& m);      // D Tr; rejects decomposable input
Rep tau_h_inv(const Rep& m);  // Tr D; rejects decomposable input

// Nakayama functor DH (x)_H -.
Rep nakayama(const Rep& m);

bool is_indecomposable(const Rep& m);
// Valid for representation-directed algebras: equal dimension vectors and
// nonzero Hom both ways.
bool iso_indec(const Rep& m, const Rep& n);

struct IndH {
  Rep rep;
  int vertex;  // projective orbit P_{vertex}
  int power;   // rep ~ tau^{-power} P_vertex
};
// All indecomposables of kQ for Dynkin Q, ordered by (power, vertex).
// Throws std::domain_error for non-Dynkin input.
std::vector<IndH> indecomposables_h(const Quiver& q);

}  // namespace fundom

#endif  // FUNDOM_REP_HPP_

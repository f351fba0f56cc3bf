#ifndef FUNDOM_TRIPLE_HPP_
#define FUNDOM_TRIPLE_HPP_

#include <memory>
#include <string>

#include "fundom/bimodule.hpp"

namespace fundom {

// A triangular matrix algebra [[A,0],[M,B]] with A = k(left quiver),
// B = k(right quiver) and M the bimodule.  Modules are triples (X,Y,f)
// with X over A, Y over B and f: M (x)_A X -> Y.
//   Lambda = [[H,0],[DH,H]]   (duplicated algebra; left quiver = h itself)
//   Gamma  = [[K,0],[J,H]]    (left quiver = discrete quiver on the sinks,
//                              J = I_0(Delta))
struct Instance {
  enum class Kind { Lambda, Gamma, Other };
  Kind kind = Kind::Other;
  const Quiver* h = nullptr;     // right quiver (B)
  const Quiver* left = nullptr;  // left quiver (A); == h for Lambda
  std::vector<int> delta;        // h-vertex of each left vertex
  Bimodule bim;                  // columns over h, right action of `left`

  std::shared_ptr<const Quiver> owned_left;
  mutable std::shared_ptr<const Instance> op_;
  mutable const Instance* op_back_ = nullptr;
};

// Cached per quiver; references stay valid for the process lifetime.
const Instance& lambda_of(const Quiver& h);
const Instance& gamma_of(const Quiver& h);  // requires h acyclic with >= 1 sink
const Instance& opposite_instance(const Instance& r);  // involutive

struct Triple {
  const Instance* alg = nullptr;
  Rep x;            // over alg->left
  Rep y;            // over alg->h
  TensorResult tx;  // tensor(alg->bim, x), fixed basis for f
  RepMap f;         // tx.rep -> y

  int total() const { return x.total() + y.total(); }
  bool is_zero() const { return total() == 0; }
};

struct TripleMap {
  Triple source;
  Triple target;
  RepMap ax;  // x-components, over alg->left
  RepMap by;  // y-components, over alg->h
};

Triple make_triple(const Instance& r, Rep x, Rep y, std::vector<Mat> fcomps);
Triple zero_triple(const Instance& r);
Triple embed_h(const Instance& r, const Rep& y);  // (0, Y, 0)
TripleMap embed_h_map(const Instance& r, const RepMap& g);

TripleMap make_triple_map(Triple source, Triple target, RepMap ax, RepMap by);
bool is_triple_map(const TripleMap& f);
TripleMap identity_triple_map(const Triple& m);
TripleMap zero_triple_map(const Triple& source, const Triple& target);
TripleMap compose(const TripleMap& g, const TripleMap& f);

// Indecomposable projectives: (0, P_i, 0) for every right vertex i, then
// (P_a, T(P_a), id) for every left vertex a.  Injectives are the duals of
// the opposite instance's projectives, in the same order.
std::vector<Triple> projective_triples(const Instance& r);
std::vector<Triple> injective_triples(const Instance& r);
Triple projective_triple(const Instance& r, int right_vertex);
Triple left_projective_triple(const Instance& r, int left_vertex);

std::vector<TripleMap> hom_triples(const Triple& m, const Triple& n);
int hom_dim(const Triple& m, const Triple& n);
// Coordinates of f in the basis (throws if outside its span).
Vec map_coords(const std::vector<TripleMap>& basis, const TripleMap& f);
// All component entries of f stacked into one column vector.
Vec flatten_triple_map(const TripleMap& f);

Triple dual_triple(const Triple& m);        // (DY, DX, Df) over the opposite
TripleMap dual_triple_map(const TripleMap& f);

struct SubTriple {
  Triple sub;
  TripleMap inc;
};
struct QuotTriple {
  Triple quot;
  TripleMap proj;
};
// span_x / span_y give arrow-invariant subspaces; the caller guarantees
// f(T(sub X)) lies in sub Y (resp. f(T(span X)) in span Y for quotients).
SubTriple sub_triple(const Triple& m, const std::vector<Mat>& span_x,
                     const std::vector<Mat>& span_y);
QuotTriple quot_triple(const Triple& m, const std::vector<Mat>& span_x,
                       const std::vector<Mat>& span_y);

SubTriple kernel_triple(const TripleMap& f);
SubTriple image_triple(const TripleMap& f);
QuotTriple cokernel_triple(const TripleMap& f);

SubTriple radical_triple(const Triple& m);  // (rad X, rad Y + Im f, f|)
QuotTriple top_triple(const Triple& m);
SubTriple socle_triple(const Triple& m);    // D top D

struct SumTriple {
  Triple rep;
  std::vector<Triple> parts;
  std::vector<TripleMap> inc;
  std::vector<TripleMap> proj;
};
SumTriple direct_sum_triples(const Instance& r, std::vector<Triple> parts);

struct TripleCover {
  // Summands: right projective (left_vertex = -1) or left projective.
  std::vector<int> right_vertices;  // -1 for left summands
  std::vector<int> left_vertices;   // -1 for right summands
  SumTriple sum;
  TripleMap map;  // P -> M
};
TripleCover proj_cover_triple(const Triple& m);

bool is_indec_triple(const Triple& m);
bool iso_triple(const Triple& m, const Triple& n);

// Loewy-layer rendering in stacked notation, e.g. "3'/12/3":
// layers of the radical filtration joined by "/", labels inside a layer
// sorted and concatenated, left vertices primed.
std::string render_triple(const Triple& m);

}  // namespace fundom

#endif  // FUNDOM_TRIPLE_HPP_

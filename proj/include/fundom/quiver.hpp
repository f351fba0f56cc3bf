#ifndef FUNDOM_QUIVER_HPP_
#define FUNDOM_QUIVER_HPP_

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace fundom {

// Finite quiver.  Vertices are 0-based internally; all file formats and
// printed output use the 1-based labels stored in `labels`.
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based
  std::vector<std::string> labels;          // size n; defaults to "1".."n"

  static Quiver with_default_labels(int n, std::vector<std::pair<int, int>> arrows);
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format: `vertices <n>`, then `arrow <s> <t>` lines (1-based);
// `#` starts a comment.  A leading `{` switches to the JSON alternative
// {"vertices": n, "arrows": [[s,t],...]}.  Loops are rejected.
Quiver parse_quiver(const std::string& text);

bool is_acyclic(const Quiver& q);
bool is_connected(const Quiver& q);
// Vertices ordered so every arrow goes forward; throws on a cycle.
std::vector<int> topological_order(const Quiver& q);
std::vector<int> sinks(const Quiver& q);
std::vector<int> sources(const Quiver& q);
Quiver opposite(const Quiver& q);

// Underlying-graph classification: "A<n>", "D<n>", "E6/7/8", or
// "non-Dynkin"; a disconnected quiver is reported per component,
// joined with " + ".
std::string dynkin_type(const Quiver& q);
bool is_dynkin(const Quiver& q);

std::string to_dot(const Quiver& q);

// A path s -> t as a composable arrow sequence; `arrows` lists arrow
// indices from source to target, empty for the trivial path e_s.
struct Path {
  int from = 0;
  int to = 0;
  std::vector<int> arrows;
};

// All paths of the (acyclic) quiver, trivial paths included, in a
// deterministic order: by source vertex, then by length, then
// lexicographically in arrow indices.
std::vector<Path> all_paths(const Quiver& q);

// --- Fomin–Zelevinsky mutation oracle ------------------------------------

using ExchangeMatrix = Eigen::MatrixXi;

// b[i][j] = #arrows i->j − #arrows j->i.
ExchangeMatrix exchange_matrix(const Quiver& q);
// Quiver of a skew-symmetric matrix (b[i][j] > 0 gives b[i][j] arrows i->j).
Quiver matrix_quiver(const ExchangeMatrix& b);

ExchangeMatrix mutate(const ExchangeMatrix& b, int k);  // 0-based k

// Lexicographically minimal row/column simultaneous permutation of b.
ExchangeMatrix canonical_form(const ExchangeMatrix& b);

struct MutationClassCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical representatives of the mutation closure of q, sorted.
// Throws MutationClassCapExceeded when more than `cap` classes appear.
std::vector<ExchangeMatrix> mutation_class(const Quiver& q, std::size_t cap = 100000);

bool same_up_to_iso(const ExchangeMatrix& a, const ExchangeMatrix& b);

}  // namespace fundom

#endif  // FUNDOM_QUIVER_HPP_

#pragma once

#include <cstddef>
#include <vector>

#include "rtt/operators.hpp"
#include "rtt/tensor.hpp"

namespace rtt {

/// Dense coordinate vector in L^{⊗d}, indexed by lexicographic word order.
using Row = std::vector<Scalar>;

/// Largest rank^degree the span/matrix layer will materialize by default.
inline constexpr std::size_t kDefaultDimCap = 4096;

/// rank^degree, with a TooLarge error beyond `cap`.
std::size_t component_dim(int rank, int degree, std::size_t cap = kDefaultDimCap);

/// Lexicographic position of a degree-|w| word; words are base-`rank`
/// digit strings with digits letter-1.
std::size_t word_index(const Word& w, int rank);
Word index_word(std::size_t index, int rank, int degree);

Row tensor_component_row(const Tensor& t, int degree, std::size_t cap = kDefaultDimCap);
Tensor row_tensor(const Row& row, int rank, const RingSpec& ring, int degree);

/// Canonicalizes a list of rows in place: reduced row echelon form over a
/// field, row-style Hermite normal form over zz (positive pivots, entries
/// above each pivot reduced into [0, pivot)). Zero rows are dropped and
/// rows end up sorted by pivot column. The result is the unique canonical
/// basis of the span/lattice generated by the input.
void canonicalize_rows(const RingSpec& ring, std::vector<Row>& rows);

/// Reduces v against a canonical basis; true iff it reduces to zero (over
/// zz: with integer coefficients).
bool reduces_to_zero(const RingSpec& ring, const std::vector<Row>& basis, Row v);

/// Graded submodule of T(L) up to max_degree, one canonical basis per
/// degree. Equality of spans is componentwise basis identity.
class GradedSpan {
 public:
  GradedSpan(int rank, const RingSpec& ring, int max_degree);

  int rank() const { return rank_; }
  const RingSpec& ring() const { return ring_; }
  int max_degree() const { return max_degree_; }

  const std::vector<Row>& component(int degree) const;
  long long dim(int degree) const { return (long long)component(degree).size(); }
  long long total_dim() const;

  /// Adds raw rows to a component and re-canonicalizes it.
  void add_rows(int degree, std::vector<Row> rows);
  /// Splits the tensor into graded components and adds each (degrees
  /// beyond max_degree are rejected).
  void add_tensor(const Tensor& t);

  Tensor basis_tensor(int degree, std::size_t i) const;

  friend bool operator==(const GradedSpan&, const GradedSpan&) = default;

 private:
  int rank_;
  RingSpec ring_;
  int max_degree_;
  std::vector<std::vector<Row>> components_;
};

GradedSpan span_from_tensors(int rank, const RingSpec& ring, const std::vector<Tensor>& ts,
                             int max_degree);
bool span_contains(const GradedSpan& s, const Tensor& t);
bool span_equal(const GradedSpan& a, const GradedSpan& b);
/// True iff every component basis vector of `a` lies in `b` (degrees above
/// b.max_degree are not checked; callers align max degrees).
bool span_subset(const GradedSpan& a, const GradedSpan& b);
GradedSpan span_sum(const GradedSpan& a, const GradedSpan& b);
/// Degree-d component spanned by all products x*y over basis vectors of
/// the factors, truncated at max_degree.
GradedSpan span_product(const GradedSpan& a, const GradedSpan& b, int max_degree);
/// Span of [x,y]_s (signed) or [x,y] (unsigned) over all basis pairs.
GradedSpan bracket_span(const GradedSpan& a, const GradedSpan& b, bool signed_bracket,
                        int max_degree);

/// The bracket tower L_1 = L, L_{i+1} = [L, L_i]; component i of the i-th
/// span is its only nonzero one. All returned spans share max_degree.
std::vector<GradedSpan> build_lie_components(int rank, const RingSpec& ring, bool signed_bracket,
                                             int max_degree);

/// Span of x^power over x in L, generated by (sum_{j in S} c_j e_j)^power
/// for supports S with |S| <= power and coefficients c in {1..power}^S.
GradedSpan build_squares_span(int rank, const RingSpec& ring, int power);

/// Degree-truncated subalgebra generated by a span living in positive
/// degrees: C_0 = <1>, C_d = sum_e gen_e * C_{d-e}.
GradedSpan subalgebra_closure(const GradedSpan& generators, int max_degree);

enum class OperatorTag { t, t_prime, tN_prime };

/// Matrix of a degree-preserving operator on L^{⊗degree}; column j is the
/// image of the j-th lexicographic word.
struct OperatorMatrix {
  int rank;
  RingSpec ring;
  int degree;
  int N;  // only meaningful for tN_prime
  std::size_t dim;
  std::vector<Row> cols;

  const Scalar& entry(std::size_t row, std::size_t col) const { return cols[col][row]; }
};

OperatorMatrix operator_matrix(OperatorTag op, int rank, const RingSpec& ring, int degree,
                               int N = 1, std::size_t cap = kDefaultDimCap);

/// Exact null space as a single-degree GradedSpan. Over a field this is
/// the usual RREF null space; over zz it is the full saturated kernel
/// lattice {v : Mv = 0}, extracted with unimodular row reduction.
GradedSpan matrix_kernel(const OperatorMatrix& m);

/// Null space of an arbitrary stacked row list (columns = rank^degree),
/// used for joint kernels.
std::vector<Row> kernel_rows(const RingSpec& ring, const std::vector<Row>& matrix_rows,
                             std::size_t ncols);

/// Kernels of one operator assembled for all degrees 0..max_degree.
GradedSpan kernel_span(OperatorTag op, int rank, const RingSpec& ring, int max_degree, int N = 1,
                       std::size_t cap = kDefaultDimCap);

}  // namespace rtt

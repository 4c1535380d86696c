#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rtt/scalar.hpp"

namespace rtt {

/// A pure tensor over the standard basis: a sequence of 1-based generator
/// indices. The empty word is the unit of the tensor algebra.
using Word = std::vector<std::uint32_t>;

/// Canonical term order: shorter words first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite linear combination of words with nonzero coefficients, possibly
/// inhomogeneous. Normalized on every mutation: no zero terms are stored,
/// so equality is term-map identity.
class Tensor {
 public:
  Tensor(int rank, const RingSpec& ring);

  static Tensor unit(int rank, const RingSpec& ring);
  static Tensor basis_word(int rank, const RingSpec& ring, Word w);

  int rank() const { return rank_; }
  const RingSpec& ring() const { return ring_; }
  const std::map<Word, Scalar, WordOrder>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Largest word length present; 0 for the zero tensor.
  int max_degree() const;
  /// True when all words share one length (vacuously true for 0). If
  /// degree_out is given it receives that length.
  bool is_homogeneous(int* degree_out = nullptr) const;

  /// Accumulates c * w, combining like terms and dropping zeros.
  void add(const Word& w, const Scalar& c);

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& rhs);
  Tensor& operator-=(const Tensor& rhs);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  /// Concatenation product, extended bilinearly.
  friend Tensor operator*(const Tensor& a, const Tensor& b);
  Tensor scaled(const Scalar& c) const;

  /// Sub-sum of terms whose words have length k; a linear projector.
  Tensor graded_component(int k) const;

  bool operator==(const Tensor& rhs) const;
  bool operator!=(const Tensor& rhs) const { return !(*this == rhs); }

  void check_compatible(const Tensor& rhs) const;

 private:
  int rank_;
  RingSpec ring_;
  std::map<Word, Scalar, WordOrder> terms_;
};

/// Grammar (whitespace-insensitive):
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := [coef '*'] word
///   word := '[' [idx (',' idx)*] ']'
///   coef := digits ['/' digits]
/// Fractions outside qq must divide exactly (zz) or be invertible (fp).
Tensor parse_tensor(std::string_view text, int rank, const RingSpec& ring);

/// Deterministic canonical form; parse_tensor(format_tensor(t)) == t.
std::string format_tensor(const Tensor& t);

Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor graded_component(const Tensor& t, int k);

}  // namespace rtt

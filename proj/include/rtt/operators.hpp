#pragma once

#include <vector>

#include "rtt/tensor.hpp"

namespace rtt {

/// Element of the dual module L* = Hom(L, k), stored by its values on the
/// standard basis: coeffs[j-1] = g(e_j).
struct Functional {
  int rank;
  std::vector<Scalar> coeffs;

  Functional(int rank_in, std::vector<Scalar> coeffs_in);
  /// e_i* with e_i*(e_j) = delta_{ij}; i is 1-based.
  static Functional dual_basis(int rank, const RingSpec& ring, int i);

  const Scalar& operator()(std::uint32_t letter) const { return coeffs[letter - 1]; }
};

/// Signed random-to-top: u_1...u_k  |->  sum_i (-1)^(i-1) u_i u_1 ... ^u_i ... u_k.
Tensor apply_t(const Tensor& t_in);

/// Unsigned random-to-top (no signs).
Tensor apply_t_prime(const Tensor& t_in);

/// Moves every increasing N-tuple of tensorands to the front; N = 1 is
/// apply_t_prime, and words shorter than N map to 0.
Tensor apply_tN_prime(const Tensor& t_in, int N);

/// Signed interior product: sum_i (-1)^(i-1) g(u_i) * (word minus u_i).
Tensor apply_partial(const Functional& g, const Tensor& t_in);

/// Unsigned interior product.
Tensor apply_partial_prime(const Functional& g, const Tensor& t_in);

/// Cuts off the first tensorand: u_1...u_k |-> g(u_1) u_2...u_k, and 1 |-> 0.
/// Satisfies partial = cg ∘ t and partial' = cg ∘ t'.
Tensor apply_cg(const Functional& g, const Tensor& t_in);

/// Supercommutator [a,b]_s = ab - (-1)^(nm) ba per pair of graded
/// components (degrees n, m), extended bilinearly.
Tensor scomm(const Tensor& a, const Tensor& b);

/// Plain commutator ab - ba.
Tensor comm(const Tensor& a, const Tensor& b);

}  // namespace rtt

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtt/span.hpp"

namespace rtt {

struct ReportRow {
  int degree;  // degree for per-degree campaigns, 1-based check index otherwise
  long long lhs;
  long long rhs;
  bool equal;
  std::string label;  // shown in table output only
};

/// Structured outcome of one verification campaign. pass() is the
/// conjunction of the row flags; over zz the dims are lattice ranks and
/// equality means lattice equality.
struct VerificationReport {
  std::string campaign;
  RingSpec ring;
  int rank = 0;
  int max_degree = 0;
  bool experimental = false;
  std::vector<ReportRow> rows;
  long long elapsed_ms = 0;

  bool pass() const;
  std::string to_json(int indent = 2) const;
  std::string to_table() const;
};

/// Per-degree comparison of Ker t with the subalgebra generated by
/// gbar + P; the kernel theorem for the signed operator predicts pass
/// over every supported ring.
VerificationReport verify_kert(int rank, const RingSpec& ring, int max_degree);

/// Same for t' against the subalgebra generated by gbar' alone; only
/// valid over qq and zz (torsionfree coefficients).
VerificationReport verify_kert_prime(int rank, const RingSpec& ring, int max_degree);

/// Same for t' over F_p against the subalgebra generated by gbar' + P_p.
VerificationReport verify_kert_prime_modp(int rank, std::int64_t p, int max_degree);

/// Seeded randomized checks of the operator identities (derivation laws,
/// factorizations, Leibniz/Jacobi variants, ad_{a^p} = (ad_a)^p, ...).
VerificationReport verify_identity_suite(int rank, const RingSpec& ring, int cases,
                                         std::uint64_t seed);

/// Exhaustive span-inclusion checks between the towers, gbar/P/h and the
/// kernels, at all degrees <= max_degree.
VerificationReport verify_inclusion_suite(int rank, const RingSpec& ring, int max_degree);

/// Graded dimensions of the free Lie algebra: (1/d) sum_{e|d} mu(d/e) rank^e.
std::vector<long long> witt_dimensions(int rank, int max_degree);

/// Checks T(L) = T(L)^sym * Ker t' degreewise over qq.
VerificationReport verify_pang(int rank, int max_degree);

/// Compares the joint kernel of t'_1..t'_N with the subalgebra generated
/// by the tower components above degree N, over qq. Reported as
/// experimental; a failing degree is a finding, not an error.
VerificationReport verify_kn(int rank, int N, int max_degree);

/// gbar (signed) or gbar' (unsigned): tower components of degree >= 2.
GradedSpan gbar_span(int rank, const RingSpec& ring, bool signed_bracket, int max_degree);

/// gbar + P, the generating span for the signed kernel theorem.
GradedSpan h_span(int rank, const RingSpec& ring, int max_degree);

}  // namespace rtt

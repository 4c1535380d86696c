#pragma once

#include <random>
#include <vector>

#include "rtt/operators.hpp"

// Test-side helpers: random value generators and small independent
// elimination oracles. These deliberately avoid the span module so the
// expected values they produce do not depend on the code under test.
namespace rtt_test {

using namespace rtt;

struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
  int range(int lo, int hi) { return lo + int(next(std::uint64_t(hi - lo + 1))); }

  Scalar scalar(const RingSpec& ring) {
    if (ring.kind == RingKind::PrimeField) return Scalar::of(ring, range(0, int(ring.p) - 1));
    if (ring.kind == RingKind::RationalField && next(4) == 0)
      return Scalar::fraction(ring, range(-9, 9), range(1, 5));
    return Scalar::of(ring, range(-9, 9));
  }

  Scalar nonzero_scalar(const RingSpec& ring) {
    for (;;) {
      Scalar s = scalar(ring);
      if (!s.is_zero()) return s;
    }
  }

  Word word(int rank, int len) {
    Word w(static_cast<std::size_t>(len));
    for (auto& letter : w) letter = std::uint32_t(range(1, rank));
    return w;
  }

  Tensor tensor(int rank, const RingSpec& ring, int max_deg, int terms) {
    Tensor t(rank, ring);
    for (int i = 0; i < terms; ++i) t.add(word(rank, range(0, max_deg)), nonzero_scalar(ring));
    return t;
  }

  Tensor homogeneous(int rank, const RingSpec& ring, int deg, int terms) {
    Tensor t(rank, ring);
    for (int i = 0; i < terms; ++i) t.add(word(rank, deg), nonzero_scalar(ring));
    return t;
  }

  Functional functional(int rank, const RingSpec& ring) {
    std::vector<Scalar> coeffs;
    for (int j = 0; j < rank; ++j) coeffs.push_back(scalar(ring));
    return Functional(rank, std::move(coeffs));
  }
};

// rank of a rational matrix by plain Gaussian elimination
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// rank of an integer matrix mod p
inline std::size_t oracle_rank_mod_p(std::vector<std::vector<long long>> rows, long long p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  auto reduce = [p](long long v) { return ((v % p) + p) % p; };
  for (auto& row : rows)
    for (auto& v : row) v = reduce(v);
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    long long inv = 1;
    for (long long x = 1; x < p; ++x) {
      if (rows[rank][col] * x % p == 1) {
        inv = x;
        break;
      }
    }
    for (auto& v : rows[rank]) v = reduce(v * inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      long long f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] = reduce(rows[r][c] - f * rows[rank][c]);
    }
    ++rank;
  }
  return rank;
}

// matrix of the signed (alternating) or unsigned move-to-front sum on
// degree-k words, built directly from the definition: rows are indexed by
// target words, columns by source words
inline std::vector<std::vector<long long>> oracle_move_to_front_matrix(int rank, int degree,
                                                                       bool with_signs) {
  std::size_t dim = 1;
  for (int i = 0; i < degree; ++i) dim *= std::size_t(rank);
  std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    // word digits of j, most significant first
    std::vector<std::size_t> w(static_cast<std::size_t>(degree));
    std::size_t rest = j;
    for (int i = degree - 1; i >= 0; --i) {
      w[std::size_t(i)] = rest % std::size_t(rank);
      rest /= std::size_t(rank);
    }
    for (int i = 0; i < degree; ++i) {
      std::size_t idx = w[std::size_t(i)];
      for (int l = 0; l < degree; ++l) {
        if (l == i) continue;
        idx = idx * std::size_t(rank) + w[std::size_t(l)];
      }
      m[idx][j] += (with_signs && i % 2 == 1) ? -1 : 1;
    }
  }
  return m;
}

}  // namespace rtt_test

#include "rtt/operators.hpp"

namespace rtt {

namespace {

void check_functional(const Functional& g, const Tensor& t) {
  if (g.rank != t.rank())
    fail(errc::rank_mismatch, "functional rank " + std::to_string(g.rank) +
                                  " vs tensor rank " + std::to_string(t.rank()));
  if (!g.coeffs.empty() && g.coeffs.front().ring() != t.ring())
    fail(errc::ring_mismatch, "functional ring differs from tensor ring");
}

Word without(const Word& w, std::size_t i) {
  Word out;
  out.reserve(w.size() - 1);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (j != i) out.push_back(w[j]);
  return out;
}

Word to_front(const Word& w, std::size_t i) {
  Word out;
  out.reserve(w.size());
  out.push_back(w[i]);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (j != i) out.push_back(w[j]);
  return out;
}

}  // namespace

Functional::Functional(int rank_in, std::vector<Scalar> coeffs_in)
    : rank(rank_in), coeffs(std::move(coeffs_in)) {
  if (int(coeffs.size()) != rank)
    fail(errc::rank_mismatch, "functional needs exactly one coefficient per generator");
}

Functional Functional::dual_basis(int rank, const RingSpec& ring, int i) {
  if (i < 1 || i > rank) fail(errc::index_out_of_range, "dual basis index out of range");
  std::vector<Scalar> coeffs(rank, Scalar::zero(ring));
  coeffs[i - 1] = Scalar::one(ring);
  return Functional(rank, std::move(coeffs));
}

Tensor apply_t(const Tensor& t_in) {
  Tensor out(t_in.rank(), t_in.ring());
  for (const auto& [w, c] : t_in.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      out.add(to_front(w, i), i % 2 == 0 ? c : -c);
    }
  }
  return out;
}

Tensor apply_t_prime(const Tensor& t_in) {
  Tensor out(t_in.rank(), t_in.ring());
  for (const auto& [w, c] : t_in.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      out.add(to_front(w, i), c);
    }
  }
  return out;
}

Tensor apply_tN_prime(const Tensor& t_in, int N) {
  if (N < 1) fail(errc::bad_n, "N must be >= 1");
  Tensor out(t_in.rank(), t_in.ring());
  const std::size_t n = std::size_t(N);
  for (const auto& [w, c] : t_in.terms()) {
    if (w.size() < n) continue;
    // iterate over increasing index tuples 0 <= i_1 < ... < i_N < k
    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j) idx[j] = j;
    while (true) {
      Word moved;
      moved.reserve(w.size());
      for (std::size_t j : idx) moved.push_back(w[j]);
      std::size_t next = 0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (next < n && idx[next] == j) {
          ++next;
          continue;
        }
        moved.push_back(w[j]);
      }
      out.add(moved, c);
      // advance combination
      std::size_t j = n;
      while (j > 0 && idx[j - 1] == w.size() - n + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t l = j; l < n; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  return out;
}

Tensor apply_partial(const Functional& g, const Tensor& t_in) {
  check_functional(g, t_in);
  Tensor out(t_in.rank(), t_in.ring());
  for (const auto& [w, c] : t_in.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Scalar& gv = g(w[i]);
      if (gv.is_zero()) continue;
      Scalar coeff = gv * c;
      out.add(without(w, i), i % 2 == 0 ? coeff : -coeff);
    }
  }
  return out;
}

Tensor apply_partial_prime(const Functional& g, const Tensor& t_in) {
  check_functional(g, t_in);
  Tensor out(t_in.rank(), t_in.ring());
  for (const auto& [w, c] : t_in.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Scalar& gv = g(w[i]);
      if (gv.is_zero()) continue;
      out.add(without(w, i), gv * c);
    }
  }
  return out;
}

Tensor apply_cg(const Functional& g, const Tensor& t_in) {
  check_functional(g, t_in);
  Tensor out(t_in.rank(), t_in.ring());
  for (const auto& [w, c] : t_in.terms()) {
    if (w.empty()) continue;
    const Scalar& gv = g(w[0]);
    if (gv.is_zero()) continue;
    out.add(Word(w.begin() + 1, w.end()), gv * c);
  }
  return out;
}

Tensor scomm(const Tensor& a, const Tensor& b) {
  a.check_compatible(b);
  Tensor out(a.rank(), a.ring());
  // sign depends only on the parities of the word lengths
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      Scalar c = cu * cv;
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out.add(uv, c);
      Word vu = v;
      vu.insert(vu.end(), u.begin(), u.end());
      bool sign_neg = (u.size() % 2 == 1) && (v.size() % 2 == 1);
      out.add(vu, sign_neg ? c : -c);
    }
  }
  return out;
}

Tensor comm(const Tensor& a, const Tensor& b) {
  a.check_compatible(b);
  return a * b - b * a;
}

}  // namespace rtt

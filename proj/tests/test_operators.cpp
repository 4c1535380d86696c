#include "doctest.h"
#include "test_support.hpp"

using namespace rtt;
using rtt_test::TestRng;

namespace {

const RingSpec QQ{RingKind::RationalField, 0};

Tensor qt(const char* text, int rank = 2) { return parse_tensor(text, rank, QQ); }

Scalar sign_of(const RingSpec& ring, int n) {
  return n % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring);
}

// v_1 ⊗ ... ⊗ v_k -> v_1 * U * (v_2 ⊗ ... ⊗ v_k); only needed to state the
// t(UV) product rule, so it lives here rather than in the library
Tensor insert_behind_head(const Tensor& u, const Tensor& v) {
  Tensor out(u.rank(), u.ring());
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;
    Tensor head = Tensor::basis_word(u.rank(), u.ring(), Word{w[0]});
    Tensor tail = Tensor::basis_word(u.rank(), u.ring(), Word(w.begin() + 1, w.end()));
    out += (head * u * tail).scaled(c);
  }
  return out;
}

Tensor tensor_pow(const Tensor& x, int i) {
  Tensor acc = Tensor::unit(x.rank(), x.ring());
  for (int k = 0; k < i; ++k) acc = acc * x;
  return acc;
}

}  // namespace

TEST_CASE("apply_t on the defining examples") {
  CHECK(apply_t(Tensor::unit(2, QQ)).is_zero());
  CHECK(apply_t(qt("[1,2]")) == qt("[1,2] - [2,1]"));
  CHECK(apply_t(qt("[1,1]")).is_zero());
  CHECK(apply_t(qt("[1,2,3]", 3)) == qt("[1,2,3] - [2,1,3] + [3,1,2]", 3));
}

TEST_CASE("apply_t_prime on the defining examples") {
  CHECK(apply_t_prime(qt("[1]")) == qt("[1]"));
  CHECK(apply_t_prime(qt("[1,2]")) == qt("[1,2] + [2,1]"));
  CHECK(apply_t_prime(qt("[1,1]")) == qt("2*[1,1]"));
  RingSpec f3 = ring_parse("fp:3");
  CHECK(apply_t_prime(parse_tensor("[1,1,1]", 1, f3)).is_zero());
}

TEST_CASE("apply_tN_prime enumerates increasing tuples") {
  CHECK(apply_tN_prime(qt("[1,2]"), 1) == apply_t_prime(qt("[1,2]")));
  CHECK(apply_tN_prime(qt("[1,2]"), 2) == qt("[1,2]"));
  CHECK(apply_tN_prime(qt("[1,2,3]", 3), 2) == qt("[1,2,3] + [1,3,2] + [2,3,1]", 3));
  CHECK(apply_tN_prime(qt("[1,2]"), 3).is_zero());  // word shorter than N
  CHECK_THROWS_AS(apply_tN_prime(qt("[1]"), 0), Error);
}

TEST_CASE("interior products on the defining examples") {
  Functional e1 = Functional::dual_basis(2, QQ, 1);
  CHECK(apply_partial(e1, qt("[1,2]")) == qt("[2]"));
  CHECK(apply_partial(e1, qt("[2,1]")) == qt("-[2]"));
  CHECK(apply_partial(e1, qt("[1,1]")).is_zero());
  CHECK(apply_partial_prime(e1, qt("[1,1]")) == qt("2*[1]"));
  CHECK(apply_partial_prime(e1, parse_tensor("[1,1,1]", 2, QQ)) == qt("3*[1,1]"));
  CHECK(apply_partial_prime(e1, Tensor::unit(2, QQ)).is_zero());
  CHECK(apply_cg(e1, qt("[1,2]")) == qt("[2]"));
  CHECK(apply_cg(e1, qt("[2,1]")).is_zero());
  CHECK(apply_cg(e1, Tensor::unit(2, QQ)).is_zero());
  CHECK_THROWS_AS(apply_partial(e1, qt("[1]", 3)), Error);
}

TEST_CASE("brackets on the defining examples") {
  CHECK(scomm(qt("[1]"), qt("[2]")) == qt("[1,2] + [2,1]"));
  CHECK(scomm(qt("[1]"), qt("[1]")) == qt("2*[1,1]"));
  CHECK(scomm(qt("[1,2]"), qt("[1]")) == qt("[1,2,1] - [1,1,2]"));
  CHECK(comm(qt("[1]"), qt("[2]")) == qt("[1,2] - [2,1]"));
  Tensor a = qt("[1,2] + 2*[1]");
  CHECK(comm(a, a).is_zero());
  Tensor e1 = qt("[1]", 3), e2 = qt("[2]", 3), e3 = qt("[3]", 3);
  CHECK((comm(e1, comm(e2, e3)) - comm(comm(e1, e2), e3) - comm(e2, comm(e1, e3))).is_zero());
}

TEST_CASE("operators are graded maps") {
  TestRng rng(21);
  for (int i = 0; i < 100; ++i) {
    int k = rng.range(1, 4);
    Tensor u = rng.homogeneous(3, QQ, k, 3);
    Functional g = rng.functional(3, QQ);
    int deg = -1;
    Tensor tu = apply_t(u);
    CHECK(tu.is_homogeneous(&deg));
    if (!tu.is_zero()) CHECK(deg == k);
    Tensor tpu = apply_t_prime(u);
    CHECK(tpu.is_homogeneous(&deg));
    if (!tpu.is_zero()) CHECK(deg == k);
    Tensor du = apply_partial(g, u);
    CHECK(du.is_homogeneous(&deg));
    if (!du.is_zero()) CHECK(deg == k - 1);
    Tensor dpu = apply_partial_prime(g, u);
    CHECK(dpu.is_homogeneous(&deg));
    if (!dpu.is_zero()) CHECK(deg == k - 1);
  }
}

TEST_CASE("interior products factor through the front cut") {
  for (const RingSpec& ring :
       {QQ, RingSpec{RingKind::IntegerRing, 0}, ring_parse("fp:2"), ring_parse("fp:5")}) {
    TestRng rng(31);
    for (int i = 0; i < 200; ++i) {
      Functional g = rng.functional(2, ring);
      Tensor u = rng.tensor(2, ring, 4, 3);
      CHECK(apply_partial(g, u) == apply_cg(g, apply_t(u)));
      CHECK(apply_partial_prime(g, u) == apply_cg(g, apply_t_prime(u)));
    }
  }
}

TEST_CASE("derivation laws") {
  for (const RingSpec& ring : {QQ, RingSpec{RingKind::IntegerRing, 0}, ring_parse("fp:3")}) {
    TestRng rng(41);
    for (int i = 0; i < 200; ++i) {
      Functional g = rng.functional(2, ring);
      int n = rng.range(0, 3);
      Tensor a = rng.homogeneous(2, ring, n, 2);
      Tensor b = rng.tensor(2, ring, 3, 2);
      CHECK(apply_partial(g, a * b) ==
            apply_partial(g, a) * b + (a * apply_partial(g, b)).scaled(sign_of(ring, n)));
      Tensor c = rng.tensor(2, ring, 3, 2);
      CHECK(apply_partial_prime(g, b * c) ==
            apply_partial_prime(g, b) * c + b * apply_partial_prime(g, c));
    }
  }
}

TEST_CASE("super-Leibniz and super-Jacobi") {
  TestRng rng(51);
  for (int i = 0; i < 200; ++i) {
    int n = rng.range(0, 3), m = rng.range(0, 3);
    Tensor u = rng.homogeneous(2, QQ, n, 2);
    Tensor v = rng.homogeneous(2, QQ, m, 2);
    Tensor w = rng.tensor(2, QQ, 3, 2);
    CHECK(scomm(u, v * w) == scomm(u, v) * w + (v * scomm(u, w)).scaled(sign_of(QQ, n * m)));
    CHECK(scomm(u, scomm(v, w)) ==
          scomm(scomm(u, v), w) + scomm(v, scomm(u, w)).scaled(sign_of(QQ, n * m)));
  }
}

TEST_CASE("plain Leibniz and Jacobi") {
  TestRng rng(61);
  for (int i = 0; i < 200; ++i) {
    Tensor u = rng.tensor(2, QQ, 3, 2);
    Tensor v = rng.tensor(2, QQ, 3, 2);
    Tensor w = rng.tensor(2, QQ, 3, 2);
    CHECK(comm(u, v * w) == comm(u, v) * w + v * comm(u, w));
    CHECK(comm(u, comm(v, w)) == comm(comm(u, v), w) + comm(v, comm(u, w)));
  }
}

TEST_CASE("product rule for t") {
  for (const RingSpec& ring : {QQ, RingSpec{RingKind::IntegerRing, 0}, ring_parse("fp:2")}) {
    TestRng rng(71);
    for (int i = 0; i < 200; ++i) {
      int n = rng.range(0, 3);
      Tensor u = rng.homogeneous(2, ring, n, 2);
      Tensor v = rng.tensor(2, ring, 3, 2);
      CHECK(apply_t(u * v) ==
            apply_t(u) * v + insert_behind_head(u, apply_t(v)).scaled(sign_of(ring, n)));
    }
  }
}

TEST_CASE("bracketing with a square iterates the bracket") {
  TestRng rng(81);
  for (int i = 0; i < 200; ++i) {
    Tensor u = rng.tensor(2, QQ, 3, 2);
    Tensor x = Tensor::basis_word(2, QQ, Word{std::uint32_t(rng.range(1, 2))});
    CHECK(scomm(u, x * x) == scomm(scomm(u, x), x));
  }
}

TEST_CASE("ad_(a^p) equals ad_a iterated p times in characteristic p") {
  for (long long p : {2, 3, 5}) {
    RingSpec ring = ring_parse("fp:" + std::to_string(p));
    TestRng rng(91);
    for (int i = 0; i < 100; ++i) {
      Tensor a = rng.tensor(2, ring, 2, 2);
      Tensor c = rng.tensor(2, ring, 2, 2);
      Tensor lhs = comm(tensor_pow(a, int(p)), c);
      Tensor rhs = c;
      for (int k = 0; k < int(p); ++k) rhs = comm(a, rhs);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("t' acts on powers of a line element by the degree") {
  TestRng rng(101);
  for (int i = 0; i < 100; ++i) {
    Tensor x(2, QQ);
    for (int j = 1; j <= 2; ++j) x.add(Word{std::uint32_t(j)}, rng.scalar(QQ));
    int e = rng.range(1, 6);
    Tensor xe = tensor_pow(x, e);
    CHECK(apply_t_prime(xe) == xe.scaled(Scalar::of(QQ, e)));
  }
}

#include "doctest.h"
#include "json.hpp"
#include "rtt/verify.hpp"
#include "test_support.hpp"

using namespace rtt;

namespace {
const RingSpec QQ{RingKind::RationalField, 0};
const RingSpec ZZ{RingKind::IntegerRing, 0};

std::string json_without_elapsed(const VerificationReport& r) {
  auto j = nlohmann::json::parse(r.to_json());
  j.erase("elapsed_ms");
  return j.dump();
}
}  // namespace

TEST_CASE("kert campaign at rank 1 reproduces the alternating kernel") {
  VerificationReport r = verify_kert(1, QQ, 3);
  CHECK(r.pass());
  REQUIRE(r.rows.size() == 4);
  // kernel dims 1,0,1,0: 1x1 matrices (0),(1),(0),(1) give t on x^d
  CHECK(r.rows[0].lhs == 1);
  CHECK(r.rows[1].lhs == 0);
  CHECK(r.rows[2].lhs == 1);
  CHECK(r.rows[3].lhs == 0);
  for (const auto& row : r.rows) CHECK(row.lhs == row.rhs);
}

TEST_CASE("kert campaign at rank 2 over several rings") {
  for (const RingSpec& ring : {QQ, ZZ, ring_parse("fp:2")}) {
    VerificationReport r = verify_kert(2, ring, 4);
    CHECK(r.pass());
    CHECK(r.rows[2].lhs == 3);  // degree-2 kernel dimension
    CHECK(r.rows[2].rhs == 3);
  }
}

TEST_CASE("kert-prime over qq and zz, with the degree-2 lattice witness") {
  VerificationReport rq = verify_kert_prime(2, QQ, 4);
  CHECK(rq.pass());
  CHECK(rq.rows[2].lhs == 1);

  VerificationReport rz = verify_kert_prime(2, ZZ, 4);
  CHECK(rz.pass());

  // the degree-2 kernel lattice is exactly Z*(e1e2 - e2e1)
  GradedSpan k = matrix_kernel(operator_matrix(OperatorTag::t_prime, 2, ZZ, 2));
  REQUIRE(k.dim(2) == 1);
  Row expected{Scalar::of(ZZ, 0), Scalar::of(ZZ, 1), Scalar::of(ZZ, -1), Scalar::of(ZZ, 0)};
  CHECK(k.component(2)[0] == expected);

  CHECK_THROWS_AS(verify_kert_prime(2, ring_parse("fp:2"), 4), Error);
}

TEST_CASE("kert-prime-fp campaigns") {
  VerificationReport r2 = verify_kert_prime_modp(2, 2, 4);
  CHECK(r2.pass());
  CHECK(r2.rows[2].lhs == 3);

  VerificationReport r1 = verify_kert_prime_modp(1, 3, 3);
  CHECK(r1.pass());
  REQUIRE(r1.rows.size() == 4);
  CHECK(r1.rows[1].lhs == 0);
  CHECK(r1.rows[2].lhs == 0);
  CHECK(r1.rows[3].lhs == 1);  // 1x1 matrix (3) = (0) mod 3

  CHECK_THROWS_AS(verify_kert_prime_modp(2, 4, 4), Error);
}

TEST_CASE("identity suite passes and rejects cases = 0") {
  VerificationReport r = verify_identity_suite(2, QQ, 50, 42);
  CHECK(r.pass());
  CHECK(r.rows.size() >= 10);
  VerificationReport rp = verify_identity_suite(3, ring_parse("fp:5"), 30, 42);
  CHECK(rp.pass());
  bool has_adp = false;
  for (const auto& row : rp.rows) has_adp = has_adp || row.label == "ad_{a^p} = (ad_a)^p";
  CHECK(has_adp);
  CHECK_THROWS_AS(verify_identity_suite(2, QQ, 0, 42), Error);
}

TEST_CASE("inclusion suite passes over qq and fp:2") {
  CHECK(verify_inclusion_suite(2, QQ, 4).pass());
  VerificationReport r = verify_inclusion_suite(2, ring_parse("fp:2"), 4);
  CHECK(r.pass());
  bool has_fp_rows = false;
  for (const auto& row : r.rows) has_fp_rows = has_fp_rows || row.label == "P_p in Ker t'";
  CHECK(has_fp_rows);
}

TEST_CASE("witt dimensions") {
  CHECK(witt_dimensions(2, 5) == std::vector<long long>{2, 1, 2, 3, 6});
  CHECK(witt_dimensions(1, 5) == std::vector<long long>{1, 0, 0, 0, 0});
  CHECK(witt_dimensions(3, 2) == std::vector<long long>{3, 3});

  // independent Moebius-sum oracle
  auto moebius = [](int m) {
    int out = 1;
    for (int q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        m /= q;
        if (m % q == 0) return 0;
        out = -out;
      }
    }
    return m > 1 ? -out : out;
  };
  for (int rank : {2, 3}) {
    auto dims = witt_dimensions(rank, 5);
    for (int d = 1; d <= 5; ++d) {
      long long sum = 0;
      for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        long long pw = 1;
        for (int i = 0; i < e; ++i) pw *= rank;
        sum += moebius(d / e) * pw;
      }
      CHECK(dims[std::size_t(d - 1)] == sum / d);
    }
  }

  // unsigned tower dimensions over qq agree with the Witt numbers
  for (int rank : {2, 3}) {
    auto tower = build_lie_components(rank, QQ, false, 5);
    auto dims = witt_dimensions(rank, 5);
    for (int d = 1; d <= 5; ++d) CHECK(tower[std::size_t(d - 1)].dim(d) == dims[std::size_t(d - 1)]);
  }
}

TEST_CASE("pang decomposition over qq") {
  VerificationReport r = verify_pang(2, 3);
  CHECK(r.pass());
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].lhs == 1);
  CHECK(r.rows[2].lhs == 4);  // sym_2 (3) + Ker_2 (1) fill the 4-dim space
  for (const auto& row : r.rows) CHECK(row.rhs == (1 << row.degree));
}

TEST_CASE("kn experiment") {
  VerificationReport r1 = verify_kn(2, 1, 4);
  CHECK(r1.pass());
  CHECK(r1.experimental);
  VerificationReport rp = verify_kert_prime(2, QQ, 4);
  REQUIRE(r1.rows.size() == rp.rows.size());
  for (std::size_t i = 0; i < r1.rows.size(); ++i) CHECK(r1.rows[i].lhs == rp.rows[i].lhs);

  VerificationReport r2 = verify_kn(2, 2, 4);
  CHECK(r2.pass());
  // degree-3 row: the stacked kernel against L'_3, both of dimension 2
  CHECK(r2.rows[3].lhs == 2);
  CHECK(r2.rows[3].rhs == 2);
  CHECK_THROWS_AS(verify_kn(2, 0, 3), Error);
}

TEST_CASE("reports are self-consistent and deterministic") {
  VerificationReport a = verify_kert(2, QQ, 3);
  bool conj = true;
  for (const auto& row : a.rows) conj = conj && row.equal;
  CHECK(a.pass() == conj);

  VerificationReport b = verify_kert(2, QQ, 3);
  CHECK(json_without_elapsed(a) == json_without_elapsed(b));

  VerificationReport s1 = verify_identity_suite(2, QQ, 25, 7);
  VerificationReport s2 = verify_identity_suite(2, QQ, 25, 7);
  CHECK(json_without_elapsed(s1) == json_without_elapsed(s2));

  auto j = nlohmann::json::parse(a.to_json());
  CHECK(j["campaign"] == "kert");
  CHECK(j["ring"] == "qq");
  CHECK(j["rank"] == 2);
  CHECK(j["max_degree"] == 3);
  CHECK(j["pass"] == true);
  CHECK(j["rows"].is_array());
  CHECK(j["rows"].size() == 4);
  for (const auto& row : j["rows"]) {
    CHECK(row.contains("degree"));
    CHECK(row.contains("lhs"));
    CHECK(row.contains("rhs"));
    CHECK(row.contains("equal"));
  }
}

TEST_CASE("cross-ring coherence: lattice equality implies vector-space equality") {
  VerificationReport rz = verify_kert(2, ZZ, 4);
  VerificationReport rq = verify_kert(2, QQ, 4);
  REQUIRE(rz.rows.size() == rq.rows.size());
  for (std::size_t i = 0; i < rz.rows.size(); ++i) {
    if (rz.rows[i].equal) CHECK(rq.rows[i].equal);
  }
}

TEST_CASE("specialization can only grow kernels") {
  for (long long p : {2, 3}) {
    RingSpec fp = ring_parse("fp:" + std::to_string(p));
    for (int d = 0; d <= 4; ++d) {
      long long dim_p = matrix_kernel(operator_matrix(OperatorTag::t_prime, 2, fp, d)).dim(d);
      long long dim_q = matrix_kernel(operator_matrix(OperatorTag::t_prime, 2, QQ, d)).dim(d);
      CHECK(dim_p >= dim_q);
    }
  }
}

#include "rtt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace rtt {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

GradedSpan l_span(int rank, const RingSpec& ring, int max_degree) {
  GradedSpan s(rank, ring, max_degree);
  if (max_degree < 1) return s;
  std::vector<Row> rows;
  for (int j = 0; j < rank; ++j) {
    Row e(std::size_t(rank), Scalar::zero(ring));
    e[std::size_t(j)] = Scalar::one(ring);
    rows.push_back(std::move(e));
  }
  s.add_rows(1, std::move(rows));
  return s;
}

GradedSpan unit_span(int rank, const RingSpec& ring, int max_degree) {
  GradedSpan s(rank, ring, max_degree);
  s.add_rows(0, {Row{Scalar::one(ring)}});
  return s;
}

// x^power generators as a span padded to max_degree (empty when power is
// out of reach)
GradedSpan powers_span(int rank, const RingSpec& ring, int power, int max_degree) {
  GradedSpan s(rank, ring, max_degree);
  if (power <= max_degree) s.add_rows(power, build_squares_span(rank, ring, power).component(power));
  return s;
}

}  // namespace

GradedSpan gbar_span(int rank, const RingSpec& ring, bool signed_bracket, int max_degree) {
  GradedSpan g(rank, ring, max_degree);
  if (max_degree < 2) return g;
  auto tower = build_lie_components(rank, ring, signed_bracket, max_degree);
  for (int i = 2; i <= max_degree; ++i) g.add_rows(i, tower[std::size_t(i - 1)].component(i));
  return g;
}

GradedSpan h_span(int rank, const RingSpec& ring, int max_degree) {
  GradedSpan h = gbar_span(rank, ring, true, max_degree);
  if (max_degree >= 2) h.add_rows(2, build_squares_span(rank, ring, 2).component(2));
  return h;
}

bool VerificationReport::pass() const {
  for (const auto& r : rows)
    if (!r.equal) return false;
  return true;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::json j;
  j["campaign"] = campaign;
  j["ring"] = ring.str();
  j["rank"] = rank;
  j["max_degree"] = max_degree;
  if (experimental) j["experimental"] = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"degree", r.degree}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal}});
  }
  j["rows"] = arr;
  j["pass"] = pass();
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(indent);
}

std::string VerificationReport::to_table() const {
  std::ostringstream out;
  out << "campaign    " << campaign << "\n";
  out << "ring        " << ring.str() << "\n";
  out << "rank        " << rank << "\n";
  out << "max degree  " << max_degree << "\n";
  if (experimental) out << "status      experimental\n";
  bool labeled = false;
  for (const auto& r : rows)
    if (!r.label.empty()) labeled = true;
  out << (labeled ? "  #" : "  degree") << "   lhs   rhs  equal\n";
  for (const auto& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%7d %5lld %5lld  %s", r.degree, r.lhs, r.rhs,
                  r.equal ? "yes" : "NO");
    out << buf;
    if (!r.label.empty()) out << "   " << r.label;
    out << "\n";
  }
  out << "pass        " << (pass() ? "yes" : "no") << "\n";
  out << "elapsed_ms  " << elapsed_ms << "\n";
  return out.str();
}

namespace {

void compare_spans_per_degree(VerificationReport& report, const GradedSpan& lhs,
                              const GradedSpan& rhs) {
  for (int d = 0; d <= report.max_degree; ++d) {
    bool eq = lhs.component(d) == rhs.component(d);
    report.rows.push_back({d, lhs.dim(d), rhs.dim(d), eq, ""});
  }
}

}  // namespace

VerificationReport verify_kert(int rank, const RingSpec& ring, int max_degree) {
  auto start = Clock::now();
  VerificationReport report{"kert", ring, rank, max_degree};
  GradedSpan kernel = kernel_span(OperatorTag::t, rank, ring, max_degree);
  GradedSpan closure = subalgebra_closure(h_span(rank, ring, max_degree), max_degree);
  compare_spans_per_degree(report, kernel, closure);
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_kert_prime(int rank, const RingSpec& ring, int max_degree) {
  if (ring.kind == RingKind::PrimeField)
    fail(errc::unsupported_ring,
         "kert-prime applies to torsionfree coefficients only (use kert-prime-fp for F_p)");
  auto start = Clock::now();
  VerificationReport report{"kert-prime", ring, rank, max_degree};
  GradedSpan kernel = kernel_span(OperatorTag::t_prime, rank, ring, max_degree);
  GradedSpan closure =
      subalgebra_closure(gbar_span(rank, ring, false, max_degree), max_degree);
  compare_spans_per_degree(report, kernel, closure);
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_kert_prime_modp(int rank, std::int64_t p, int max_degree) {
  if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(std::uint64_t(p)))
    fail(errc::not_prime, "p must be a prime < 2^31");
  RingSpec ring{RingKind::PrimeField, p};
  auto start = Clock::now();
  VerificationReport report{"kert-prime-fp", ring, rank, max_degree};
  GradedSpan kernel = kernel_span(OperatorTag::t_prime, rank, ring, max_degree);
  GradedSpan gen = gbar_span(rank, ring, false, max_degree);
  if (p <= max_degree)
    gen.add_rows(int(p), build_squares_span(rank, ring, int(p)).component(int(p)));
  GradedSpan closure = subalgebra_closure(gen, max_degree);
  compare_spans_per_degree(report, kernel, closure);
  report.elapsed_ms = ms_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// identity suite
// ---------------------------------------------------------------------------

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  // raw engine + modulo keeps the stream identical across standard libraries
  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
  int range(int lo, int hi) { return lo + int(next(std::uint64_t(hi - lo + 1))); }

  Scalar scalar(const RingSpec& ring) {
    if (ring.kind == RingKind::PrimeField) return Scalar::of(ring, range(0, int(ring.p) - 1));
    if (ring.kind == RingKind::RationalField && next(4) == 0)
      return Scalar::fraction(ring, range(-6, 6), range(1, 4));
    return Scalar::of(ring, range(-6, 6));
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

  Tensor homogeneous(int rank, const RingSpec& ring, int deg, int terms) {
    Tensor t(rank, ring);
    for (int i = 0; i < terms; ++i) t.add(word(rank, deg), nonzero_scalar(ring));
    return t;
  }

  Tensor tensor(int rank, const RingSpec& ring, int max_deg, int terms) {
    Tensor t(rank, ring);
    for (int i = 0; i < terms; ++i) t.add(word(rank, range(0, max_deg)), nonzero_scalar(ring));
    return t;
  }

  Tensor line_element(int rank, const RingSpec& ring) {  // random element of L
    Tensor t(rank, ring);
    for (int j = 1; j <= rank; ++j) t.add(Word{std::uint32_t(j)}, scalar(ring));
    return t;
  }

  Functional functional(int rank, const RingSpec& ring) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(std::size_t(rank));
    for (int j = 0; j < rank; ++j) coeffs.push_back(scalar(ring));
    return Functional(rank, std::move(coeffs));
  }
};

Scalar parity_sign(const RingSpec& ring, int degree) {
  return degree % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring);
}

// v_1 ⊗ ... ⊗ v_k  |->  v_1 * U * (v_2 ⊗ ... ⊗ v_k); proof scaffolding for
// the t(UV) product rule, deliberately not part of the public operator API
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

VerificationReport verify_identity_suite(int rank, const RingSpec& ring, int cases,
                                         std::uint64_t seed) {
  if (cases < 1) fail(errc::bad_argument, "cases must be >= 1");
  if (rank < 1) fail(errc::bad_argument, "rank must be positive");
  auto start = Clock::now();
  VerificationReport report{"identities", ring, rank, 0};
  Rng rng(seed);

  struct Check {
    std::string label;
    bool fp_only = false;
    std::function<bool(Rng&)> trial;
  };

  std::vector<Check> checks;

  checks.push_back({"partial = cg . t", false, [&](Rng& r) {
    Functional g = r.functional(rank, ring);
    Tensor u = r.tensor(rank, ring, 4, 3);
    return apply_partial(g, u) == apply_cg(g, apply_t(u));
  }});

  checks.push_back({"partial' = cg . t'", false, [&](Rng& r) {
    Functional g = r.functional(rank, ring);
    Tensor u = r.tensor(rank, ring, 4, 3);
    return apply_partial_prime(g, u) == apply_cg(g, apply_t_prime(u));
  }});

  checks.push_back({"superderivation law", false, [&](Rng& r) {
    Functional g = r.functional(rank, ring);
    int n = r.range(0, 3);
    Tensor a = r.homogeneous(rank, ring, n, 2);
    Tensor b = r.tensor(rank, ring, 3, 2);
    Tensor lhs = apply_partial(g, a * b);
    Tensor rhs = apply_partial(g, a) * b + (a * apply_partial(g, b)).scaled(parity_sign(ring, n));
    return lhs == rhs;
  }});

  checks.push_back({"derivation law", false, [&](Rng& r) {
    Functional g = r.functional(rank, ring);
    Tensor a = r.tensor(rank, ring, 3, 2);
    Tensor b = r.tensor(rank, ring, 3, 2);
    return apply_partial_prime(g, a * b) ==
           apply_partial_prime(g, a) * b + a * apply_partial_prime(g, b);
  }});

  checks.push_back({"super-Leibniz", false, [&](Rng& r) {
    int n = r.range(0, 3), m = r.range(0, 3);
    Tensor u = r.homogeneous(rank, ring, n, 2);
    Tensor v = r.homogeneous(rank, ring, m, 2);
    Tensor w = r.tensor(rank, ring, 3, 2);
    Tensor lhs = scomm(u, v * w);
    Tensor rhs = scomm(u, v) * w + (v * scomm(u, w)).scaled(parity_sign(ring, n * m));
    return lhs == rhs;
  }});

  checks.push_back({"super-Jacobi", false, [&](Rng& r) {
    int n = r.range(0, 3), m = r.range(0, 3);
    Tensor u = r.homogeneous(rank, ring, n, 2);
    Tensor v = r.homogeneous(rank, ring, m, 2);
    Tensor w = r.tensor(rank, ring, 3, 2);
    Tensor lhs = scomm(u, scomm(v, w));
    Tensor rhs = scomm(scomm(u, v), w) + scomm(v, scomm(u, w)).scaled(parity_sign(ring, n * m));
    return lhs == rhs;
  }});

  checks.push_back({"Leibniz", false, [&](Rng& r) {
    Tensor u = r.tensor(rank, ring, 3, 2);
    Tensor v = r.tensor(rank, ring, 3, 2);
    Tensor w = r.tensor(rank, ring, 3, 2);
    return comm(u, v * w) == comm(u, v) * w + v * comm(u, w);
  }});

  checks.push_back({"Jacobi", false, [&](Rng& r) {
    Tensor u = r.tensor(rank, ring, 3, 2);
    Tensor v = r.tensor(rank, ring, 3, 2);
    Tensor w = r.tensor(rank, ring, 3, 2);
    return comm(u, comm(v, w)) == comm(comm(u, v), w) + comm(v, comm(u, w));
  }});

  checks.push_back({"product rule for t", false, [&](Rng& r) {
    int n = r.range(0, 3);
    Tensor u = r.homogeneous(rank, ring, n, 2);
    Tensor v = r.tensor(rank, ring, 3, 2);
    Tensor lhs = apply_t(u * v);
    Tensor rhs = apply_t(u) * v + insert_behind_head(u, apply_t(v)).scaled(parity_sign(ring, n));
    return lhs == rhs;
  }});

  checks.push_back({"bracket with a square", false, [&](Rng& r) {
    Tensor u = r.tensor(rank, ring, 3, 2);
    Tensor x = Tensor::basis_word(rank, ring, Word{std::uint32_t(r.range(1, rank))});
    return scomm(u, x * x) == scomm(scomm(u, x), x);
  }});

  checks.push_back({"t'(x^i) = i x^i", false, [&](Rng& r) {
    Tensor x = r.line_element(rank, ring);
    int i = r.range(1, 6);
    Tensor xi = tensor_pow(x, i);
    return apply_t_prime(xi) == xi.scaled(Scalar::of(ring, i));
  }});

  checks.push_back({"graded images", false, [&](Rng& r) {
    int k = r.range(1, 4);
    Tensor u = r.homogeneous(rank, ring, k, 3);
    Functional g = r.functional(rank, ring);
    int deg = 0;
    bool ok = apply_t(u).is_homogeneous(&deg) && (apply_t(u).is_zero() || deg == k);
    ok = ok && apply_t_prime(u).is_homogeneous(&deg) && (apply_t_prime(u).is_zero() || deg == k);
    Tensor du = apply_partial(g, u);
    ok = ok && du.is_homogeneous(&deg) && (du.is_zero() || deg == k - 1);
    Tensor dpu = apply_partial_prime(g, u);
    ok = ok && dpu.is_homogeneous(&deg) && (dpu.is_zero() || deg == k - 1);
    return ok;
  }});

  checks.push_back({"ad_{a^p} = (ad_a)^p", true, [&](Rng& r) {
    Tensor a = r.tensor(rank, ring, 2, 2);
    Tensor c = r.tensor(rank, ring, 2, 2);
    Tensor lhs = comm(tensor_pow(a, int(ring.p)), c);
    Tensor rhs = c;
    for (int i = 0; i < int(ring.p); ++i) rhs = comm(a, rhs);
    return lhs == rhs;
  }});

  int index = 0;
  for (const auto& check : checks) {
    ++index;
    if (check.fp_only && ring.kind != RingKind::PrimeField) continue;
    long long passed = 0;
    for (int i = 0; i < cases; ++i) {
      if (check.trial(rng)) ++passed;
    }
    report.rows.push_back({index, cases, passed, passed == cases, check.label});
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// inclusion suite
// ---------------------------------------------------------------------------

VerificationReport verify_inclusion_suite(int rank, const RingSpec& ring, int max_degree) {
  if (max_degree < 1) fail(errc::bad_argument, "max_degree must be >= 1");
  auto start = Clock::now();
  VerificationReport report{"inclusions", ring, rank, max_degree};
  const int D = max_degree;

  GradedSpan L = l_span(rank, ring, D);
  GradedSpan unit = unit_span(rank, ring, D);
  auto tower_s = build_lie_components(rank, ring, true, D);
  auto tower_u = build_lie_components(rank, ring, false, D);
  GradedSpan gbar = gbar_span(rank, ring, true, D);
  GradedSpan P = powers_span(rank, ring, 2, D);
  GradedSpan h = h_span(rank, ring, D);
  GradedSpan gbar_u = gbar_span(rank, ring, false, D);
  GradedSpan kt = kernel_span(OperatorTag::t, rank, ring, D);
  GradedSpan ktp = kernel_span(OperatorTag::t_prime, rank, ring, D);
  GradedSpan gbar_plus_L = span_sum(gbar, L);
  GradedSpan h_plus_L = span_sum(h, L);
  GradedSpan gbar_u_plus_L = span_sum(gbar_u, L);

  int index = 0;
  auto add = [&](const std::string& label, const GradedSpan& a, const GradedSpan& b) {
    report.rows.push_back({++index, a.total_dim(), b.total_dim(), span_subset(a, b), label});
  };

  // signed family
  add("unit in Ker t", unit, kt);
  add("Ker t * Ker t in Ker t", span_product(kt, kt, D), kt);
  add("[L,L]s in Ker t", bracket_span(L, L, true, D), kt);
  add("[L,Ker t]s in Ker t", bracket_span(L, kt, true, D), kt);
  add("P in Ker t", P, kt);
  {
    bool pure = true;
    long long total = 0;
    for (int i = 1; i <= D; ++i) {
      const GradedSpan& li = tower_s[std::size_t(i - 1)];
      pure = pure && li.total_dim() == li.dim(i);
      total += li.total_dim();
    }
    report.rows.push_back({++index, total, total, pure, "L_i inside degree i"});
  }
  add("[L,gbar]s in gbar", bracket_span(L, gbar, true, D), gbar);
  add("[L,P]s in gbar", bracket_span(L, P, true, D), gbar);
  add("[L,h]s in gbar", bracket_span(L, h, true, D), gbar);
  add("[h,h]s in gbar", bracket_span(h, h, true, D), gbar);
  {
    bool ok = true;
    long long lhs_total = 0, rhs_total = 0;
    for (int i = 1; i <= D; ++i) {
      for (int j = 1; i + j <= D; ++j) {
        GradedSpan br =
            bracket_span(tower_s[std::size_t(i - 1)], tower_s[std::size_t(j - 1)], true, D);
        ok = ok && span_subset(br, tower_s[std::size_t(i + j - 1)]);
        lhs_total += br.total_dim();
        rhs_total += tower_s[std::size_t(i + j - 1)].total_dim();
      }
    }
    report.rows.push_back({++index, lhs_total, rhs_total, ok, "[L_i,L_j]s in L_{i+j}"});
  }
  add("[gbar,gbar]s in gbar", bracket_span(gbar, gbar, true, D), gbar);
  add("[h,h]s in h", bracket_span(h, h, true, D), h);
  add("[gbar+L,gbar+L]s in gbar+L", bracket_span(gbar_plus_L, gbar_plus_L, true, D), gbar_plus_L);
  add("[h+L,h+L]s in h+L", bracket_span(h_plus_L, h_plus_L, true, D), h_plus_L);
  add("closure(h) in Ker t", subalgebra_closure(h, D), kt);

  // unsigned family
  add("unit in Ker t'", unit, ktp);
  add("Ker t' * Ker t' in Ker t'", span_product(ktp, ktp, D), ktp);
  add("[L,L] in Ker t'", bracket_span(L, L, false, D), ktp);
  add("[L,Ker t'] in Ker t'", bracket_span(L, ktp, false, D), ktp);
  add("[L,gbar'] in gbar'", bracket_span(L, gbar_u, false, D), gbar_u);
  {
    bool ok = true;
    long long lhs_total = 0, rhs_total = 0;
    for (int i = 1; i <= D; ++i) {
      for (int j = 1; i + j <= D; ++j) {
        GradedSpan br =
            bracket_span(tower_u[std::size_t(i - 1)], tower_u[std::size_t(j - 1)], false, D);
        ok = ok && span_subset(br, tower_u[std::size_t(i + j - 1)]);
        lhs_total += br.total_dim();
        rhs_total += tower_u[std::size_t(i + j - 1)].total_dim();
      }
    }
    report.rows.push_back({++index, lhs_total, rhs_total, ok, "[L'_i,L'_j] in L'_{i+j}"});
  }
  add("[gbar',gbar'] in gbar'", bracket_span(gbar_u, gbar_u, false, D), gbar_u);
  add("[gbar'+L,gbar'+L] in gbar'+L", bracket_span(gbar_u_plus_L, gbar_u_plus_L, false, D),
      gbar_u_plus_L);
  add("closure(gbar') in Ker t'", subalgebra_closure(gbar_u, D), ktp);

  // partials annihilate Ker t
  {
    long long checked = 0, vanished = 0;
    for (int i = 1; i <= rank; ++i) {
      Functional g = Functional::dual_basis(rank, ring, i);
      for (int d = 0; d <= D; ++d) {
        for (std::size_t v = 0; v < std::size_t(kt.dim(d)); ++v) {
          ++checked;
          if (apply_partial(g, kt.basis_tensor(d, v)).is_zero()) ++vanished;
        }
      }
    }
    report.rows.push_back({++index, checked, vanished, checked == vanished,
                           "partials kill Ker t"});
  }

  if (ring.kind == RingKind::PrimeField) {
    GradedSpan Pp = powers_span(rank, ring, int(ring.p), D);
    GradedSpan hp = span_sum(gbar_u, Pp);
    GradedSpan hp_plus_L = span_sum(hp, L);
    add("P_p in Ker t'", Pp, ktp);
    add("[L,P_p] in gbar'", bracket_span(L, Pp, false, D), gbar_u);
    add("[L,h'_p] in gbar'", bracket_span(L, hp, false, D), gbar_u);
    add("[h'_p,h'_p] in gbar'", bracket_span(hp, hp, false, D), gbar_u);
    add("[h'_p,h'_p] in h'_p", bracket_span(hp, hp, false, D), hp);
    add("[h'_p+L,h'_p+L] in h'_p+L", bracket_span(hp_plus_L, hp_plus_L, false, D), hp_plus_L);
    add("closure(h'_p) in Ker t'", subalgebra_closure(hp, D), ktp);
  }

  report.elapsed_ms = ms_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// dimension cross-checks and experiments
// ---------------------------------------------------------------------------

namespace {

int moebius(int m) {
  int result = 1;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

}  // namespace

std::vector<long long> witt_dimensions(int rank, int max_degree) {
  if (rank < 1) fail(errc::bad_argument, "rank must be positive");
  std::vector<long long> dims;
  for (int d = 1; d <= max_degree; ++d) {
    Integer sum = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      Integer p = 1;
      for (int i = 0; i < e; ++i) p *= rank;
      sum += Integer(moebius(d / e)) * p;
    }
    dims.push_back((sum / d).convert_to<long long>());
  }
  return dims;
}

VerificationReport verify_pang(int rank, int max_degree) {
  RingSpec ring{RingKind::RationalField, 0};
  auto start = Clock::now();
  VerificationReport report{"pang", ring, rank, max_degree};
  GradedSpan kernel = kernel_span(OperatorTag::t_prime, rank, ring, max_degree);

  // orbit sums of words under all position permutations span the
  // symmetric tensors; words group by their letter multiset
  std::vector<GradedSpan> sym;
  for (int k = 0; k <= max_degree; ++k) {
    std::size_t dim = component_dim(rank, k);
    std::map<Word, Row> orbits;
    for (std::size_t idx = 0; idx < dim; ++idx) {
      Word key = index_word(idx, rank, k);
      std::sort(key.begin(), key.end());
      auto it = orbits.try_emplace(key, Row(dim, Scalar::zero(ring))).first;
      it->second[idx] = Scalar::one(ring);
    }
    GradedSpan s(rank, ring, max_degree);
    std::vector<Row> rows;
    rows.reserve(orbits.size());
    for (auto& [key, row] : orbits) rows.push_back(std::move(row));
    s.add_rows(k, std::move(rows));
    sym.push_back(std::move(s));
  }

  for (int d = 0; d <= max_degree; ++d) {
    std::size_t dim = component_dim(rank, d);
    GradedSpan assembled(rank, ring, max_degree);
    for (int k = 0; k <= d; ++k) {
      GradedSpan piece = span_product(sym[std::size_t(k)], kernel, d);
      auto rows = piece.component(d);
      if (!rows.empty()) assembled.add_rows(d, std::move(rows));
    }
    report.rows.push_back(
        {d, assembled.dim(d), (long long)dim, assembled.dim(d) == (long long)dim, ""});
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify_kn(int rank, int N, int max_degree) {
  if (N < 1) fail(errc::bad_n, "N must be >= 1");
  RingSpec ring{RingKind::RationalField, 0};
  auto start = Clock::now();
  VerificationReport report{"kn", ring, rank, max_degree};
  report.experimental = true;

  GradedSpan generated(rank, ring, max_degree);
  if (N + 1 <= max_degree) {
    auto tower = build_lie_components(rank, ring, false, max_degree);
    GradedSpan gen(rank, ring, max_degree);
    for (int i = N + 1; i <= max_degree; ++i)
      gen.add_rows(i, tower[std::size_t(i - 1)].component(i));
    generated = subalgebra_closure(gen, max_degree);
  } else {
    generated = unit_span(rank, ring, max_degree);
  }

  for (int d = 0; d <= max_degree; ++d) {
    std::size_t dim = component_dim(rank, d);
    std::vector<Row> stacked;
    for (int q = 1; q <= std::min(N, d); ++q) {
      OperatorMatrix m = operator_matrix(OperatorTag::tN_prime, rank, ring, d, q);
      for (std::size_t i = 0; i < dim; ++i) {
        Row row(dim, Scalar::zero(ring));
        for (std::size_t j = 0; j < dim; ++j) row[j] = m.cols[j][i];
        stacked.push_back(std::move(row));
      }
    }
    std::vector<Row> kernel = kernel_rows(ring, stacked, dim);
    bool eq = kernel == generated.component(d);
    report.rows.push_back({d, (long long)kernel.size(), generated.dim(d), eq, ""});
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace rtt

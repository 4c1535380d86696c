#include "rtt/span.hpp"

#include <algorithm>

namespace rtt {

namespace {

int leading_col(const Row& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return int(i);
  return -1;
}

// dst -= c * src; c is taken by value because callers pass entries of dst
void row_submul(Row& dst, Scalar c, const Row& src) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!src[i].is_zero()) dst[i] -= c * src[i];
  }
}

void row_scale(Row& v, const Scalar& c) {
  for (auto& x : v)
    if (!x.is_zero()) x *= c;
}

void row_negate(Row& v) {
  for (auto& x : v)
    if (!x.is_zero()) x = -x;
}

// --- reduced row echelon form over a field -------------------------------

struct Echelon {
  std::vector<Row> rows;   // sorted by pivot column
  std::vector<int> pivots;

  void insert(Row v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar& c = v[pivots[i]];
      if (!c.is_zero()) row_submul(v, c, rows[i]);
    }
    int lv = leading_col(v);
    if (lv < 0) return;
    row_scale(v, v[std::size_t(lv)].inverse());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar& c = rows[i][std::size_t(lv)];
      if (!c.is_zero()) row_submul(rows[i], c, v);
    }
    auto at = std::lower_bound(pivots.begin(), pivots.end(), lv);
    std::size_t idx = std::size_t(at - pivots.begin());
    pivots.insert(at, lv);
    rows.insert(rows.begin() + idx, std::move(v));
  }
};

// --- row Hermite normal form over zz --------------------------------------

Integer egcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_x = 1, cur_x = 0;
  Integer old_y = 0, cur_y = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
    t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

Integer floor_div(const Integer& a, const Integer& b) {  // b > 0
  Integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

struct Hermite {
  RingSpec ring{RingKind::IntegerRing, 0};
  std::vector<Row> rows;   // echelon, pivots strictly increasing, pivot entries > 0
  std::vector<int> pivots;

  void insert(Row v) {
    for (;;) {
      int lv = leading_col(v);
      if (lv < 0) return;
      auto at = std::lower_bound(pivots.begin(), pivots.end(), lv);
      std::size_t idx = std::size_t(at - pivots.begin());
      if (at == pivots.end() || *at != lv) {
        if (v[std::size_t(lv)].is_negative()) row_negate(v);
        pivots.insert(at, lv);
        rows.insert(rows.begin() + idx, std::move(v));
        return;
      }
      Row& b = rows[idx];
      Integer a = b[std::size_t(lv)].as_integer();
      Integer c = v[std::size_t(lv)].as_integer();
      if (c % a == 0) {
        row_submul(v, Scalar::of(ring, Integer(c / a)), b);
        continue;
      }
      // unimodular 2x2 combination: pivot becomes gcd(a, c)
      Integer x, y;
      Integer g = egcd(a, c, x, y);
      Scalar sx = Scalar::of(ring, x), sy = Scalar::of(ring, y);
      Scalar sa = Scalar::of(ring, Integer(a / g)), sc = Scalar::of(ring, Integer(c / g));
      Row nb(b.size(), Scalar::zero(ring));
      Row nv(b.size(), Scalar::zero(ring));
      for (std::size_t i = 0; i < b.size(); ++i) {
        nb[i] = sx * b[i] + sy * v[i];
        nv[i] = sa * v[i] - sc * b[i];
      }
      b = std::move(nb);
      v = std::move(nv);
    }
  }

  // reduce entries above each pivot into [0, pivot)
  void normalize() {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t p = std::size_t(pivots[i]);
      Integer d = rows[i][p].as_integer();
      for (std::size_t j = 0; j < i; ++j) {
        Integer e = rows[j][p].as_integer();
        if (e == 0) continue;
        Integer q = floor_div(e, d);
        if (q != 0) row_submul(rows[j], Scalar::of(ring, q), rows[i]);
      }
    }
  }
};

std::vector<Row> canonical(const RingSpec& ring, std::vector<Row>&& rows) {
  if (ring.kind == RingKind::IntegerRing) {
    Hermite h;
    for (auto& r : rows) h.insert(std::move(r));
    h.normalize();
    return std::move(h.rows);
  }
  Echelon e;
  for (auto& r : rows) e.insert(std::move(r));
  return std::move(e.rows);
}

Row row_product(const RingSpec& ring, const Row& a, const Row& b, std::size_t dim_out) {
  Row out(dim_out, Scalar::zero(ring));
  const std::size_t dim_b = b.size();
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    if (a[ia].is_zero()) continue;
    const std::size_t base = ia * dim_b;
    for (std::size_t ib = 0; ib < dim_b; ++ib) {
      if (b[ib].is_zero()) continue;
      out[base + ib] += a[ia] * b[ib];
    }
  }
  return out;
}

// [x,y]_s or [x,y] on coordinate rows of pure degrees dx, dy
Row row_bracket(const RingSpec& ring, const Row& x, int dx, const Row& y, int dy,
                bool signed_bracket, std::size_t dim_out) {
  Row xy = row_product(ring, x, y, dim_out);
  Row yx = row_product(ring, y, x, dim_out);
  bool plus = signed_bracket && (dx % 2 == 1) && (dy % 2 == 1);
  for (std::size_t i = 0; i < dim_out; ++i) {
    if (yx[i].is_zero()) continue;
    if (plus)
      xy[i] += yx[i];
    else
      xy[i] -= yx[i];
  }
  return xy;
}

}  // namespace

std::size_t component_dim(int rank, int degree, std::size_t cap) {
  if (rank < 1) fail(errc::bad_argument, "rank must be positive");
  if (degree < 0) fail(errc::bad_argument, "degree must be nonnegative");
  std::size_t dim = 1;
  for (int i = 0; i < degree; ++i) {
    dim *= std::size_t(rank);
    if (dim > cap)
      fail(errc::too_large, std::to_string(rank) + "^" + std::to_string(degree) +
                                " exceeds the size cap " + std::to_string(cap));
  }
  return dim;
}

std::size_t word_index(const Word& w, int rank) {
  std::size_t idx = 0;
  for (std::uint32_t letter : w) idx = idx * std::size_t(rank) + (letter - 1);
  return idx;
}

Word index_word(std::size_t index, int rank, int degree) {
  Word w(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    w[std::size_t(i)] = std::uint32_t(index % std::size_t(rank)) + 1;
    index /= std::size_t(rank);
  }
  return w;
}

Row tensor_component_row(const Tensor& t, int degree, std::size_t cap) {
  std::size_t dim = component_dim(t.rank(), degree, cap);
  Row out(dim, Scalar::zero(t.ring()));
  for (const auto& [w, c] : t.terms()) {
    if (int(w.size()) == degree) out[word_index(w, t.rank())] = c;
  }
  return out;
}

Tensor row_tensor(const Row& row, int rank, const RingSpec& ring, int degree) {
  Tensor t(rank, ring);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero()) t.add(index_word(i, rank, degree), row[i]);
  }
  return t;
}

void canonicalize_rows(const RingSpec& ring, std::vector<Row>& rows) {
  rows = canonical(ring, std::move(rows));
}

bool reduces_to_zero(const RingSpec& ring, const std::vector<Row>& basis, Row v) {
  if (ring.kind == RingKind::IntegerRing) {
    for (const Row& b : basis) {
      int p = leading_col(b);
      const Integer d = b[std::size_t(p)].as_integer();
      const Integer e = v[std::size_t(p)].as_integer();
      if (e == 0) continue;
      if (e % d != 0) return false;
      row_submul(v, Scalar::of(ring, Integer(e / d)), b);
    }
  } else {
    for (const Row& b : basis) {
      int p = leading_col(b);
      const Scalar& c = v[std::size_t(p)];
      if (!c.is_zero()) row_submul(v, c, b);
    }
  }
  return leading_col(v) < 0;
}

GradedSpan::GradedSpan(int rank, const RingSpec& ring, int max_degree)
    : rank_(rank), ring_(ring), max_degree_(max_degree) {
  if (rank < 1) fail(errc::bad_argument, "rank must be positive");
  if (max_degree < 0) fail(errc::bad_argument, "max_degree must be nonnegative");
  components_.resize(std::size_t(max_degree) + 1);
}

const std::vector<Row>& GradedSpan::component(int degree) const {
  if (degree < 0 || degree > max_degree_)
    fail(errc::degree_out_of_range,
         "degree " + std::to_string(degree) + " outside 0.." + std::to_string(max_degree_));
  return components_[std::size_t(degree)];
}

long long GradedSpan::total_dim() const {
  long long total = 0;
  for (const auto& c : components_) total += (long long)c.size();
  return total;
}

void GradedSpan::add_rows(int degree, std::vector<Row> rows) {
  if (degree < 0 || degree > max_degree_)
    fail(errc::degree_out_of_range, "degree " + std::to_string(degree) + " outside the span");
  auto& comp = components_[std::size_t(degree)];
  for (auto& r : comp) rows.push_back(std::move(r));
  canonicalize_rows(ring_, rows);
  comp = std::move(rows);
}

void GradedSpan::add_tensor(const Tensor& t) {
  if (t.rank() != rank_) fail(errc::rank_mismatch, "tensor rank differs from span rank");
  if (t.ring() != ring_) fail(errc::ring_mismatch, "tensor ring differs from span ring");
  for (int d = 0; d <= std::min(max_degree_, t.max_degree()); ++d) {
    Tensor comp = t.graded_component(d);
    if (comp.is_zero()) continue;
    add_rows(d, {tensor_component_row(comp, d, std::size_t(-1))});
  }
}

Tensor GradedSpan::basis_tensor(int degree, std::size_t i) const {
  const auto& comp = component(degree);
  if (i >= comp.size()) fail(errc::bad_argument, "basis index out of range");
  return row_tensor(comp[i], rank_, ring_, degree);
}

GradedSpan span_from_tensors(int rank, const RingSpec& ring, const std::vector<Tensor>& ts,
                             int max_degree) {
  GradedSpan s(rank, ring, max_degree);
  for (const Tensor& t : ts) {
    if (t.rank() != rank) fail(errc::rank_mismatch, "mixed ranks in tensor list");
    if (t.ring() != ring) fail(errc::ring_mismatch, "mixed rings in tensor list");
    s.add_tensor(t);
  }
  return s;
}

bool span_contains(const GradedSpan& s, const Tensor& t) {
  if (t.rank() != s.rank()) fail(errc::rank_mismatch, "tensor rank differs from span rank");
  if (t.ring() != s.ring()) fail(errc::ring_mismatch, "tensor ring differs from span ring");
  if (t.max_degree() > s.max_degree())
    fail(errc::degree_out_of_range, "tensor degree exceeds span max_degree");
  for (int d = 0; d <= t.max_degree(); ++d) {
    Tensor comp = t.graded_component(d);
    if (comp.is_zero()) continue;
    Row v = tensor_component_row(comp, d, std::size_t(-1));
    if (!reduces_to_zero(s.ring(), s.component(d), std::move(v))) return false;
  }
  return true;
}

static void check_compatible_spans(const GradedSpan& a, const GradedSpan& b, bool same_depth) {
  if (a.rank() != b.rank() || a.ring() != b.ring())
    fail(errc::incompatible_spans, "spans differ in rank or ring");
  if (same_depth && a.max_degree() != b.max_degree())
    fail(errc::incompatible_spans, "spans differ in max_degree");
}

bool span_equal(const GradedSpan& a, const GradedSpan& b) {
  check_compatible_spans(a, b, true);
  return a == b;
}

bool span_subset(const GradedSpan& a, const GradedSpan& b) {
  check_compatible_spans(a, b, false);
  for (int d = 0; d <= std::min(a.max_degree(), b.max_degree()); ++d) {
    for (const Row& v : a.component(d)) {
      if (!reduces_to_zero(a.ring(), b.component(d), v)) return false;
    }
  }
  return true;
}

GradedSpan span_sum(const GradedSpan& a, const GradedSpan& b) {
  check_compatible_spans(a, b, true);
  GradedSpan out = a;
  for (int d = 0; d <= b.max_degree(); ++d) {
    auto rows = b.component(d);
    if (!rows.empty()) out.add_rows(d, std::move(rows));
  }
  return out;
}

GradedSpan span_product(const GradedSpan& a, const GradedSpan& b, int max_degree) {
  check_compatible_spans(a, b, false);
  GradedSpan out(a.rank(), a.ring(), max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t dim = component_dim(a.rank(), d, std::size_t(-1));
    std::vector<Row> rows;
    for (int e = 0; e <= d; ++e) {
      if (e > a.max_degree() || d - e > b.max_degree()) continue;
      for (const Row& x : a.component(e)) {
        for (const Row& y : b.component(d - e)) {
          rows.push_back(row_product(a.ring(), x, y, dim));
        }
      }
    }
    if (!rows.empty()) out.add_rows(d, std::move(rows));
  }
  return out;
}

GradedSpan bracket_span(const GradedSpan& a, const GradedSpan& b, bool signed_bracket,
                        int max_degree) {
  check_compatible_spans(a, b, false);
  GradedSpan out(a.rank(), a.ring(), max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t dim = component_dim(a.rank(), d, std::size_t(-1));
    std::vector<Row> rows;
    for (int e = 0; e <= d; ++e) {
      if (e > a.max_degree() || d - e > b.max_degree()) continue;
      for (const Row& x : a.component(e)) {
        for (const Row& y : b.component(d - e)) {
          rows.push_back(row_bracket(a.ring(), x, e, y, d - e, signed_bracket, dim));
        }
      }
    }
    if (!rows.empty()) out.add_rows(d, std::move(rows));
  }
  return out;
}

std::vector<GradedSpan> build_lie_components(int rank, const RingSpec& ring, bool signed_bracket,
                                             int max_degree) {
  if (max_degree < 1) fail(errc::bad_argument, "max_degree must be >= 1");
  component_dim(rank, max_degree);  // enforce the size cap up front
  std::vector<GradedSpan> tower;
  tower.reserve(std::size_t(max_degree));

  std::vector<Row> basis_rows;  // L itself, degree 1
  for (int j = 0; j < rank; ++j) {
    Row e(std::size_t(rank), Scalar::zero(ring));
    e[std::size_t(j)] = Scalar::one(ring);
    basis_rows.push_back(std::move(e));
  }

  std::vector<Row> current = basis_rows;
  for (int i = 1; i <= max_degree; ++i) {
    GradedSpan s(rank, ring, max_degree);
    s.add_rows(i, current);
    tower.push_back(std::move(s));
    if (i == max_degree) break;
    std::size_t dim = component_dim(rank, i + 1, std::size_t(-1));
    std::vector<Row> next;
    for (const Row& e : basis_rows) {
      for (const Row& x : tower.back().component(i)) {
        next.push_back(row_bracket(ring, e, 1, x, i, signed_bracket, dim));
      }
    }
    canonicalize_rows(ring, next);
    current = std::move(next);
  }
  return tower;
}

namespace {

// (sum_j c_j e_{S_j})^power: every S-word of length `power`, weighted by
// the product of the coefficients at its positions
Row weighted_power_row(const std::vector<std::uint32_t>& letters, const std::vector<int>& coeff,
                       int rank, int power, std::size_t dim, const RingSpec& ring) {
  Row v(dim, Scalar::zero(ring));
  std::vector<std::size_t> pick(std::size_t(power), 0);
  for (;;) {
    Word w(static_cast<std::size_t>(power));
    long long weight = 1;
    for (int i = 0; i < power; ++i) {
      w[std::size_t(i)] = letters[pick[std::size_t(i)]];
      weight *= coeff[pick[std::size_t(i)]];
    }
    v[word_index(w, rank)] += Scalar::of(ring, weight);
    int i = power - 1;
    while (i >= 0 && pick[std::size_t(i)] + 1 == letters.size()) {
      pick[std::size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++pick[std::size_t(i)];
  }
  return v;
}

}  // namespace

GradedSpan build_squares_span(int rank, const RingSpec& ring, int power) {
  if (power < 2) fail(errc::bad_argument, "power must be >= 2");
  std::size_t dim = component_dim(rank, power);
  GradedSpan out(rank, ring, power);
  std::vector<Row> rows;
  // Generators: (sum_{j in S} c_j e_j)^power over nonempty supports S of
  // size <= power and coefficient grids c in {1..power}^S. The grid (not
  // just 0/1 sums) is needed from power 3 on: x^power is polynomial of
  // per-variable degree power in the coefficients, so Newton forward
  // differences express any integer x^power over box points, and
  // inclusion-exclusion over supports reduces to |S| <= power.
  for (int size = 1; size <= std::min(power, rank); ++size) {
    std::vector<std::uint32_t> letters(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) letters[std::size_t(i)] = std::uint32_t(i + 1);
    for (;;) {
      std::vector<int> coeff(std::size_t(size), 1);
      for (;;) {
        rows.push_back(weighted_power_row(letters, coeff, rank, power, dim, ring));
        int j = size - 1;
        while (j >= 0 && coeff[std::size_t(j)] == power) --j;
        if (j < 0) break;
        ++coeff[std::size_t(j)];
        for (int l = j + 1; l < size; ++l) coeff[std::size_t(l)] = 1;
      }
      int i = size - 1;
      while (i >= 0 && letters[std::size_t(i)] == std::uint32_t(rank - size + i + 1)) --i;
      if (i < 0) break;
      ++letters[std::size_t(i)];
      for (int l = i + 1; l < size; ++l) letters[std::size_t(l)] = letters[std::size_t(l - 1)] + 1;
    }
  }
  out.add_rows(power, std::move(rows));
  return out;
}

GradedSpan subalgebra_closure(const GradedSpan& generators, int max_degree) {
  if (!generators.component(0).empty())
    fail(errc::generators_in_degree_zero, "generators must live in positive degrees");
  GradedSpan out(generators.rank(), generators.ring(), max_degree);
  out.add_rows(0, {Row{Scalar::one(generators.ring())}});
  for (int d = 1; d <= max_degree; ++d) {
    std::size_t dim = component_dim(generators.rank(), d, std::size_t(-1));
    std::vector<Row> rows;
    for (int e = 1; e <= std::min(d, generators.max_degree()); ++e) {
      for (const Row& x : generators.component(e)) {
        for (const Row& y : out.component(d - e)) {
          rows.push_back(row_product(generators.ring(), x, y, dim));
        }
      }
    }
    if (!rows.empty()) out.add_rows(d, std::move(rows));
  }
  return out;
}

OperatorMatrix operator_matrix(OperatorTag op, int rank, const RingSpec& ring, int degree, int N,
                               std::size_t cap) {
  if (op == OperatorTag::tN_prime && N < 1) fail(errc::bad_n, "N must be >= 1");
  std::size_t dim = component_dim(rank, degree, cap);
  OperatorMatrix m{rank, ring, degree, N, dim, {}};
  m.cols.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Tensor w = Tensor::basis_word(rank, ring, index_word(j, rank, degree));
    Tensor image(rank, ring);
    switch (op) {
      case OperatorTag::t: image = apply_t(w); break;
      case OperatorTag::t_prime: image = apply_t_prime(w); break;
      case OperatorTag::tN_prime: image = apply_tN_prime(w, N); break;
      default: fail(errc::bad_argument, "bad operator tag");
    }
    m.cols.push_back(tensor_component_row(image, degree, cap));
  }
  return m;
}

std::vector<Row> kernel_rows(const RingSpec& ring, const std::vector<Row>& matrix_rows,
                             std::size_t ncols) {
  if (ring.kind == RingKind::IntegerRing) {
    // unimodular reduction of [M^T | I]; rows whose M^T part vanishes
    // carry a basis of the saturated kernel lattice in the identity part
    const std::size_t nrows = matrix_rows.size();
    Hermite h;
    for (std::size_t i = 0; i < ncols; ++i) {
      Row b(nrows + ncols, Scalar::zero(ring));
      for (std::size_t j = 0; j < nrows; ++j) b[j] = matrix_rows[j][i];
      b[nrows + i] = Scalar::one(ring);
      h.insert(std::move(b));
    }
    h.normalize();
    std::vector<Row> kernel;
    for (std::size_t r = 0; r < h.rows.size(); ++r) {
      if (std::size_t(h.pivots[r]) < nrows) continue;
      kernel.emplace_back(h.rows[r].begin() + long(nrows), h.rows[r].end());
    }
    canonicalize_rows(ring, kernel);
    return kernel;
  }

  Echelon e;
  for (const Row& r : matrix_rows) e.insert(r);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : e.pivots) is_pivot[std::size_t(p)] = true;
  std::vector<Row> kernel;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Row v(ncols, Scalar::zero(ring));
    v[f] = Scalar::one(ring);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      const Scalar& c = e.rows[r][f];
      if (!c.is_zero()) v[std::size_t(e.pivots[r])] = -c;
    }
    kernel.push_back(std::move(v));
  }
  canonicalize_rows(ring, kernel);
  return kernel;
}

GradedSpan matrix_kernel(const OperatorMatrix& m) {
  std::vector<Row> rows(m.dim, Row(m.dim, Scalar::zero(m.ring)));
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) rows[i][j] = m.cols[j][i];
  }
  GradedSpan out(m.rank, m.ring, m.degree);
  out.add_rows(m.degree, kernel_rows(m.ring, rows, m.dim));
  return out;
}

GradedSpan kernel_span(OperatorTag op, int rank, const RingSpec& ring, int max_degree, int N,
                       std::size_t cap) {
  GradedSpan out(rank, ring, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    OperatorMatrix m = operator_matrix(op, rank, ring, d, N, cap);
    out.add_rows(d, matrix_kernel(m).component(d));
  }
  return out;
}

}  // namespace rtt

#include "rtt/tensor.hpp"

#include <cctype>

namespace rtt {

Tensor::Tensor(int rank, const RingSpec& ring) : rank_(rank), ring_(ring) {
  if (rank < 1) fail(errc::bad_argument, "rank must be positive");
}

Tensor Tensor::unit(int rank, const RingSpec& ring) {
  Tensor t(rank, ring);
  t.add(Word{}, Scalar::one(ring));
  return t;
}

Tensor Tensor::basis_word(int rank, const RingSpec& ring, Word w) {
  Tensor t(rank, ring);
  for (std::uint32_t letter : w) {
    if (letter < 1 || letter > std::uint32_t(rank))
      fail(errc::index_out_of_range,
           "letter " + std::to_string(letter) + " outside 1.." + std::to_string(rank));
  }
  t.add(w, Scalar::one(ring));
  return t;
}

int Tensor::max_degree() const {
  return terms_.empty() ? 0 : int(terms_.rbegin()->first.size());
}

bool Tensor::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  std::size_t len = terms_.begin()->first.size();
  if (terms_.rbegin()->first.size() != len) return false;  // order is length-first
  if (degree_out) *degree_out = int(len);
  return true;
}

void Tensor::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor Tensor::operator-() const {
  Tensor out(rank_, ring_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

void Tensor::check_compatible(const Tensor& rhs) const {
  if (rank_ != rhs.rank_)
    fail(errc::rank_mismatch,
         "tensor ranks differ: " + std::to_string(rank_) + " vs " + std::to_string(rhs.rank_));
  if (ring_ != rhs.ring_)
    fail(errc::ring_mismatch, "tensor rings differ: " + ring_.str() + " vs " + rhs.ring_.str());
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  a.check_compatible(b);
  Tensor out(a.rank(), a.ring());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  }
  return out;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor out(rank_, ring_);
  for (const auto& [w, coeff] : terms_) out.add(w, coeff * c);
  return out;
}

Tensor Tensor::graded_component(int k) const {
  Tensor out(rank_, ring_);
  if (k < 0) return out;
  for (const auto& [w, c] : terms_) {
    if (int(w.size()) == k) out.terms_.emplace(w, c);
  }
  return out;
}

bool Tensor::operator==(const Tensor& rhs) const {
  return rank_ == rhs.rank_ && ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) { return a * b; }

Tensor graded_component(const Tensor& t, int k) { return t.graded_component(k); }

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  int rank;
  RingSpec ring;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void syntax(const std::string& msg) {
    fail(errc::syntax_error, msg + " at offset " + std::to_string(pos));
  }

  Integer digits() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      syntax("expected digits");
    Integer v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  std::uint32_t index() {
    Integer v = digits();
    if (v < 1 || v > rank)
      fail(errc::index_out_of_range, "letter " + v.str() + " outside 1.." + std::to_string(rank));
    return static_cast<std::uint32_t>(v);
  }

  Word word() {
    if (!eat('[')) syntax("expected '['");
    Word w;
    if (eat(']')) return w;
    w.push_back(index());
    while (eat(',')) w.push_back(index());
    if (!eat(']')) syntax("expected ']' or ','");
    return w;
  }

  void term(Tensor& acc, bool negate) {
    Scalar coef = Scalar::one(ring);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      if (eat('/')) den = digits();
      try {
        coef = Scalar::fraction(ring, num, den);
      } catch (const Error& e) {
        fail(errc::bad_coefficient, "coefficient " + num.str() + "/" + den.str() +
                                        " invalid over " + ring.str() + ": " + e.what());
      }
      if (!eat('*')) syntax("expected '*' between coefficient and word");
    }
    if (negate) coef = -coef;
    acc.add(word(), coef);
  }

  Tensor run() {
    Tensor acc(rank, ring);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    term(acc, neg);
    while (!at_end()) {
      if (eat('-'))
        neg = true;
      else if (eat('+'))
        neg = false;
      else
        syntax("expected '+' or '-'");
      term(acc, neg);
    }
    return acc;
  }
};

}  // namespace

Tensor parse_tensor(std::string_view text, int rank, const RingSpec& ring) {
  Parser p{text, 0, rank, ring};
  return p.run();
}

std::string format_tensor(const Tensor& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : t.terms()) {
    bool neg = c.is_negative();
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(w[i]);
    }
    out += "]";
  }
  return out;
}

}  // namespace rtt

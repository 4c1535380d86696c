#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rtt/verify.hpp"

namespace {

using namespace rtt;

// report files are written atomically: temp file, then rename
void emit(const std::string& text, const std::string& output_path) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (output_path.empty()) {
    std::cout << body;
    return;
  }
  std::string tmp = output_path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(errc::bad_argument, "cannot open " + tmp + " for writing");
    f << body;
  }
  if (std::rename(tmp.c_str(), output_path.c_str()) != 0)
    fail(errc::bad_argument, "cannot rename " + tmp + " to " + output_path);
}

Scalar parse_scalar_literal(const RingSpec& ring, const std::string& text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&]() {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(errc::syntax_error, "bad scalar literal '" + text + "'");
    Integer v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  };
  Integer num = digits();
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits();
  }
  if (pos != text.size()) fail(errc::syntax_error, "bad scalar literal '" + text + "'");
  if (neg) num = -num;
  return Scalar::fraction(ring, num, den);
}

Functional parse_functional(const RingSpec& ring, int rank, const std::string& text) {
  std::vector<Scalar> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
      piece.erase(piece.begin());
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.pop_back();
    coeffs.push_back(parse_scalar_literal(ring, piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Functional(rank, std::move(coeffs));
}

struct Flags {
  int rank = 2;
  std::string ring_text = "qq";
  int max_degree = 4;
  int degree = 1;
  std::int64_t p = 0;
  int n_param = 1;
  std::uint64_t seed = 42;
  int cases = 200;
  std::string g_text;
  std::string input;
  std::string format = "table";
  std::string output;
};

int run_verify(const std::string& campaign, const Flags& flags) {
  RingSpec ring = ring_parse(flags.ring_text);
  VerificationReport report;
  if (campaign == "kert") {
    report = verify_kert(flags.rank, ring, flags.max_degree);
  } else if (campaign == "kert-prime") {
    report = verify_kert_prime(flags.rank, ring, flags.max_degree);
  } else if (campaign == "kert-prime-fp") {
    std::int64_t p = flags.p;
    if (p == 0 && ring.kind == RingKind::PrimeField) p = ring.p;
    if (p == 0) fail(errc::bad_argument, "kert-prime-fp needs --p or --ring fp:<p>");
    if (ring.kind == RingKind::PrimeField && ring.p != p)
      fail(errc::bad_argument, "--p and --ring disagree");
    report = verify_kert_prime_modp(flags.rank, p, flags.max_degree);
  } else if (campaign == "identities") {
    report = verify_identity_suite(flags.rank, ring, flags.cases, flags.seed);
  } else if (campaign == "inclusions") {
    report = verify_inclusion_suite(flags.rank, ring, flags.max_degree);
  } else if (campaign == "pang") {
    if (ring.kind != RingKind::RationalField)
      fail(errc::unsupported_ring, "pang runs over qq only");
    report = verify_pang(flags.rank, flags.max_degree);
  } else if (campaign == "kn") {
    if (ring.kind != RingKind::RationalField)
      fail(errc::unsupported_ring, "kn runs over qq only");
    report = verify_kn(flags.rank, flags.n_param, flags.max_degree);
  } else {
    fail(errc::bad_argument, "unknown campaign '" + campaign + "'");
  }
  emit(flags.format == "json" ? report.to_json() : report.to_table(), flags.output);
  return report.pass() ? 0 : 1;
}

int run_apply(const std::string& op, const Flags& flags) {
  RingSpec ring = ring_parse(flags.ring_text);
  auto one_input = [&]() { return parse_tensor(flags.input, flags.rank, ring); };
  auto two_inputs = [&]() {
    std::size_t sep = flags.input.find(';');
    if (sep == std::string::npos)
      fail(errc::bad_argument, "binary operator needs --input \"<tensor> ; <tensor>\"");
    return std::pair{parse_tensor(flags.input.substr(0, sep), flags.rank, ring),
                     parse_tensor(flags.input.substr(sep + 1), flags.rank, ring)};
  };
  auto functional = [&]() {
    if (flags.g_text.empty()) fail(errc::bad_argument, "operator needs --g <c1,...,cn>");
    return parse_functional(ring, flags.rank, flags.g_text);
  };

  Tensor result(flags.rank, ring);
  if (op == "t") {
    result = apply_t(one_input());
  } else if (op == "t-prime") {
    result = apply_t_prime(one_input());
  } else if (op == "tN-prime") {
    result = apply_tN_prime(one_input(), flags.n_param);
  } else if (op == "partial") {
    result = apply_partial(functional(), one_input());
  } else if (op == "partial-prime") {
    result = apply_partial_prime(functional(), one_input());
  } else if (op == "cg") {
    result = apply_cg(functional(), one_input());
  } else if (op == "scomm") {
    auto [a, b] = two_inputs();
    result = scomm(a, b);
  } else if (op == "comm") {
    auto [a, b] = two_inputs();
    result = comm(a, b);
  } else {
    fail(errc::bad_argument, "unknown operator '" + op + "'");
  }
  emit(format_tensor(result), flags.output);
  return 0;
}

int run_dims(const std::string& family, const Flags& flags) {
  RingSpec ring = ring_parse(flags.ring_text);
  const int D = flags.max_degree;
  std::vector<long long> dims;
  if (family == "lie-signed" || family == "lie-prime") {
    auto tower = build_lie_components(flags.rank, ring, family == "lie-signed", D);
    for (int d = 1; d <= D; ++d) dims.push_back(tower[std::size_t(d - 1)].dim(d));
  } else if (family == "gbar") {
    GradedSpan s = gbar_span(flags.rank, ring, true, D);
    for (int d = 0; d <= D; ++d) dims.push_back(s.dim(d));
  } else if (family == "h") {
    GradedSpan s = h_span(flags.rank, ring, D);
    for (int d = 0; d <= D; ++d) dims.push_back(s.dim(d));
  } else if (family == "h-prime-p") {
    if (ring.kind != RingKind::PrimeField)
      fail(errc::bad_argument, "h-prime-p needs --ring fp:<p>");
    GradedSpan s = gbar_span(flags.rank, ring, false, D);
    if (ring.p <= D)
      s.add_rows(int(ring.p),
                 build_squares_span(flags.rank, ring, int(ring.p)).component(int(ring.p)));
    for (int d = 0; d <= D; ++d) dims.push_back(s.dim(d));
  } else if (family == "kernel-t" || family == "kernel-t-prime") {
    GradedSpan s = kernel_span(family == "kernel-t" ? OperatorTag::t : OperatorTag::t_prime,
                               flags.rank, ring, D);
    for (int d = 0; d <= D; ++d) dims.push_back(s.dim(d));
  } else {
    fail(errc::bad_argument, "unknown family '" + family + "'");
  }
  std::string line;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) line += ",";
    line += std::to_string(dims[i]);
  }
  emit(line, flags.output);
  return 0;
}

int run_matrix(const std::string& op, const Flags& flags) {
  RingSpec ring = ring_parse(flags.ring_text);
  OperatorTag tag;
  if (op == "t")
    tag = OperatorTag::t;
  else if (op == "t-prime")
    tag = OperatorTag::t_prime;
  else if (op == "tN-prime")
    tag = OperatorTag::tN_prime;
  else
    fail(errc::bad_argument, "unknown operator '" + op + "'");
  OperatorMatrix m = operator_matrix(tag, flags.rank, ring, flags.degree, flags.n_param);
  std::string csv;
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) {
      if (j) csv += ",";
      csv += m.entry(i, j).str();
    }
    csv += "\n";
  }
  emit(csv, flags.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tensor-algebra computations around the random-to-top operators"};
  app.require_subcommand(1);
  Flags flags;
  std::string campaign, op, family;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--rank", flags.rank, "free module rank")->check(CLI::PositiveNumber);
    cmd->add_option("--ring", flags.ring_text, "qq | zz | fp:<p>");
    cmd->add_option("--output", flags.output, "write the result to a file (atomic)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("campaign", campaign,
                     "kert | kert-prime | kert-prime-fp | identities | inclusions | pang | kn")
      ->required();
  add_common(verify);
  verify->add_option("--max-degree", flags.max_degree, "largest tensor degree")
      ->check(CLI::PositiveNumber);
  verify->add_option("--p", flags.p, "prime for kert-prime-fp")->check(CLI::PositiveNumber);
  verify->add_option("--N", flags.n_param, "number of operators for kn")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", flags.seed, "seed for randomized campaigns");
  verify->add_option("--cases", flags.cases, "cases per identity")->check(CLI::PositiveNumber);
  verify->add_option("--format", flags.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* apply = app.add_subcommand("apply", "apply an operator to tensors");
  apply->add_option("op", op,
                    "t | t-prime | tN-prime | partial | partial-prime | cg | scomm | comm")
      ->required();
  add_common(apply);
  apply->add_option("--input", flags.input, "tensor expression; scomm/comm take \"a ; b\"")
      ->required();
  apply->add_option("--g", flags.g_text, "functional values g(e_1),...,g(e_n)");
  apply->add_option("--N", flags.n_param, "N for tN-prime")->check(CLI::PositiveNumber);

  CLI::App* dims = app.add_subcommand("dims", "degree -> dimension table for a span family");
  dims->add_option("--family", family,
                   "lie-signed | lie-prime | gbar | h | h-prime-p | kernel-t | kernel-t-prime")
      ->required();
  add_common(dims);
  dims->add_option("--max-degree", flags.max_degree, "largest tensor degree")
      ->check(CLI::PositiveNumber);

  CLI::App* matrix = app.add_subcommand("matrix", "export an operator matrix as CSV");
  matrix->add_option("--op", op, "t | t-prime | tN-prime")->required();
  add_common(matrix);
  matrix->add_option("--degree", flags.degree, "tensor degree of the component")
      ->check(CLI::NonNegativeNumber);
  matrix->add_option("--N", flags.n_param, "N for tN-prime")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(campaign, flags);
    if (apply->parsed()) return run_apply(op, flags);
    if (dims->parsed()) return run_dims(family, flags);
    if (matrix->parsed()) return run_matrix(op, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

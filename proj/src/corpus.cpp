#include "hopflink/corpus.hpp"

#include <filesystem>
#include <map>

#include "hopflink/errors.hpp"
#include "hopflink/io.hpp"

namespace hopf {

namespace {

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(':', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// name(arg, arg) with nesting; returns false when s has no parentheses
bool split_call(const std::string& s, std::string& name, std::vector<std::string>& args) {
  auto open = s.find('(');
  if (open == std::string::npos) return false;
  if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + s + "'");
  name = s.substr(0, open);
  int depth = 0;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    if (ch == ',' && depth == 0) {
      args.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  args.push_back(cur);
  return true;
}

int parse_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v <= 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a positive integer, got '" + s + "' in '" + spec + "'");
  }
}

// zetaN, zetaN^k or a rational
Scalar parse_root(const std::string& s, const std::string& spec) {
  if (s.rfind("zeta", 0) == 0) {
    auto caret = s.find('^');
    int n = parse_int(s.substr(4, caret == std::string::npos ? std::string::npos : caret - 4), spec);
    long k = caret == std::string::npos ? 1 : parse_int(s.substr(caret + 1), spec);
    return Scalar::zeta(n, k);
  }
  try {
    return Scalar::parse_rational(s);
  } catch (const Error&) {
    throw ParseError("cannot read root of unity '" + s + "' in '" + spec + "'");
  }
}

struct Group {
  GroupTable table;
  std::vector<std::string> names;
  int order_needed;  // cyclotomic order splitting the dual
};

Group parse_group(const std::string& s, const std::string& spec) {
  if (s == "S3") return {s3_table(), s3_names(), 1};
  if (s.size() > 1 && s[0] == 'Z') {
    int n = parse_int(s.substr(1), spec);
    return {cyclic_table(n), cyclic_names(n), n};
  }
  throw ParseError("unknown group '" + s + "' in '" + spec + "'");
}

FinHopf exterior_algebra_on_v() {
  FinHopf q;
  q.coalg.dim = 2;
  q.coalg.names = {"1", "v"};
  q.coalg.comul = {{{0, 0, Scalar(1L)}}, {{0, 1, Scalar(1L)}, {1, 0, Scalar(1L)}}};
  q.coalg.counit = {Scalar(1L), Scalar(0L)};
  q.mul.assign(4, {});
  q.mul[0] = {{0, Scalar(1L)}};
  q.mul[1] = {{1, Scalar(1L)}};
  q.mul[2] = {{1, Scalar(1L)}};
  q.unit = {Scalar(1L), Scalar(0L)};
  return q;
}

// rho(1) = 1 (x) 1_J, rho(v) = v (x) w
Matrix exterior_coaction(const FinHopf& j, const Vec& w) {
  const std::size_t dj = j.dim();
  Matrix rho(2 * dj, 2);
  for (std::size_t a = 0; a < dj; ++a) {
    rho(a, 0) = j.unit[a];
    rho(dj + a, 1) = w[a];
  }
  return rho;
}

// action of b_a on Q = span{1, v}: 1 . b = eps(b) 1, v . b = chi(b) v
std::vector<Matrix> diagonal_action(const FinHopf& j, const Vec& chi) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < j.dim(); ++a) {
    Matrix m(2, 2);
    m(0, 0) = j.coalg.counit[a];
    m(1, 1) = chi[a];
    out.push_back(m);
  }
  return out;
}

int s3_sign(std::size_t i) { return (i == 0 || i == 4 || i == 5) ? 1 : -1; }

SmashCoproduct build_h12() {
  FinHopf j = dual_group_algebra(s3_table(), s3_names());
  return smash_coproduct(j, h12_comodule());
}

SmashCoproduct build_h4() {
  FinHopf j = group_algebra(cyclic_table(2), cyclic_names(2));
  ComoduleCoalgebra q;
  q.q_algebra = exterior_algebra_on_v();
  q.q = q.q_algebra->coalg;
  q.rho = exterior_coaction(j, j.basis("g"));
  q.action = diagonal_action(j, {Scalar(1L), Scalar(-1L)});
  return smash_coproduct(j, q);
}

SmashCoproduct build_h24() {
  GroupTable t = direct_product_table(s3_table(), cyclic_table(2));
  std::vector<std::string> names;
  for (const auto& x : s3_names())
    for (const auto& z : cyclic_names(2, "z")) names.push_back(x + "," + z);
  FinHopf j = dual_group_algebra(t, names);
  Vec sigma(j.dim()), at_t(j.dim());
  for (std::size_t i = 0; i < j.dim(); ++i) sigma[i] = Scalar(static_cast<long>(s3_sign(i / 2) * (i % 2 ? -1 : 1)));
  at_t[j.index_of("p[e,z]")] = Scalar(1L);  // (e, z) is central and sigma(e, z) = -1
  ComoduleCoalgebra q;
  q.q_algebra = exterior_algebra_on_v();
  q.q = q.q_algebra->coalg;
  q.rho = exterior_coaction(j, sigma);
  q.action = diagonal_action(j, at_t);
  return smash_coproduct(j, q);
}

}  // namespace

ComoduleCoalgebra h12_comodule() {
  FinHopf j = dual_group_algebra(s3_table(), s3_names());
  Vec sgn(j.dim());
  for (std::size_t i = 0; i < j.dim(); ++i) sgn[i] = Scalar(static_cast<long>(s3_sign(i)));
  ComoduleCoalgebra q;
  q.q = exterior_algebra_on_v().coalg;
  q.rho = exterior_coaction(j, sgn);
  return q;
}

SmashCoproduct h12_hopf_candidate() {
  FinHopf j = dual_group_algebra(s3_table(), s3_names());
  ComoduleCoalgebra q = h12_comodule();
  q.q_algebra = exterior_algebra_on_v();
  q.action = diagonal_action(j, j.coalg.counit);
  return smash_coproduct(j, q);
}

bool is_smash_spec(const std::string& spec) { return spec.rfind("smash:", 0) == 0; }

SmashCoproduct smash_fixture(const std::string& name) {
  if (name == "H12") return build_h12();
  if (name == "H4") return build_h4();
  if (name == "H24") return build_h24();
  throw ParseError("unknown smash fixture '" + name + "' (known: H12, H4, H24)");
}

FinHopf build_algebra(const std::string& spec) {
  std::string name;
  std::vector<std::string> args;
  if (split_call(spec, name, args)) {
    if (name == "tensor" && args.size() == 2) return tensor(build_algebra(args[0]), build_algebra(args[1]));
    if (args.size() == 1) {
      if (name == "dual") return dual(build_algebra(args[0]));
      if (name == "op") return opposite(build_algebra(args[0]));
      if (name == "cop") return coopposite(build_algebra(args[0]));
    }
    throw ParseError("unknown combinator '" + name + "' with " + std::to_string(args.size()) +
                     " arguments in '" + spec + "'");
  }
  auto parts = split_colon(spec);
  const std::string& head = parts[0];
  if (head == "sweedler" && parts.size() == 1) return sweedler();
  if (head == "group" && parts.size() == 2) {
    Group g = parse_group(parts[1], spec);
    return group_algebra(g.table, g.names);
  }
  if (head == "dual-group" && parts.size() == 2) {
    Group g = parse_group(parts[1], spec);
    return dual_group_algebra(g.table, g.names, g.order_needed);
  }
  if (head == "taft" && parts.size() == 3)
    return taft(parse_int(parts[1], spec), parse_root(parts[2], spec));
  if (head == "smash" && parts.size() == 2) return smash_fixture(parts[1]).h;
  if (std::filesystem::exists(spec)) return load_file(spec);
  throw ParseError("unknown generator spec '" + spec + "' and no such file");
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"group:Z2", "group-Z2.json"},
      {"group:Z3", "group-Z3.json"},
      {"group:Z4", "group-Z4.json"},
      {"group:S3", "group-S3.json"},
      {"dual-group:Z2", "dual-group-Z2.json"},
      {"dual-group:Z3", "dual-group-Z3.json"},
      {"dual-group:Z4", "dual-group-Z4.json"},
      {"dual-group:S3", "dual-group-S3.json"},
      {"sweedler", "sweedler.json"},
      {"taft:3:zeta3", "taft-3.json"},
      {"taft:4:zeta4", "taft-4.json"},
      {"tensor(group:Z2,sweedler)", "tensor-Z2-sweedler.json"},
      {"tensor(sweedler,sweedler)", "tensor-sweedler-sweedler.json"},
      {"dual(sweedler)", "dual-sweedler.json"},
      {"dual(taft:3:zeta3)", "dual-taft-3.json"},
      {"smash:H12", "smash-H12.json"},
      {"smash:H4", "smash-H4.json"},
      {"smash:H24", "smash-H24.json"},
  };
  return entries;
}

std::vector<std::string> regen_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& e : corpus_entries()) {
    auto path = (std::filesystem::path(dir) / e.file).string();
    save_file(build_algebra(e.spec), path);
    written.push_back(path);
  }
  return written;
}

}  // namespace hopf

#include "spanbound/backend/any.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace spanbound {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Reads a polynomial in `var` whose coefficients may use the field's own symbol.
template <CoefficientField F>
struct PolyBuilder {
  using value = poly::Poly<F>;
  const F& f;
  std::string var;

  value number(const mpz_class& n) const { return poly::constant(f, f.from_mpz(n)); }
  std::optional<value> variable(std::string_view name) const {
    if (name == var) return poly::monomial(f, f.one(), 1);
    if (auto c = f.variable(name)) return poly::constant(f, *c);
    return std::nullopt;
  }
  value basis(std::string_view text) const { no_basis_symbols(text); }
  value add(const value& a, const value& b) const { return poly::add(f, a, b); }
  value sub(const value& a, const value& b) const { return poly::sub(f, a, b); }
  value mul(const value& a, const value& b) const { return poly::mul(f, a, b); }
  value neg(const value& a) const { return poly::neg(f, a); }
  value div(const value& a, const value& b) const {
    if (b.empty()) fail(ErrorKind::ZeroInverse, "division by zero");
    if (b.size() != 1) fail(ErrorKind::SyntaxError, "a modulus may only be divided by constants");
    return poly::scale(f, a, f.inv(b[0]));
  }
  value pow(const value& a, unsigned e) const { return poly::pow(f, a, e); }
};

template <CoefficientField F>
poly::Poly<F> parse_poly(const F& f, std::string_view text, const std::string& var) {
  return parse_expression(PolyBuilder<F>{f, var}, text);
}

std::uint32_t parse_prime(std::string_view text) {
  std::string t = trim(text);
  if (t.empty() || t.size() > 10) fail(ErrorKind::SyntaxError, "expected a prime, got '" + t + "'");
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorKind::SyntaxError, "expected a prime, got '" + t + "'");
  auto v = std::stoull(t);
  if (v > 0xffffffffULL) fail(ErrorKind::NonPrimeCharacteristic, t + " is too large");
  return static_cast<std::uint32_t>(v);
}

// "Name(args)" -> (Name, args); args empty when there are no parentheses.
std::pair<std::string, std::string> head_and_args(std::string_view spec) {
  std::string s = trim(spec);
  auto open = s.find('(');
  if (open == std::string::npos) return {s, ""};
  if (s.back() != ')') fail(ErrorKind::SyntaxError, "unbalanced parentheses in backend spec '" + s + "'");
  return {trim(s.substr(0, open)), s.substr(open + 1, s.size() - open - 2)};
}

enum class BaseKind { Prime, Rational };
struct BaseSpec {
  BaseKind kind;
  std::uint32_t p = 0;
  bool functions = false;  // base(s)
};

BaseSpec parse_base(std::string_view text) {
  std::string t = trim(text);
  BaseSpec b{BaseKind::Rational};
  if (t.size() > 3 && t.ends_with("(s)")) {
    b.functions = true;
    t = trim(t.substr(0, t.size() - 3));
  }
  if (t == "Q") return b;
  auto [head, args] = head_and_args(t);
  if (head != "GF") fail(ErrorKind::SyntaxError, "unknown coefficient field '" + std::string(text) + "'");
  b.kind = BaseKind::Prime;
  b.p = parse_prime(args);
  return b;
}

GroupPtr parse_group_spec(std::string_view text, const std::string& base_dir) {
  std::string t = trim(text);
  if (t.rfind("cayley:", 0) == 0) {
    std::filesystem::path path(t.substr(7));
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidGroup, "cannot read Cayley table '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return std::make_shared<const Group>(Group::from_cayley_text(ss.str(), "cayley:" + path.filename().string()));
  }
  return std::make_shared<const Group>(Group::parse(t));
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::shared_ptr<const FiniteField> make_finite_field(std::uint32_t p, std::string_view modulus) {
  PrimeField f(p);
  return std::make_shared<const FiniteField>(f, parse_poly(f, modulus, "x"), "x", BackendKind::FF);
}

std::shared_ptr<const FiniteField> make_finite_field(std::uint32_t p, int degree) {
  PrimeField f(p);
  return std::make_shared<const FiniteField>(f, smallest_irreducible(f, degree), "x", BackendKind::FF);
}

AnyBackend create_backend(std::string_view spec, const std::string& base_dir) {
  auto [head, args] = head_and_args(spec);
  if (head == "QUAT") {
    if (!trim(args).empty()) fail(ErrorKind::SyntaxError, "QUAT takes no parameters");
    return std::make_shared<const Quaternions>();
  }
  auto parts = split_top_level(args);
  if (head == "FF") {
    if (parts.size() != 2) fail(ErrorKind::SyntaxError, "FF expects (p, modulus)");
    auto p = parse_prime(parts[0]);
    const auto& m = parts[1];
    if (!m.empty() && std::all_of(m.begin(), m.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return make_finite_field(p, std::stoi(m));
    return make_finite_field(p, m);
  }
  if (head == "EXT") {
    if (parts.size() != 2) fail(ErrorKind::SyntaxError, "EXT expects (field, modulus)");
    auto base = parse_base(parts[0]);
    if (base.kind == BaseKind::Prime) {
      PrimeField f(base.p);
      if (!base.functions) return std::make_shared<const FiniteField>(f, parse_poly(f, parts[1], "y"), "y", BackendKind::EXT);
      RationalFunctionField<PrimeField> rf(f, "s");
      return std::make_shared<const ModularFunctionExtension>(rf, parse_poly(rf, parts[1], "y"), "y", BackendKind::EXT);
    }
    RationalField q;
    if (!base.functions) return std::make_shared<const RationalExtension>(q, parse_poly(q, parts[1], "y"), "y", BackendKind::EXT);
    RationalFunctionField<RationalField> rf(q, "s");
    return std::make_shared<const RationalFunctionExtension>(rf, parse_poly(rf, parts[1], "y"), "y", BackendKind::EXT);
  }
  if (head == "RF") {
    if (parts.size() != 1) fail(ErrorKind::SyntaxError, "RF expects (field)");
    auto base = parse_base(parts[0]);
    if (base.functions) fail(ErrorKind::SyntaxError, "RF takes GF(p) or Q");
    if (base.kind == BaseKind::Prime) return std::make_shared<const ModularFunctionField>(PrimeField(base.p));
    return std::make_shared<const RationalFunctionFieldBackend>(RationalField{});
  }
  if (head == "GA") {
    if (parts.size() != 2) fail(ErrorKind::SyntaxError, "GA expects (field, group)");
    auto base = parse_base(parts[0]);
    if (base.functions) fail(ErrorKind::SyntaxError, "GA takes GF(p) or Q");
    auto group = parse_group_spec(parts[1], base_dir);
    if (base.kind == BaseKind::Prime) return std::make_shared<const ModularGroupAlgebra>(PrimeField(base.p), group);
    return std::make_shared<const RationalGroupAlgebra>(RationalField{}, group);
  }
  fail(ErrorKind::SyntaxError, "unknown backend '" + std::string(spec) + "'");
}

std::string describe(const AnyBackend& b) {
  return std::visit([](const auto& p) { return p->describe(); }, b);
}

}  // namespace spanbound

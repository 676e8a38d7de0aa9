#include "genset/catalog.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "genset/errors.hpp"
#include "genset/field.hpp"
#include "genset/wreath.hpp"

namespace genset {

namespace {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Permutation cycle_on(std::size_t degree, Point first, std::size_t length) {
  std::vector<Point> c(length);
  std::iota(c.begin(), c.end(), first);
  return Permutation::from_cycles(degree, {c});
}

void expect_order(const PermGroup& g, const BigInt& expected, const std::string& what) {
  if (g.order() != expected)
    throw InternalError(what + " has order " + g.order().str() + ", expected " + expected.str());
}

void need(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

void need_params(const GroupSpec& s, std::size_t n) {
  need(s.params.size() == n, s.label() + ": expected " + std::to_string(n) + " parameter(s)");
}

// Maps of the affine line over GF(q): x -> x + 1 and x -> l * x on points 0..q-1.
Permutation field_map(const GaloisField& f, std::size_t degree, auto&& image) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (unsigned x = 0; x < f.order(); ++x) img[x] = image(x);
  return Permutation(std::move(img));
}

// Projective line: field elements 0..q-1 and infinity at q.
enum class LineGroup { PSL, PGL, PGammaL };

PermGroup projective_group(unsigned q, LineGroup kind) {
  const GaloisField f(q);
  const unsigned inf = q;
  const std::size_t degree = q + 1;
  const unsigned omega = f.primitive_element();
  const bool odd = f.characteristic() != 2;
  const unsigned lambda = (kind == LineGroup::PSL && odd) ? f.mul(omega, omega) : omega;
  // x -> -1/x has determinant 1; x -> 1/x has determinant -1.
  const bool negate = kind == LineGroup::PSL;

  std::vector<Permutation> gens;
  std::vector<Point> t(degree), m(degree), s(degree);
  for (unsigned x = 0; x < q; ++x) {
    t[x] = f.add(x, 1);
    m[x] = f.mul(lambda, x);
    s[x] = x == 0 ? inf : (negate ? f.neg(f.inv(x)) : f.inv(x));
  }
  t[inf] = inf;
  m[inf] = inf;
  s[inf] = 0;
  gens.emplace_back(std::move(t));
  gens.emplace_back(std::move(m));
  gens.emplace_back(std::move(s));
  if (kind == LineGroup::PGammaL) {
    std::vector<Point> fr(degree);
    for (unsigned x = 0; x < q; ++x) fr[x] = f.frobenius(x);
    fr[inf] = inf;
    gens.emplace_back(std::move(fr));
  }
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  PermGroup g(degree, std::move(gens));
  const BigInt pgl = BigInt(q) * (BigInt(q) * q - 1);
  switch (kind) {
    case LineGroup::PSL: expect_order(g, odd ? pgl / 2 : pgl, "PSL2"); break;
    case LineGroup::PGL: expect_order(g, pgl, "PGL2"); break;
    case LineGroup::PGammaL: expect_order(g, pgl * f.extension_degree(), "PGammaL2"); break;
  }
  return g;
}

PermGroup affine_group(unsigned p, unsigned k, unsigned n) {
  need(is_prime(p) && k >= 1, "Affine: p must be prime and k >= 1");
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  need(q <= GaloisField::kMaxOrder, "Affine: p^k must be at most 32");
  need(n >= 1 && (q - 1) % n == 0, "Affine: n must divide p^k - 1");
  const GaloisField f(q);
  std::vector<Permutation> gens;
  // Translations by the additive basis 1, p, p^2, ... (polynomial basis).
  unsigned basis = 1;
  for (unsigned i = 0; i < k; ++i, basis *= p)
    gens.push_back(field_map(f, q, [&](unsigned x) { return f.add(x, basis); }));
  const unsigned lambda = f.pow(f.primitive_element(), (q - 1) / n);
  gens.push_back(field_map(f, q, [&](unsigned x) { return f.mul(lambda, x); }));
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
  PermGroup g(q, std::move(gens));
  expect_order(g, BigInt(q) * n, "Affine");
  return g;
}

unsigned parse_uint(std::string_view s, std::string_view context) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidSpec("bad number '" + std::string(s) + "' in " + std::string(context));
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string GroupSpec::label() const {
  auto join = [&](const char* name) {
    std::string s = name;
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : ":") + std::to_string(params[i]);
    return s;
  };
  switch (family) {
    case Family::Symmetric: return join("Sn");
    case Family::Alternating: return join("An");
    case Family::Cyclic: return join("Cn");
    case Family::ElementaryAbelian: return join("ElemAb");
    case Family::Affine: return join("Affine");
    case Family::Sharply2Transitive: return join("Sharply2t");
    case Family::PaperExample2: return "PaperEx2";
    case Family::PSL2: return join("PSL2");
    case Family::PGL2: return join("PGL2");
    case Family::PGammaL2: return join("PGammaL2");
    case Family::M11: return "M11";
    case Family::WreathS5S2: return join("WrS5S2");
    case Family::Custom: return "custom";
  }
  return "?";
}

GroupSpec parse_group_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (name == "file") return GroupSpec::custom(read_file(std::string(rest)));
  std::vector<unsigned> params;
  if (colon != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = rest.find(',', start);
      params.push_back(parse_uint(rest.substr(start, comma - start), text));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  static const std::pair<std::string_view, Family> names[] = {
      {"Sn", Family::Symmetric},        {"An", Family::Alternating},     {"Cn", Family::Cyclic},
      {"ElemAb", Family::ElementaryAbelian}, {"Affine", Family::Affine}, {"Sharply2t", Family::Sharply2Transitive},
      {"PaperEx2", Family::PaperExample2}, {"PSL2", Family::PSL2},       {"PGL2", Family::PGL2},
      {"PGammaL2", Family::PGammaL2},  {"M11", Family::M11},           {"WrS5S2", Family::WreathS5S2},
  };
  for (const auto& [n, f] : names)
    if (n == name) return GroupSpec{f, std::move(params), {}};
  throw InvalidSpec("unknown group family '" + std::string(name) + "'");
}

PermGroup build(const GroupSpec& spec) {
  const auto& a = spec.params;
  switch (spec.family) {
    case Family::Symmetric: {
      need_params(spec, 1);
      const unsigned n = a[0];
      need(n >= 1, "Sn: n >= 1");
      std::vector<Permutation> gens;
      if (n >= 2) gens.push_back(cycle_on(n, 0, 2));
      if (n >= 3) gens.push_back(cycle_on(n, 0, n));
      PermGroup g(n, std::move(gens));
      expect_order(g, factorial(n), spec.label());
      return g;
    }
    case Family::Alternating: {
      need_params(spec, 1);
      const unsigned n = a[0];
      need(n >= 1, "An: n >= 1");
      std::vector<Permutation> gens;
      for (unsigned i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
      PermGroup g(n, std::move(gens));
      expect_order(g, n >= 2 ? factorial(n) / 2 : BigInt(1), spec.label());
      return g;
    }
    case Family::Cyclic: {
      need_params(spec, 1);
      const unsigned n = a[0];
      need(n >= 1, "Cn: n >= 1");
      std::vector<Permutation> gens;
      if (n >= 2) gens.push_back(cycle_on(n, 0, n));
      PermGroup g(n, std::move(gens));
      expect_order(g, n, spec.label());
      return g;
    }
    case Family::ElementaryAbelian: {
      need_params(spec, 2);
      const unsigned p = a[0], k = a[1];
      need(is_prime(p) && k >= 1, "ElemAb: p prime, k >= 1");
      std::vector<Permutation> gens;
      for (unsigned i = 0; i < k; ++i) gens.push_back(cycle_on(std::size_t{p} * k, i * p, p));
      PermGroup g(std::size_t{p} * k, std::move(gens));
      expect_order(g, boost::multiprecision::pow(BigInt(p), k), spec.label());
      return g;
    }
    case Family::Affine:
      need_params(spec, 3);
      return affine_group(a[0], a[1], a[2]);
    case Family::Sharply2Transitive: {
      need_params(spec, 1);
      auto [p, k] = prime_power(a[0]);
      need(p != 0 && a[0] <= GaloisField::kMaxOrder, "Sharply2t: q must be a prime power <= 32");
      return affine_group(p, k, a[0] - 1);
    }
    case Family::PaperExample2: {
      // (C19 : C9) x C3: affine maps of Z/19 with multiplier 4 (order 9),
      // and a 3-cycle on three extra points.
      const std::size_t degree = 22;
      std::vector<Point> x(degree), y(degree);
      std::iota(x.begin(), x.end(), Point{0});
      std::iota(y.begin(), y.end(), Point{0});
      for (Point i = 0; i < 19; ++i) {
        x[i] = (i + 1) % 19;
        y[i] = (4 * i) % 19;
      }
      PermGroup g(degree, {Permutation(x), Permutation(y), Permutation::from_cycles(degree, {{19, 20, 21}})});
      expect_order(g, 19 * 9 * 3, spec.label());
      return g;
    }
    case Family::PSL2:
      need_params(spec, 1);
      return projective_group(a[0], LineGroup::PSL);
    case Family::PGL2:
      need_params(spec, 1);
      return projective_group(a[0], LineGroup::PGL);
    case Family::PGammaL2:
      need_params(spec, 1);
      return projective_group(a[0], LineGroup::PGammaL);
    case Family::M11: {
      const std::size_t degree = 11;
      PermGroup g(degree, {cycle_on(degree, 0, 11), Permutation::from_cycles(degree, {{2, 6, 10, 7}, {3, 9, 4, 5}})});
      expect_order(g, 7920, "M11");
      return g;
    }
    case Family::WreathS5S2:
      need_params(spec, 1);
      need(a[0] == 1 || a[0] == 2, "WrS5S2: variant must be 1 or 2");
      return wreath_nonzero_spread_subgroups().at(a[0] - 1);
    case Family::Custom:
      return parse_gens_file(spec.text);
  }
  throw InvalidSpec("unhandled family");
}

std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto skip_space = [&](bool newlines_separate) {
    while (i < text.size()) {
      if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') advance();
      } else if (text[i] == '\n' && newlines_separate) {
        return;
      } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
        advance();
      } else {
        return;
      }
    }
  };

  std::optional<Permutation> current;
  auto finish = [&] {
    if (current) out.push_back(std::move(*current));
    current.reset();
  };
  while (true) {
    skip_space(true);
    if (i >= text.size()) break;
    const char c = text[i];
    if (c == '\n' || c == ',' || c == ';') {
      finish();
      advance();
      continue;
    }
    if (c != '(') throw ParseError(std::string("unexpected '") + c + "'", line, col);
    const std::size_t open_line = line, open_col = col;
    advance();
    std::vector<Point> cycle;
    bool closed = false;
    while (i < text.size()) {
      skip_space(false);
      if (i >= text.size()) break;
      if (text[i] == ')') {
        advance();
        closed = true;
        break;
      }
      if (!cycle.empty()) {
        if (text[i] != ',') throw ParseError("expected ',' or ')'", line, col);
        advance();
        skip_space(false);
      }
      const std::size_t num_line = line, num_col = col;
      std::size_t value = 0, digits = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        ++digits;
        advance();
        if (value > 1'000'000) throw ParseError("point number too large", num_line, num_col);
      }
      if (!digits) throw ParseError("expected a point number", line, col);
      if (value < 1 || value > degree) throw PointOutOfRange(value, degree);
      for (Point p : cycle)
        if (p == value - 1) throw ParseError("point repeated within a cycle", num_line, num_col);
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!closed) throw ParseError("unclosed cycle", open_line, open_col);
    const auto perm = cycle.size() > 1 ? Permutation::from_cycles(degree, {cycle}) : Permutation(degree);
    current = current ? *current * perm : perm;
  }
  finish();
  return out;
}

PermGroup parse_gens_file(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line = 1;
  // Find the "deg N" header, skipping blank and comment lines.
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view ln = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    const auto first = ln.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || ln[first] == '#') {
      if (end == std::string_view::npos) break;
      pos = end + 1;
      ++line;
      continue;
    }
    ln = ln.substr(first);
    if (ln.substr(0, 3) != "deg") throw ParseError("expected 'deg N' header", line, first + 1);
    std::string_view num = ln.substr(3);
    num = num.substr(std::min(num.size(), num.find_first_not_of(" \t")));
    num = num.substr(0, num.find_last_not_of(" \t\r") + 1);
    unsigned degree = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), degree);
    if (ec != std::errc{} || ptr != num.data() + num.size() || degree == 0)
      throw ParseError("bad degree in header", line, first + 4);
    std::string rest = end == std::string_view::npos ? std::string{} : std::string(text.substr(end + 1));
    // Keep reported line numbers relative to the whole file.
    rest.insert(0, line, '\n');
    return PermGroup(degree, parse_generators(rest, degree));
  }
  throw ParseError("missing 'deg N' header", line, 1);
}

PermGroup s5_wreath_s2() {
  const std::size_t degree = 10;
  std::vector<Permutation> gens{
      Permutation::from_cycles(degree, {{0, 1}}),
      Permutation::from_cycles(degree, {{0, 1, 2, 3, 4}}),
      Permutation::from_cycles(degree, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}),
  };
  PermGroup g(degree, std::move(gens));
  expect_order(g, 28800, "S5 wr S2");
  return g;
}

}  // namespace genset

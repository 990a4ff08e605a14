#include "progressio/group_expr.hpp"

#include <array>
#include <cctype>

#include "progressio/constructors.hpp"
#include "progressio/error.hpp"
#include "progressio/numtheory.hpp"

namespace progressio {

namespace {

struct Arity {
  std::string_view name;
  std::size_t ints;
};

constexpr std::array<Arity, 8> kNamed{{{"C", 1},
                                       {"ElemAb", 2},
                                       {"S", 1},
                                       {"A", 1},
                                       {"NonAbPQ", 2},
                                       {"Frob", 2},
                                       {"Heis", 1},
                                       {"ModMax", 1}}};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(std::string const& msg) {
    throw ParseError(msg + " at column " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t const start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected a group name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_ws();
    std::size_t const start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return v;
  }

  GroupExpr expr() {
    skip_ws();
    std::size_t const name_pos = pos_;
    GroupExpr e;
    e.name = identifier();
    if (e.name == "Q8") return e;
    if (e.name == "DP") {
      expect('(');
      e.operands.push_back(expr());
      expect(',');
      e.operands.push_back(expr());
      expect(')');
      return e;
    }
    std::size_t arity = 0;
    bool known = false;
    for (auto const& a : kNamed) {
      if (a.name == e.name) {
        arity = a.ints;
        known = true;
      }
    }
    if (!known) {
      pos_ = name_pos;
      fail("unknown group constructor '" + e.name + "'");
    }
    expect('(');
    for (std::size_t i = 0; i < arity; ++i) {
      if (i) expect(',');
      e.args.push_back(integer());
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(GroupExpr const& e) {
  if (e.name == "Q8") return "Q8";
  std::string out = e.name + "(";
  if (e.name == "DP") {
    out += render(e.operands.at(0)) + "," + render(e.operands.at(1));
  } else {
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e.args[i]);
    }
  }
  return out + ")";
}

FiniteGroup build(GroupExpr const& e, std::size_t cap) {
  namespace c = constructors;
  try {
    auto const& a = e.args;
    if (e.name == "Q8") return c::quaternion8();
    if (e.name == "DP") return c::direct_product(build(e.operands.at(0), cap), build(e.operands.at(1), cap), cap);
    if (e.name == "C") return c::cyclic(a.at(0), cap);
    if (e.name == "ElemAb") return c::elementary_abelian(a.at(0), a.at(1), cap);
    if (e.name == "S") return c::symmetric(a.at(0), cap);
    if (e.name == "A") return c::alternating(a.at(0), cap);
    if (e.name == "NonAbPQ") return c::nonabelian_pq(a.at(0), a.at(1));
    if (e.name == "Frob") return c::frobenius_field_action(a.at(0), a.at(1), cap);
    if (e.name == "Heis") return c::heisenberg(a.at(0), cap);
    if (e.name == "ModMax") return c::modular_maximal(a.at(0), cap);
  } catch (PreconditionError const& err) {
    if (e.name == "DP") throw;
    throw PreconditionError(render(e) + ": " + err.what());
  }
  throw PreconditionError("unknown group constructor '" + e.name + "'");
}

std::uint64_t expected_order(GroupExpr const& e) {
  auto const& a = e.args;
  if (e.name == "Q8") return 8;
  if (e.name == "DP") return sat_mul(expected_order(e.operands.at(0)), expected_order(e.operands.at(1)));
  if (e.name == "C") return a.at(0);
  if (e.name == "ElemAb") return sat_pow(a.at(0), a.at(1));
  if (e.name == "S" || e.name == "A") {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= a.at(0); ++i) f = sat_mul(f, i);
    return (e.name == "A" && a.at(0) >= 2) ? f / 2 : f;
  }
  if (e.name == "NonAbPQ") return sat_mul(a.at(0), a.at(1));
  if (e.name == "Frob") {
    return sat_mul(sat_pow(a.at(0), numtheory::multiplicative_order(a.at(0), a.at(1))), a.at(1));
  }
  if (e.name == "Heis" || e.name == "ModMax") return sat_pow(a.at(0), 3);
  throw PreconditionError("unknown group constructor '" + e.name + "'");
}

}  // namespace progressio

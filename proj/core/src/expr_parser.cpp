#include "sepr/expr_parser.hpp"

#include <cctype>
#include <limits>

#include "sepr/error.hpp"

namespace sepr {
namespace {

class Parser {
 public:
  Parser(std::string_view src, VariableTable* growable, VariableTablePtr vars)
      : src_(src), growable_(growable), vars_(std::move(vars)) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == src_.size()) throw ParseError(pos_, "empty expression");
    Polynomial value = expr();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return value;
  }

 private:
  Polynomial expr() {
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    Polynomial value = term();
    if (negate) value = -value;
    for (;;) {
      char op = peek();
      if (op != '+' && op != '-') return value;
      ++pos_;
      Polynomial rhs = term();
      value = op == '+' ? value + rhs : value - rhs;
    }
  }

  Polynomial term() {
    Polynomial value = factor();
    while (peek() == '*') {
      ++pos_;
      value = value * factor();
    }
    return value;
  }

  Polynomial factor() {
    Polynomial value = base();
    if (peek() != '^') return value;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    if (at >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[at])))
      throw ParseError(at, "exponent must be a nonnegative integer literal");
    mpz_class exp{std::string(digits())};
    if (exp > std::numeric_limits<std::uint32_t>::max()) throw ParseError(at, "exponent too large");
    return pow(value, static_cast<std::uint32_t>(exp.get_ui()));
  }

  Polynomial base() {
    char c = peek();
    const std::size_t at = pos_;
    if (at >= src_.size()) throw ParseError(at, "unexpected end of expression");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class literal{std::string(digits())};
      return Polynomial::constant(std::move(literal), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string_view ident = identifier();
      VarIndex index;
      if (growable_ != nullptr) {
        index = growable_->intern(ident);
      } else if (auto found = vars_->find(ident)) {
        index = *found;
      } else {
        throw ParseError(at, "undeclared variable '" + std::string(ident) + "'");
      }
      return Polynomial::variable(vars_, index);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    throw ParseError(at, std::string("unexpected '") + c + "'");
  }

  Polynomial pow(Polynomial base, std::uint32_t exp) {
    Polynomial result = Polynomial::constant(1, vars_);
    while (exp != 0) {
      if (exp & 1u) result = result * base;
      exp >>= 1;
      if (exp != 0) base = base * base;
    }
    return result;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    reject_juxtaposition();
    return src_.substr(start, pos_ - start);
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  // "2a1" is implicit multiplication, which the grammar does not allow.
  void reject_juxtaposition() const {
    if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  VariableTable* growable_;
  VariableTablePtr vars_;
};

}  // namespace

Polynomial parse_entry(std::string_view source, const std::shared_ptr<VariableTable>& vars) {
  if (!vars) throw DomainError("parse_entry needs a variable table");
  return Parser(source, vars.get(), vars).parse();
}

Polynomial parse_entry_strict(std::string_view source, const std::shared_ptr<const VariableTable>& vars) {
  if (!vars) throw DomainError("parse_entry_strict needs a variable table");
  return Parser(source, nullptr, vars).parse();
}

}  // namespace sepr

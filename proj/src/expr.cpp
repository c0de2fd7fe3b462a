#include "apsum/expr.hpp"

#include <cctype>

namespace apsum {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& names) : text_(text), names_(names) {}

  Natural parse_full_expr() {
    Natural v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

  bool parse_assertion() {
    skip();
    if (text_.substr(pos_).starts_with("ispow(")) {
      pos_ += 6;
      Natural base = expr();
      expect(',');
      Natural value = expr();
      expect(')');
      skip();
      if (pos_ != text_.size()) fail("trailing input after ispow(...)");
      if (base < 2) fail("ispow base must be >= 2");
      return value >= 1 && power_exponent(value, base).has_value();
    }
    Natural lhs = expr();
    skip();
    std::string op;
    while (pos_ < text_.size() && std::string_view("=!<>").find(text_[pos_]) != std::string_view::npos) {
      op.push_back(text_[pos_++]);
    }
    Natural rhs = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (op == "=" || op == "==") return lhs == rhs;
    if (op == "!=") return lhs != rhs;
    if (op == "<") return lhs < rhs;
    if (op == "<=") return lhs <= rhs;
    if (op == ">") return lhs > rhs;
    if (op == ">=") return lhs >= rhs;
    fail("missing comparison operator");
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ContractError("expression '" + std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Natural expr() {
    Natural v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Natural term() {
    Natural v = unary();
    while (accept('*')) v *= unary();
    return v;
  }

  Natural unary() {
    if (accept('-')) return -unary();
    Natural base = primary();
    if (accept('^')) {
      Natural e = unary();
      if (e < 0 || e > 100000) fail("exponent out of range");
      return pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Natural primary() {
    skip();
    if (accept('(')) {
      Natural v = expr();
      expect(')');
      return v;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Natural(std::string(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto it = names_.find(name);
      if (it == names_.end()) fail("unknown name '" + std::string(name) + "'");
      return it->second;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Bindings& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Natural eval_expr(std::string_view text, const Bindings& names) { return Parser(text, names).parse_full_expr(); }

bool eval_assertion(std::string_view text, const Bindings& names) { return Parser(text, names).parse_assertion(); }

}  // namespace apsum

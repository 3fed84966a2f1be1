#include "powerspace/expression.hpp"

#include <cctype>

#include "powerspace/errors.hpp"

namespace powerspace {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expression parse() {
    Expression e = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "expression '" + text_ + "': " + what + " at column " + std::to_string(pos_ + 1));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expression expr() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_++];
    Expression e;
    switch (c) {
      case 'X': return e;
      case 'A': e.kind = Kind::Lower; break;
      case 'K': e.kind = Kind::Upper; break;
      case 'L': e.kind = Kind::Convex; break;
      case 'O': e.kind = Kind::OpenLattice; break;
      default: --pos_; fail(std::string("unknown constructor '") + c + "'");
    }
    expect('(');
    e.inner = std::make_shared<const Expression>(expr());
    expect(')');
    return e;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Expression::to_string() const {
  if (!kind) return "X";
  return std::string(kind_letter(*kind)) + "(" + inner->to_string() + ")";
}

Expression parse_expression(const std::string& text) { return Parser(text).parse(); }

Built evaluate(const Expression& e, SpaceRef X, const Limits& limits) {
  if (!e.kind) return X;
  Built inner = evaluate(*e.inner, X, limits);
  if (auto* base = std::get_if<SpaceRef>(&inner)) return construct(*e.kind, *base, limits);
  return construct(*e.kind, std::get<ConstructedRef>(inner), limits);
}

const FiniteSpace& built_space(const Built& b) {
  if (auto* s = std::get_if<SpaceRef>(&b)) return **s;
  return *std::get<ConstructedRef>(b)->space;
}

}  // namespace powerspace

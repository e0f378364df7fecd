#include "switchlab/degree_expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

namespace switchlab {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void advance() { ++pos_; }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    skip_space();
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("degree expression: " + what + " at position " + std::to_string(pos_ + 1));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DegreeVector parse_degree_expression(std::string_view expr) {
  Scanner in(expr);
  std::vector<int> degrees;
  bool multiplicities = false;
  in.skip_space();
  if (in.done()) in.fail("empty expression");
  for (;;) {
    const int degree = in.number();
    int count = 1;
    if (in.peek('^')) {
      in.advance();
      multiplicities = true;
      count = in.number();
      if (count == 0) in.fail("multiplicity must be positive");
    }
    if (degrees.size() + static_cast<std::size_t>(count) > static_cast<std::size_t>(kMaxVertices)) {
      in.fail("more than " + std::to_string(kMaxVertices) + " vertices");
    }
    degrees.insert(degrees.end(), static_cast<std::size_t>(count), degree);
    if (in.done()) break;
    if (!in.peek(',')) in.fail("expected ',' or '^'");
    in.advance();
  }
  if (multiplicities) std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return DegreeVector(std::move(degrees));
}

}  // namespace switchlab

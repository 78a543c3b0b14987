#include <cctype>

#include "diffu/funcspace.hpp"

namespace diffu {

namespace {

class FunctionParser {
 public:
  FunctionParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  PolyFunc parse() {
    std::vector<std::pair<std::uint64_t, Elem>> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty function", pos_);
    for (;;) {
      terms.push_back(term());
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') throw ParseError(std::string("expected '+' but found '") + peek() + "'", pos_);
      ++pos_;
      skip_ws();
      if (at_end()) throw ParseError("dangling '+'", pos_);
    }
    return PolyFunc(field_, terms);
  }

 private:
  std::pair<std::uint64_t, Elem> term() {
    if (peek() == 'x' || peek() == 'X') {
      // "0x..." is a coefficient; a lone 'x' is the variable.
      return {monomial(), 1};
    }
    const Elem c = coefficient();
    skip_ws();
    if (at_end() || peek() != '*') return {0, c};
    ++pos_;
    skip_ws();
    if (at_end() || (peek() != 'x' && peek() != 'X')) throw ParseError("expected 'x' after '*'", pos_);
    return {monomial(), c};
  }

  std::uint64_t monomial() {
    ++pos_;  // 'x'
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t e = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (e > (std::uint64_t{1} << 40)) throw ParseError("exponent too large", start);
      e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a decimal exponent after '^'", pos_);
    return e;
  }

  Elem coefficient() {
    const std::size_t start = pos_;
    if (peek() == '0' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X')) {
      pos_ += 2;
    }
    const std::size_t digits = pos_;
    while (!at_end() && std::isxdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw ParseError("expected a hex coefficient or 'x'", start);
    const auto v = parse_hex(text_.substr(digits, pos_ - digits));
    if (!v || *v >= field_.order()) {
      throw ParseError("coefficient " + std::string(text_.substr(start, pos_ - start)) +
                           " is not an element of F_2^" + std::to_string(field_.degree()),
                       start);
    }
    return static_cast<Elem>(*v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyFunc parse_function(const Field& field, std::string_view text) {
  return FunctionParser(field, text).parse();
}

std::vector<Elem> parse_value_table(const Field& field, std::string_view text) {
  std::vector<Elem> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    const auto v = parse_hex(line);
    if (!v || *v >= field.order()) {
      throw std::invalid_argument("value table line " + std::to_string(lineno) + ": '" +
                                  std::string(line) + "' is not a field element");
    }
    out.push_back(static_cast<Elem>(*v));
  }
  if (out.size() != field.order()) {
    throw std::invalid_argument("value table has " + std::to_string(out.size()) + " entries, expected " +
                                std::to_string(field.order()));
  }
  return out;
}

}  // namespace diffu

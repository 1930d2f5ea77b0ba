#include "parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace roofcalc::cli {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::Parse,
            "at byte " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Ambient ambient)
      : text_(text), ambient_(ambient) {}

  BundleExpr parse() {
    BundleExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  int integer() {
    skip();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    int v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  BundleExpr expr() {
    BundleExpr e = term();
    while (accept("+")) e = e + term();
    return e;
  }

  BundleExpr term() {
    BundleExpr e = factor();
    while (accept("*")) e = tensor(e, factor());
    return e;
  }

  BundleExpr power(bool wedge) {
    const int m = integer();
    if (m < 0) fail("negative exponent");
    expect("(");
    skip();
    const std::size_t start = pos_;
    BundleExpr inner = expr();
    std::size_t stop = pos_;
    while (stop > start && std::isspace(static_cast<unsigned char>(text_[stop - 1]))) --stop;
    expect(")");
    try {
      return wedge ? wedge_power(inner, m) : sym_power(inner, m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PlethysmRequired) throw;
      throw Error(ErrorKind::PlethysmRequired,
                  std::string(wedge ? "Wedge" : "Sym") + "^" + std::to_string(m) +
                      " of '" + std::string(text_.substr(start, stop - start)) +
                      "' (byte " + std::to_string(start) + "): " + e.what());
    }
  }

  std::optional<AtomKind> block() {
    if (accept("UD")) return AtomKind::Udual;
    if (accept("U")) return AtomKind::U;
    if (accept("QD")) return AtomKind::Qdual;
    if (accept("Q")) return AtomKind::Q;
    return std::nullopt;
  }

  BundleExpr factor() {
    skip();
    if (accept("Sym^")) return power(false);
    if (accept("Wedge^")) return power(true);
    if (accept("Dual(")) {
      BundleExpr e = expr();
      expect(")");
      return dual(e);
    }
    if (accept("(")) {
      BundleExpr e = expr();
      expect(")");
      return e;
    }
    if (accept("O(")) {
      const int t = integer();
      expect(")");
      return BundleExpr::line(ambient_, t);
    }
    if (accept("S[")) {
      const std::size_t at = pos_;
      std::vector<int> lambda;
      skip();
      if (!accept("]")) {
        do {
          lambda.push_back(integer());
        } while (accept(","));
        expect("]");
      }
      if (lambda.empty()) fail("empty Schur label");
      const auto kind = block();
      if (!kind) fail("expected U, UD, Q or QD after the Schur label");
      BundleAtomTag tag;
      tag.kind = AtomKind::Schur;
      tag.block = (*kind == AtomKind::U || *kind == AtomKind::Udual) ? Block::Upper
                                                                     : Block::Lower;
      tag.dual_side = *kind == AtomKind::U || *kind == AtomKind::Q;
      try {
        tag.lambda = Weight(lambda);
        return BundleExpr::atom(ambient_, tag);
      } catch (const Error& e) {
        throw ParseError(at, e.what());
      }
    }
    if (accept("0")) return BundleExpr::zero(ambient_);
    if (auto kind = block()) return BundleExpr::atom(ambient_, *kind);
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  Ambient ambient_;
  std::size_t pos_ = 0;
};

}  // namespace

BundleExpr parse_bundle(std::string_view text, Ambient ambient) {
  if (ambient.k < 1 || ambient.k >= ambient.n) {
    throw Error(ErrorKind::InvalidRank, "ambient " + ambient.str());
  }
  return Parser(text, ambient).parse();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto blank = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  blank();
  if (pos == text.size()) return out;
  for (;;) {
    blank();
    const char* begin = text.data() + pos;
    if (pos < text.size() && text[pos] == '+') ++begin;
    int v = 0;
    auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError(pos, "expected an integer");
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
    blank();
    if (pos == text.size()) return out;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
}

DoubleWeight parse_double_weight(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError(0, "expected 'upper|lower'");
  std::vector<int> upper = parse_int_list(text.substr(0, bar));
  std::vector<int> lower;
  try {
    lower = parse_int_list(text.substr(bar + 1));
  } catch (const ParseError& e) {
    throw ParseError(bar + 1 + e.offset(), "expected an integer list after '|'");
  }
  if (upper.empty() || lower.empty()) {
    throw ParseError(bar, "both sides of '|' need at least one entry");
  }
  return DoubleWeight(Weight(std::move(upper)), Weight(std::move(lower)));
}

}  // namespace roofcalc::cli

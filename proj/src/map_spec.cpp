#include <cctype>
#include <cstdlib>

#include "nevpull/cli.hpp"
#include "nevpull/errors.hpp"

namespace nevpull {

namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  AnalyticSelfMap map() {
    skip();
    const std::size_t at = pos_;
    const std::string head = ident();
    expect('(');
    if (head == "blaschke") return blaschke();
    if (head == "scale") return scale();
    if (head == "singular") return singular();
    throw ParseError("unknown map constructor '" + head + "'", at);
  }

  cplx complex() {
    skip();
    const std::size_t at = pos_;
    cplx z{0.0, 0.0};
    bool have_re = false, have_im = false;
    for (int term = 0; term < 2; ++term) {
      skip();
      double sign = 1.0;
      bool signed_term = false;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1.0 : 1.0;
        signed_term = true;
        skip();
      }
      if (term == 1 && !signed_term) break;
      double v = 1.0;
      bool number = false;
      if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
        v = real_number();
        number = true;
      }
      skip();
      if (peek() == 'i') {
        ++pos_;
        if (have_im) throw ParseError("two imaginary parts", at);
        z.imag(sign * v);
        have_im = true;
      } else {
        if (!number) throw ParseError("expected a number", pos_);
        if (have_re || have_im) throw ParseError("real part must come first", at);
        z.real(sign * v);
        have_re = true;
      }
      if (have_im) break;
    }
    return z;
  }

  double real() {
    skip();
    const std::size_t at = pos_;
    const cplx z = complex();
    if (z.imag() != 0.0) throw ParseError("expected a real number", at);
    return z.real();
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing text", pos_);
  }

private:
  AnalyticSelfMap blaschke() {
    std::vector<cplx> zeros;
    bool have_zeros = false;
    cplx rot{1.0, 0.0};
    for (bool first = true; !accept(')'); first = false) {
      if (!first) expect(',');
      const std::size_t at = pos_;
      const std::string key = ident();
      expect('=');
      if (key == "zeros") {
        expect('[');
        for (bool f = true; !accept(']'); f = false) {
          if (!f) expect(',');
          zeros.push_back(complex());
        }
        have_zeros = true;
      } else if (key == "rot") {
        rot = complex();
      } else {
        throw ParseError("unknown blaschke argument '" + key + "'", at);
      }
    }
    if (!have_zeros) throw ParseError("blaschke needs zeros=[...]", pos_);
    return AnalyticSelfMap::blaschke(std::move(zeros), rot);
  }

  AnalyticSelfMap scale() {
    const double t = real();
    expect(',');
    AnalyticSelfMap inner = map();
    expect(')');
    return AnalyticSelfMap::scaled(t, std::move(inner));
  }

  AnalyticSelfMap singular() {
    double c = 1.0;
    cplx xi{1.0, 0.0};
    bool have_c = false;
    for (bool first = true; !accept(')'); first = false) {
      if (!first) expect(',');
      const std::size_t at = pos_;
      const std::string key = ident();
      expect('=');
      if (key == "c") {
        c = real();
        have_c = true;
      } else if (key == "xi") {
        xi = complex();
      } else {
        throw ParseError("unknown singular argument '" + key + "'", at);
      }
    }
    if (!have_c) throw ParseError("singular needs c=...", pos_);
    return AnalyticSelfMap::atomic_singular(c, xi);
  }

  double real_number() {
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("expected a number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) throw ParseError("expected a name", pos_);
    return s_.substr(start, pos_ - start);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

AnalyticSelfMap parse_map_spec(const std::string& text) {
  Parser p(text);
  AnalyticSelfMap m = p.map();
  p.finish();
  return m;
}

cplx parse_complex(const std::string& text) {
  Parser p(text);
  const cplx z = p.complex();
  p.finish();
  return z;
}

}  // namespace nevpull

#include "asreg/exactfield.hpp"

#include <cctype>

namespace asreg {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const { return render_scalar(*this); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << render_scalar(s); }

std::string render_scalar(const Scalar& s) {
  const bool has_re = sgn(s.re()) != 0;
  const bool has_im = sgn(s.im()) != 0;
  if (!has_im) return s.re().get_str();
  std::string out;
  if (has_re) out = s.re().get_str();
  mpq_class im = s.im();
  if (sgn(im) < 0) {
    out += '-';
    im = -im;
  } else if (has_re) {
    out += '+';
  }
  if (im == 1) {
    out += 'i';
  } else {
    out += im.get_str();
    out += "*i";
  }
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    Scalar total;
    bool first = true;
    int terms = 0;
    bool seen_re = false;
    bool seen_im = false;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      skip_ws();
      mpq_class value(1);
      bool has_number = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        value = parse_rational();
        has_number = true;
      }
      skip_ws();
      bool imaginary = false;
      if (!at_end() && peek() == '*') {
        if (!has_number) fail("'*' without a coefficient");
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'i') fail("expected 'i' after '*'");
      }
      if (!at_end() && peek() == 'i') {
        ++pos_;
        imaginary = true;
      }
      if (!has_number && !imaginary) fail("expected a number");
      if (sign < 0) value = -value;
      if (imaginary) {
        if (seen_im) fail("repeated imaginary part");
        seen_im = true;
        total += Scalar(mpq_class(0), value);
      } else {
        if (seen_re || seen_im) fail("real part must come first");
        seen_re = true;
        total += Scalar(value);
      }
      ++terms;
      first = false;
      skip_ws();
    }
    if (terms > 2) fail("too many terms");
    return total;
  }

 private:
  mpq_class parse_rational() {
    mpz_class num = parse_int();
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      mpz_class den = parse_int();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  mpz_class parse_int() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed scalar '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::optional<mpq_class> sqrt_rational(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  return mpq_class(sqrt(q.get_num()), sqrt(q.get_den()));
}

std::optional<Scalar> sqrt_exact(const Scalar& z) {
  if (z.is_zero()) return Scalar();
  if (z.is_real()) {
    if (sgn(z.re()) > 0) {
      if (auto r = sqrt_rational(z.re())) return Scalar(*r);
      return std::nullopt;
    }
    if (auto r = sqrt_rational(-z.re())) return Scalar(mpq_class(0), *r);
    return std::nullopt;
  }
  // (a+bi)^2 = z forces a^2 = (|z|+u)/2, b^2 = (|z|-u)/2 and sign(b) = sign(v).
  auto modulus = sqrt_rational(z.norm());
  if (!modulus) return std::nullopt;
  auto a = sqrt_rational((*modulus + z.re()) / 2);
  auto b = sqrt_rational((*modulus - z.re()) / 2);
  if (!a || !b) return std::nullopt;
  mpq_class im = sgn(z.im()) < 0 ? mpq_class(-*b) : *b;
  return Scalar(*a, im);
}

}  // namespace asreg

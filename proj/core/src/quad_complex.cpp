#include "cscodes/quad_complex.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <utility>

namespace cscodes {

namespace {

struct SquareFreeSplit {
  mpz_class square_root;  // s
  mpz_class square_free;  // f, with n = s^2 * f
};

// Trial division up to 10^7; a leftover cofactor is absorbed if it is a
// perfect square and otherwise kept in the square-free part.
SquareFreeSplit split_square_free(mpz_class n) {
  SquareFreeSplit out{1, 1};
  if (n == 0) return {0, 0};
  for (unsigned long p = 2; p < 10'000'000UL; p += (p == 2 ? 1 : 2)) {
    const mpz_class pp(p);
    if (pp * pp > n) break;
    const mpz_class p2 = pp * pp;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t()) != 0) {
      n /= p2;
      out.square_root *= pp;
    }
    if (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t()) != 0) {
      n /= pp;
      out.square_free *= pp;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    out.square_root *= r;
  } else {
    out.square_free *= n;
  }
  return out;
}

bool is_rational_square(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  mpz_class num = r.numerator();
  mpz_class den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class a;
  mpz_class b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  if (root != nullptr) *root = Rational(a, b);
  return true;
}

// Value q * sqrt(s) with rational s > 0; the parser's intermediate form, so
// that "sqrt(7)*i" can be assembled factor by factor.
struct Surd {
  QuadComplex q;
  Rational s{1};

  QuadComplex resolve() const {
    if (s == Rational(1)) return q;
    Rational root;
    if (is_rational_square(s, &root)) return q * QuadComplex(root);
    if (q.real().is_zero()) {
      const Rational d = q.radicand() == 0 ? Rational(0) : Rational(q.radicand());
      return QuadComplex(0, q.imag_coeff(), d * s);
    }
    throw std::invalid_argument("expression requires a real radical sqrt(" + s.to_string() +
                                "), which is not representable");
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  QuadComplex parse() {
    Surd value = expression();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value.resolve();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_spaces();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool starts_primary() {
    auto c = peek();
    if (!c) return false;
    return std::isdigit(static_cast<unsigned char>(*c)) || *c == '(' || *c == 'i' || *c == 's';
  }

  Surd expression() {
    Surd acc;
    bool negate = false;
    if (auto c = peek(); c && (*c == '+' || *c == '-')) {
      negate = *c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc.q = -acc.q;
    while (auto c = peek()) {
      if (*c != '+' && *c != '-') break;
      ++pos_;
      Surd rhs = term();
      QuadComplex sum = *c == '+' ? acc.resolve() + rhs.resolve() : acc.resolve() - rhs.resolve();
      acc = Surd{sum, 1};
    }
    return acc;
  }

  Surd term() {
    Surd acc = unary();
    while (true) {
      auto c = peek();
      if (c && (*c == '*' || *c == '/')) {
        ++pos_;
        Surd rhs = unary();
        if (*c == '*') {
          acc = Surd{acc.q * rhs.q, acc.s * rhs.s};
        } else {
          if (rhs.q == QuadComplex(0)) fail("division by zero");
          acc = Surd{acc.q / rhs.q, acc.s / rhs.s};
        }
      } else if (starts_primary()) {
        Surd rhs = unary();  // implicit multiplication, e.g. "3i" or "2sqrt(5)"
        acc = Surd{acc.q * rhs.q, acc.s * rhs.s};
      } else {
        break;
      }
    }
    return acc;
  }

  Surd unary() {
    if (auto c = peek(); c && (*c == '-' || *c == '+')) {
      ++pos_;
      Surd inner = unary();
      if (*c == '-') inner.q = -inner.q;
      return inner;
    }
    return primary();
  }

  Surd primary() {
    auto c = peek();
    if (!c) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Surd{QuadComplex(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10))), 1};
    }
    if (*c == '(') {
      ++pos_;
      Surd inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (peek() != '(') fail("expected '(' after sqrt");
      ++pos_;
      QuadComplex arg = expression().resolve();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (!arg.is_real()) fail("sqrt of a non-real value");
      const Rational r = arg.real();
      if (r.sign() >= 0) return Surd{QuadComplex(1), r.is_zero() ? Rational(0) : r};
      return Surd{QuadComplex::i(), -r};
    }
    if (*c == 'i') {
      ++pos_;
      return Surd{QuadComplex::i(), 1};
    }
    fail(std::string("unexpected character '") + *c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadComplex::QuadComplex(Rational re, Rational im_coeff, const Rational& radicand)
    : re_(std::move(re)), im_(std::move(im_coeff)) {
  if (radicand.sign() < 0) {
    throw std::domain_error("negative radicand; real quadratic values are not supported");
  }
  // sqrt(p/q) = sqrt(p*q)/q and p*q = s^2 * f.
  const SquareFreeSplit split = split_square_free(radicand.numerator() * radicand.denominator());
  im_ *= Rational(split.square_root, radicand.denominator());
  radicand_ = split.square_free;
  canonicalize();
}

void QuadComplex::canonicalize() {
  if (im_.is_zero() || radicand_ == 0) {
    im_ = Rational(0);
    radicand_ = 0;
  }
}

QuadComplex QuadComplex::parse(std::string_view text) { return Parser(text).parse(); }

mpz_class QuadComplex::common_radicand(const QuadComplex& a, const QuadComplex& b) {
  if (a.radicand_ == 0) return b.radicand_;
  if (b.radicand_ == 0 || a.radicand_ == b.radicand_) return a.radicand_;
  throw RadicandMismatch("cannot combine values from Q(i*sqrt(" + a.radicand_.get_str() + ")) and Q(i*sqrt(" +
                         b.radicand_.get_str() + "))");
}

Rational QuadComplex::norm() const { return re_ * re_ + im_ * im_ * Rational(radicand_); }

QuadComplex QuadComplex::conj() const {
  QuadComplex out = *this;
  out.im_ = -out.im_;
  return out;
}

QuadComplex QuadComplex::pow(int exponent) const {
  if (exponent < 0) return QuadComplex(1) / pow(-exponent);
  QuadComplex result(1);
  QuadComplex base = *this;
  while (exponent > 0) {
    if ((exponent & 1) != 0) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

QuadComplex& QuadComplex::operator+=(const QuadComplex& rhs) {
  radicand_ = common_radicand(*this, rhs);
  re_ += rhs.re_;
  im_ += rhs.im_;
  canonicalize();
  return *this;
}

QuadComplex& QuadComplex::operator-=(const QuadComplex& rhs) {
  radicand_ = common_radicand(*this, rhs);
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  canonicalize();
  return *this;
}

QuadComplex& QuadComplex::operator*=(const QuadComplex& rhs) {
  const mpz_class d = common_radicand(*this, rhs);
  // (a + b r i)(c + e r i) = (ac - be D) + (ae + bc) r i
  Rational re = re_ * rhs.re_ - im_ * rhs.im_ * Rational(d);
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  radicand_ = d;
  canonicalize();
  return *this;
}

QuadComplex& QuadComplex::operator/=(const QuadComplex& rhs) {
  const Rational n = rhs.norm();
  if (n.is_zero()) throw std::domain_error("division by zero");
  *this *= rhs.conj();
  re_ /= n;
  im_ /= n;
  canonicalize();
  return *this;
}

QuadComplex QuadComplex::operator-() const {
  QuadComplex out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  return out;
}

std::strong_ordering operator<=>(const QuadComplex& a, const QuadComplex& b) {
  if (auto c = a.re_ <=> b.re_; c != 0) return c;
  if (auto c = a.im_ <=> b.im_; c != 0) return c;
  const int c = cmp(a.radicand_, b.radicand_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadComplex::to_string() const {
  if (is_real()) return re_.to_string();
  const Rational mag = im_.abs();
  std::string imag;
  if (mag != Rational(1)) imag = mag.to_string() + "*";
  if (radicand_ != 1) imag += "sqrt(" + radicand_.get_str() + ")*";
  imag += "i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.to_string() + (im_.sign() < 0 ? " - " : " + ") + imag;
}

std::ostream& operator<<(std::ostream& os, const QuadComplex& x) { return os << x.to_string(); }

}  // namespace cscodes

#include "scdt/quad_ext.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace scdt {

Rational make_rational(long num, long den) {
  if (den == 0) throw FieldError("division by zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw FieldError("division by zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_literal(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::pair<std::int64_t, std::int64_t> split_square(std::int64_t d) {
  if (d < 0) throw FieldError("nonreal radicand");
  if (d == 0) return {0, 0};
  std::int64_t outer = 1;
  std::int64_t inner = 1;
  std::int64_t rest = d;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) outer *= p;
    if (e % 2 == 1) inner *= p;
  }
  inner *= rest;
  return {outer, inner};
}

QuadExt QuadExt::normalize(const Rational& p, const Rational& q,
                           std::int64_t d) {
  if (d < 0) throw FieldError("nonreal radicand");
  QuadExt x(p, q, d);
  x.canonicalize();
  return x;
}

QuadExt QuadExt::sqrt_of(const Rational& b) {
  if (sgn(b) < 0) throw FieldError("nonreal radicand");
  // sqrt(u/v) = sqrt(u*v)/v
  Integer prod = b.get_num() * b.get_den();
  if (!prod.fits_slong_p()) throw FieldError("radicand too large");
  return normalize(Rational(0), Rational(1, 1) / Rational(b.get_den()),
                   prod.get_si());
}

void QuadExt::canonicalize() {
  rat_.canonicalize();
  coef_.canonicalize();
  if (sgn(coef_) == 0 || radicand_ == 0) {
    coef_ = 0;
    radicand_ = 0;
    return;
  }
  auto [outer, inner] = split_square(radicand_);
  coef_ *= outer;
  if (inner == 1) {
    rat_ += coef_;
    coef_ = 0;
    radicand_ = 0;
  } else {
    radicand_ = inner;
  }
}

std::int64_t QuadExt::common_radicand(const QuadExt& a, const QuadExt& b) {
  if (a.radicand_ == 0) return b.radicand_;
  if (b.radicand_ == 0 || a.radicand_ == b.radicand_) return a.radicand_;
  throw FieldError("incompatible radicands");
}

QuadExt QuadExt::conj() const { return QuadExt(rat_, -coef_, radicand_); }

Rational QuadExt::norm() const {
  return rat_ * rat_ - coef_ * coef_ * radicand_;
}

int QuadExt::sign() const {
  int sp = sgn(rat_);
  int sq = sgn(coef_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 against q^2 d
  Rational p2 = rat_ * rat_;
  Rational q2d = coef_ * coef_ * radicand_;
  int c = cmp(p2, q2d);
  return c > 0 ? sp : sq;  // p^2 == q^2 d impossible for squarefree d >= 2
}

const Rational& QuadExt::as_rational() const {
  if (!is_rational()) throw FieldError("value is irrational: " + to_literal(*this));
  return rat_;
}

double QuadExt::to_double() const {
  return rat_.get_d() + coef_.get_d() * std::sqrt(static_cast<double>(radicand_));
}

QuadExt QuadExt::operator-() const { return QuadExt(-rat_, -coef_, radicand_); }

QuadExt& QuadExt::operator+=(const QuadExt& b) {
  std::int64_t d = common_radicand(*this, b);
  rat_ += b.rat_;
  coef_ += b.coef_;
  radicand_ = d;
  if (sgn(coef_) == 0) radicand_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& b) {
  std::int64_t d = common_radicand(*this, b);
  rat_ -= b.rat_;
  coef_ -= b.coef_;
  radicand_ = d;
  if (sgn(coef_) == 0) radicand_ = 0;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& b) {
  std::int64_t d = common_radicand(*this, b);
  if (d == 0) {
    rat_ *= b.rat_;
    return *this;
  }
  Rational p = rat_ * b.rat_ + coef_ * b.coef_ * d;
  Rational q = rat_ * b.coef_ + coef_ * b.rat_;
  rat_ = std::move(p);
  coef_ = std::move(q);
  radicand_ = sgn(coef_) == 0 ? 0 : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& b) {
  if (b.is_zero()) throw FieldError("division by zero");
  common_radicand(*this, b);
  if (b.is_rational()) {
    rat_ /= b.rat_;
    coef_ /= b.rat_;
    return *this;
  }
  Rational n = b.norm();
  *this *= b.conj();
  rat_ /= n;
  coef_ /= n;
  return *this;
}

int compare(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rat_, b.rat_);
    return (c > 0) - (c < 0);
  }
  return (a - b).sign();
}

QuadExt pow(const QuadExt& x, unsigned e) {
  QuadExt result(1);
  QuadExt base = x;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::int64_t shared_radicand(const std::vector<QuadExt>& values) {
  std::int64_t d = 0;
  for (const auto& v : values) {
    if (v.radicand() == 0) continue;
    if (d == 0) {
      d = v.radicand();
    } else if (d != v.radicand()) {
      throw FieldError("incompatible radicands");
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// literals

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
    end_offset_ = text.size();
  }

  QuadExt parse_quad() {
    if (chars_.empty()) fail("empty literal");
    Rational p(0);
    Rational q(0);
    std::int64_t d = 0;

    int lead = parse_sign();
    if (at_sqrt()) {
      d = parse_sqrt();
      q = lead;
    } else {
      Rational r = parse_unsigned_rational();
      r *= lead;
      if (peek() == '*') {
        ++pos_;
        if (!at_sqrt()) fail("expected sqrt(");
        d = parse_sqrt();
        q = r;
      } else {
        p = r;
        if (!done()) {
          int s = parse_sign();
          if (s == 0) fail("expected '+' or '-'");
          if (at_sqrt()) {
            d = parse_sqrt();
            q = s;
          } else {
            q = parse_unsigned_rational();
            q *= s;
            if (peek() != '*') fail("expected '*sqrt('");
            ++pos_;
            if (!at_sqrt()) fail("expected sqrt(");
            d = parse_sqrt();
          }
        }
      }
    }
    if (!done()) fail("trailing characters");
    if (d <= 0 && sgn(q) != 0) fail("radicand must be a positive integer");
    return QuadExt::normalize(p, q, d);
  }

  Rational parse_rational_only() {
    if (chars_.empty()) fail("empty literal");
    int s = parse_sign();
    Rational r = parse_unsigned_rational();
    if (!done()) fail("trailing characters");
    return s < 0 ? Rational(-r) : r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t off = pos_ < offsets_.size() ? offsets_[pos_] : end_offset_;
    throw LiteralError(off, msg + " at offset " + std::to_string(off));
  }
  bool done() const { return pos_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }

  // +1 / -1 when a sign is consumed; on the leading position a missing sign
  // is +1. Returns 0 when no sign is present mid-literal.
  int parse_sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    return pos_ == 0 ? 1 : 0;
  }

  Integer parse_digits() {
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    if (digits.empty()) fail("expected digits");
    return Integer(digits);
  }

  Rational parse_unsigned_rational() {
    Integer num = parse_digits();
    Integer den(1);
    if (peek() == '/') {
      ++pos_;
      den = parse_digits();
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  bool at_sqrt() const {
    static constexpr std::string_view kw = "sqrt(";
    if (chars_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (chars_[pos_ + i] != kw[i]) return false;
    }
    return true;
  }

  std::int64_t parse_sqrt() {
    pos_ += 5;
    Integer d = parse_digits();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    if (!d.fits_slong_p()) fail("radicand too large");
    return d.get_si();
  }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  return LiteralParser(text).parse_rational_only();
}

QuadExt parse_quad(std::string_view text) { return LiteralParser(text).parse_quad(); }

std::string to_literal(const QuadExt& x) {
  if (x.is_rational()) return to_literal(x.rational_part());
  std::string rad = "*sqrt(" + std::to_string(x.radicand()) + ")";
  if (sgn(x.rational_part()) == 0) return to_literal(x.coef()) + rad;
  std::string out = to_literal(x.rational_part());
  if (sgn(x.coef()) > 0) {
    out += "+" + to_literal(x.coef());
  } else {
    out += "-" + to_literal(Rational(-x.coef()));
  }
  return out + rad;
}

// ---------------------------------------------------------------------------

BesicovitchResult besicovitch_pairing(const std::vector<BesicovitchTerm>& terms) {
  struct Scaled {
    std::size_t index;  // 1-based
    Rational coefficient;
  };
  std::map<std::int64_t, std::vector<Scaled>> groups;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].radicand <= 0) throw FieldError("nonpositive radicand in Besicovitch term");
    auto [outer, inner] = split_square(terms[i].radicand);
    groups[inner].push_back({i + 1, terms[i].coefficient * outer});
  }

  BesicovitchResult result;
  for (const auto& [radicand, members] : groups) {
    Rational total(0);
    for (const auto& m : members) total += m.coefficient;
    if (sgn(total) != 0) continue;
    result.independent = false;
    std::vector<std::size_t> indices;
    for (const auto& m : members) indices.push_back(m.index);
    result.cancelling_groups.emplace_back(radicand, indices);
    std::vector<bool> used(members.size(), false);
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (used[a]) continue;
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (used[b]) continue;
        if (members[a].coefficient + members[b].coefficient == 0) {
          used[a] = used[b] = true;
          result.pairings.emplace_back(members[a].index, members[b].index);
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace scdt

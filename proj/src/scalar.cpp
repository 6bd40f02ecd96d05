#include "axtk/scalar.hpp"

#include <functional>
#include <ostream>
#include <sstream>

namespace axtk {

namespace {

// True iff q is the square of a rational, i.e. numerator and denominator of
// the canonical form are both perfect squares (denominator positive).
bool is_rational_square(const mpq_class& q) {
  if (q < 0) return false;
  mpq_class c(q);
  c.canonicalize();
  return mpz_perfect_square_p(c.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(c.get_den().get_mpz_t());
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  size_t slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto check_int = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    size_t i = 0;
    if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!check_int(num, true) || !check_int(den, false))
    throw ParseError("malformed rational '" + text + "'");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw ParseError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

QuadField::QuadField(const mpq_class& c1, const mpq_class& c0) : c1_(c1), c0_(c0) {
  c1_.canonicalize();
  c0_.canonicalize();
  const mpq_class disc = c1_ * c1_ - 4 * c0_;
  if (is_rational_square(disc))
    throw ArithmeticError("reducible extension: x^2 + (" + rational_str(c1_) +
                          ")x + (" + rational_str(c0_) + ") has a rational root");
}

FieldPtr make_quad_field(const mpq_class& c1, const mpq_class& c0) {
  return std::make_shared<const QuadField>(c1, c0);
}

Scalar::Scalar(long num, long den) : b_(0) {
  if (den == 0) throw ArithmeticError("zero denominator");
  a_ = mpq_class(num, den);
  a_.canonicalize();
}

Scalar::Scalar(const mpq_class& a, const mpq_class& b, FieldPtr f)
    : a_(a), b_(b), field_(std::move(f)) {
  a_.canonicalize();
  b_.canonicalize();
  if (!field_ && b_ != 0) throw ArithmeticError("extension coefficient without a field");
  normalize();
}

void Scalar::normalize() {
  if (b_ == 0) field_.reset();
}

const mpq_class& Scalar::as_rational() const {
  if (field_) throw ArithmeticError("scalar " + str() + " is not rational");
  return a_;
}

FieldPtr Scalar::merge_fields(const Scalar& x, const Scalar& y) {
  if (!x.field_) return y.field_;
  if (!y.field_) return x.field_;
  if (!x.field_->same(*y.field_))
    throw ArithmeticError("mixed-field arithmetic between incompatible extensions");
  return x.field_;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.field_ = field_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.field_ = merge_fields(*this, o);
  r.a_ = a_ + o.a_;
  r.b_ = b_ + o.b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.field_ = merge_fields(*this, o);
  if (!r.field_) {
    r.a_ = a_ * o.a_;
    return r;
  }
  // (a1 + b1 w)(a2 + b2 w) with w^2 = -c1 w - c0.
  const mpq_class& c1 = r.field_->c1();
  const mpq_class& c0 = r.field_->c0();
  const mpq_class bb = b_ * o.b_;
  r.a_ = a_ * o.a_ - bb * c0;
  r.b_ = a_ * o.b_ + b_ * o.a_ - bb * c1;
  r.normalize();
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (!field_) {
    Scalar r;
    r.a_ = 1 / a_;
    return r;
  }
  // Conjugate of w is -c1 - w; the norm a^2 - a b c1 + b^2 c0 is rational and
  // nonzero by irreducibility.
  const mpq_class& c1 = field_->c1();
  const mpq_class& c0 = field_->c0();
  const mpq_class n = a_ * a_ - a_ * b_ * c1 + b_ * b_ * c0;
  if (n == 0) throw ArithmeticError("zero norm in extension inverse");
  return Scalar((a_ - b_ * c1) / n, -b_ / n, field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  if (!field_ != !o.field_) return false;
  if (field_ && !field_->same(*o.field_)) return false;
  return true;
}

int Scalar::cmp(const Scalar& o) const {
  const int ca = ::cmp(a_, o.a_);
  if (ca != 0) return ca < 0 ? -1 : 1;
  const int cb = ::cmp(b_, o.b_);
  if (cb != 0) return cb < 0 ? -1 : 1;
  return 0;
}

int Scalar::sgn() const {
  if (field_) throw ArithmeticError("sign of a non-rational scalar");
  return ::sgn(a_);
}

std::string Scalar::str() const {
  if (!field_) return rational_str(a_);
  std::string out = rational_str(a_);
  if (b_ > 0)
    out += "+" + rational_str(b_) + "*w";
  else
    out += "-" + rational_str(-b_) + "*w";
  return out;
}

double Scalar::to_double() const { return as_rational().get_d(); }

size_t Scalar::hash() const {
  const std::hash<std::string> h;
  size_t v = h(a_.get_num().get_str()) * 1000003u ^ h(a_.get_den().get_str());
  if (field_) v = v * 1000003u ^ h(b_.get_num().get_str() + "/" + b_.get_den().get_str());
  return v;
}

Scalar Scalar::parse(const std::string& text, const FieldPtr& field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar");

  auto make_ext = [&](const mpq_class& a, const mpq_class& b) {
    if (!field) throw ParseError("extension scalar '" + text + "' in a rational context");
    return Scalar(a, b, field);
  };

  const size_t wpos = s.rfind("*w");
  if (wpos == std::string::npos) {
    if (s.find('w') != std::string::npos)
      throw ParseError("malformed scalar '" + text + "'");
    return Scalar(parse_rational(s));
  }
  if (wpos + 2 != s.size()) throw ParseError("malformed scalar '" + text + "'");
  const std::string head = s.substr(0, wpos);
  // Split the rational part from the w-coefficient at the last sign that
  // directly follows a digit (numbers contain no interior signs).
  size_t split = std::string::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') &&
        std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return make_ext(0, parse_rational(head));
  mpq_class b = parse_rational(head.substr(split + 1));
  if (head[split] == '-') b = -b;
  return make_ext(parse_rational(head.substr(0, split)), b);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar frac(long num, long den) { return Scalar(num, den); }

}  // namespace axtk

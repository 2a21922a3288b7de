#include "lg/coeff.hpp"

namespace lg {

std::string to_string(CoeffKind k) {
  switch (k) {
    case CoeffKind::Integer: return "integer";
    case CoeffKind::Gaussian: return "gaussian";
    case CoeffKind::Rational: return "rational";
  }
  return "?";
}

Coeff Coeff::integer(mpz_class v) {
  Coeff c;
  c.kind_ = CoeffKind::Integer;
  c.re_ = std::move(v);
  return c;
}

Coeff Coeff::gaussian(mpz_class re, mpz_class im) {
  Coeff c;
  c.kind_ = CoeffKind::Gaussian;
  c.re_ = std::move(re);
  c.im_ = std::move(im);
  return c;
}

Coeff Coeff::rational(mpq_class v) {
  Coeff c;
  c.kind_ = CoeffKind::Rational;
  v.canonicalize();
  c.rat_ = std::move(v);
  return c;
}

Coeff Coeff::rational(long num, long den) {
  mpq_class v(num, den);
  v.canonicalize();
  return rational(v);
}

bool Coeff::is_zero() const {
  switch (kind_) {
    case CoeffKind::Integer: return re_ == 0;
    case CoeffKind::Gaussian: return re_ == 0 && im_ == 0;
    case CoeffKind::Rational: return rat_ == 0;
  }
  return false;
}

bool Coeff::is_one() const {
  switch (kind_) {
    case CoeffKind::Integer: return re_ == 1;
    case CoeffKind::Gaussian: return re_ == 1 && im_ == 0;
    case CoeffKind::Rational: return rat_ == 1;
  }
  return false;
}

const mpz_class& Coeff::int_value() const {
  if (kind_ != CoeffKind::Integer) throw std::logic_error("Coeff: not an integer");
  return re_;
}

const mpz_class& Coeff::re() const {
  if (kind_ == CoeffKind::Rational) throw std::logic_error("Coeff: rational has no re/im parts");
  return re_;
}

const mpz_class& Coeff::im() const {
  if (kind_ != CoeffKind::Gaussian) throw std::logic_error("Coeff: not Gaussian");
  return im_;
}

const mpq_class& Coeff::rat_value() const {
  if (kind_ != CoeffKind::Rational) throw std::logic_error("Coeff: not rational");
  return rat_;
}

void Coeff::check_same_kind(const Coeff& o) const {
  if (kind_ != o.kind_)
    throw std::invalid_argument("Coeff: mixing coefficient kinds (" + to_string(kind_) +
                                " vs " + to_string(o.kind_) + ")");
}

Coeff Coeff::operator-() const {
  Coeff c(*this);
  c.re_ = -c.re_;
  c.im_ = -c.im_;
  c.rat_ = -c.rat_;
  return c;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  check_same_kind(o);
  re_ += o.re_;
  im_ += o.im_;
  rat_ += o.rat_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  check_same_kind(o);
  re_ -= o.re_;
  im_ -= o.im_;
  rat_ -= o.rat_;
  return *this;
}

Coeff Coeff::operator+(const Coeff& o) const {
  Coeff c(*this);
  c += o;
  return c;
}

Coeff Coeff::operator-(const Coeff& o) const {
  Coeff c(*this);
  c -= o;
  return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same_kind(o);
  Coeff c;
  c.kind_ = kind_;
  switch (kind_) {
    case CoeffKind::Integer:
      c.re_ = re_ * o.re_;
      break;
    case CoeffKind::Gaussian:
      c.re_ = re_ * o.re_ - im_ * o.im_;
      c.im_ = re_ * o.im_ + im_ * o.re_;
      break;
    case CoeffKind::Rational:
      c.rat_ = rat_ * o.rat_;
      break;
  }
  return c;
}

Coeff Coeff::div_exact(const Coeff& o) const {
  check_same_kind(o);
  if (o.is_zero()) throw std::domain_error("Coeff: division by zero");
  Coeff c;
  c.kind_ = kind_;
  switch (kind_) {
    case CoeffKind::Integer: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), re_.get_mpz_t(), o.re_.get_mpz_t());
      if (r != 0) throw std::domain_error("Coeff: inexact integer division");
      c.re_ = q;
      break;
    }
    case CoeffKind::Gaussian: {
      // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2); exact iff both parts divide.
      mpz_class norm = o.re_ * o.re_ + o.im_ * o.im_;
      mpz_class nre = re_ * o.re_ + im_ * o.im_;
      mpz_class nim = im_ * o.re_ - re_ * o.im_;
      mpz_class qr, rr, qi, ri;
      mpz_tdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), nre.get_mpz_t(), norm.get_mpz_t());
      mpz_tdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), nim.get_mpz_t(), norm.get_mpz_t());
      if (rr != 0 || ri != 0) throw std::domain_error("Coeff: inexact Gaussian division");
      c.re_ = qr;
      c.im_ = qi;
      break;
    }
    case CoeffKind::Rational:
      c.rat_ = rat_ / o.rat_;
      break;
  }
  return c;
}

bool Coeff::operator==(const Coeff& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case CoeffKind::Integer: return re_ == o.re_;
    case CoeffKind::Gaussian: return re_ == o.re_ && im_ == o.im_;
    case CoeffKind::Rational: return rat_ == o.rat_;
  }
  return false;
}

std::string Coeff::str() const {
  switch (kind_) {
    case CoeffKind::Integer: return re_.get_str();
    case CoeffKind::Rational: return rat_.get_str();
    case CoeffKind::Gaussian: {
      if (im_ == 0) return re_.get_str();
      std::string s = "(";
      if (re_ != 0) {
        s += re_.get_str();
        if (im_ > 0) s += "+";
      }
      if (im_ == 1)
        s += "i";
      else if (im_ == -1)
        s += "-i";
      else
        s += im_.get_str() + "i";
      s += ")";
      return s;
    }
  }
  return "?";
}

}  // namespace lg

#include "lg/laurent.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lg {

LaurentPoly::LaurentPoly(int denom_scale, CoeffKind kind)
    : denom_scale_(denom_scale), kind_(kind) {
  if (denom_scale < 1) throw std::invalid_argument("LaurentPoly: denom_scale must be >= 1");
}

LaurentPoly LaurentPoly::monomial(Coeff c, std::int64_t eq_grid, std::int64_t ep_grid,
                                  int denom_scale) {
  LaurentPoly p(denom_scale, c.kind());
  p.add_term({eq_grid, ep_grid}, c);
  return p;
}

LaurentPoly LaurentPoly::term(Coeff c, std::int64_t eq, std::int64_t ep, int denom_scale) {
  return monomial(std::move(c), eq * denom_scale, ep * denom_scale, denom_scale);
}

LaurentPoly LaurentPoly::constant(Coeff c, int denom_scale) {
  return monomial(std::move(c), 0, 0, denom_scale);
}

void LaurentPoly::add_term(ExpPair e, const Coeff& c) {
  if (c.is_zero()) return;
  if (terms_.empty()) kind_ = c.kind();
  if (c.kind() != kind_)
    throw std::invalid_argument("LaurentPoly: mixing coefficient kinds");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int LaurentPoly::common_scale(int a, int b) { return std::lcm(a, b); }

LaurentPoly LaurentPoly::rescaled(int new_scale) const {
  if (new_scale == denom_scale_) return *this;
  if (new_scale % denom_scale_ != 0)
    throw std::invalid_argument("LaurentPoly: incompatible exponent grids");
  const std::int64_t f = new_scale / denom_scale_;
  LaurentPoly r(new_scale, kind_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(ExpPair{e.eq * f, e.ep * f}, c);
  return r;
}

void LaurentPoly::merge_scaled(const LaurentPoly& o, bool negate) {
  for (const auto& [e, c] : o.terms_) add_term(e, negate ? -c : c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  const int d = common_scale(denom_scale_, o.denom_scale_);
  if (d != denom_scale_) *this = rescaled(d);
  if (d != o.denom_scale_) merge_scaled(o.rescaled(d), false);
  else merge_scaled(o, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = -o; return *this; }
  const int d = common_scale(denom_scale_, o.denom_scale_);
  if (d != denom_scale_) *this = rescaled(d);
  if (d != o.denom_scale_) merge_scaled(o.rescaled(d), true);
  else merge_scaled(o, true);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(denom_scale_, kind_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r(*this);
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  const int d = common_scale(denom_scale_, o.denom_scale_);
  const LaurentPoly& a = (d == denom_scale_) ? *this : rescaled(d);
  LaurentPoly bs;
  const LaurentPoly& b = (d == o.denom_scale_) ? o : (bs = o.rescaled(d));
  LaurentPoly r(d, kind_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.eq + eb.eq, ea.ep + eb.ep}, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (kind_ != o.kind_) return false;
  const int d = common_scale(denom_scale_, o.denom_scale_);
  const LaurentPoly& a = (d == denom_scale_) ? *this : rescaled(d);
  LaurentPoly bs;
  const LaurentPoly& b = (d == o.denom_scale_) ? o : (bs = o.rescaled(d));
  return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::involute_q() const {
  LaurentPoly r(denom_scale_, kind_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(ExpPair{-e.eq, -e.ep}, c);
  return r;
}

LaurentPoly LaurentPoly::involute_alpha() const {
  LaurentPoly r(denom_scale_, kind_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(ExpPair{e.eq - e.ep, -e.ep}, c);
  return r;
}

bool LaurentPoly::is_palindromic() const { return *this == involute_q(); }

bool LaurentPoly::has_even_exponents() const {
  const std::int64_t m = 2LL * denom_scale_;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (((e.eq % m) + m) % m != 0) return false;
    if (((e.ep % m) + m) % m != 0) return false;
  }
  return true;
}

namespace {

mpq_class mpq_pow_signed(const mpq_class& base, std::int64_t exp) {
  if (exp == 0) return mpq_class(1);
  if (base == 0) throw std::domain_error("LaurentPoly: zero base in evaluation");
  mpq_class b = base;
  std::uint64_t n;
  if (exp < 0) {
    b = mpq_class(1) / b;
    n = static_cast<std::uint64_t>(-exp);
  } else {
    n = static_cast<std::uint64_t>(exp);
  }
  mpq_class acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace

mpq_class LaurentPoly::eval_rational(const RationalPoint& pt) const {
  if (pt.r == 0 || pt.s == 0)
    throw std::invalid_argument("eval_rational: point components must be nonzero");
  if (kind_ == CoeffKind::Gaussian)
    throw std::invalid_argument("eval_rational: Gaussian coefficients not supported");
  mpq_class acc(0);
  for (const auto& [e, c] : terms_) {
    // q^{eq/D} = r^{2 eq / D}; the grid must make that an integer power.
    const std::int64_t rq = 2 * e.eq, rp = 2 * e.ep;
    if (rq % denom_scale_ != 0 || rp % denom_scale_ != 0)
      throw std::domain_error("eval_rational: exponent not representable at this point");
    mpq_class v = mpq_pow_signed(pt.r, rq / denom_scale_) * mpq_pow_signed(pt.s, rp / denom_scale_);
    if (kind_ == CoeffKind::Integer)
      acc += mpq_class(c.int_value()) * v;
    else
      acc += c.rat_value() * v;
  }
  return acc;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly(denom_scale_, kind_);
  const int d = common_scale(denom_scale_, divisor.denom_scale_);
  LaurentPoly rem = rescaled(d);
  const LaurentPoly dv = divisor.rescaled(d);
  if (rem.kind_ != dv.kind_) throw std::invalid_argument("LaurentPoly: mixing kinds in division");

  bool univar_q = true, univar_p = true;
  for (const auto& [e, c] : dv.terms_) {
    (void)c;
    if (e.ep != 0) univar_q = false;
    if (e.eq != 0) univar_p = false;
  }
  if (!univar_q && !univar_p && dv.term_count() > 1)
    throw std::invalid_argument("LaurentPoly: general bivariate division not supported");

  const auto lead = std::prev(dv.terms_.end());  // max term in canonical order
  LaurentPoly quot(d, kind_);
  while (!rem.is_zero()) {
    const auto rl = std::prev(rem.terms_.end());
    Coeff qc = rl->second.div_exact(lead->second);
    ExpPair qe{rl->first.eq - lead->first.eq, rl->first.ep - lead->first.ep};
    quot.add_term(qe, qc);
    for (const auto& [e, c] : dv.terms_)
      rem.add_term({e.eq + qe.eq, e.ep + qe.ep}, -(c * qc));
  }
  return quot;
}

namespace {

std::string exponent_str(std::int64_t grid, int scale) {
  const std::int64_t g = std::gcd(grid < 0 ? -grid : grid, static_cast<std::int64_t>(scale));
  const std::int64_t num = grid / g, den = scale / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

void append_monomial(std::string& out, const ExpPair& e, int scale, const std::string& vq,
                     const std::string& vp) {
  bool first = true;
  if (e.ep != 0) {
    out += vp;
    if (e.ep != scale) out += "^" + exponent_str(e.ep, scale);
    first = false;
  }
  if (e.eq != 0) {
    if (!first) out += " ";
    out += vq;
    if (e.eq != scale) out += "^" + exponent_str(e.eq, scale);
  }
}

// Leading-sign handling for the plain form: integer and rational coefficients
// have their sign folded into the +/- separators; Gaussian ones print as-is.
bool coeff_is_negative(const Coeff& c) {
  switch (c.kind()) {
    case CoeffKind::Integer: return c.int_value() < 0;
    case CoeffKind::Rational: return c.rat_value() < 0;
    case CoeffKind::Gaussian: return false;
  }
  return false;
}

}  // namespace

std::string LaurentPoly::serialize(PolyFormat format, const std::string& var_q,
                                   const std::string& var_p) const {
  switch (format) {
    case PolyFormat::Plain: {
      if (terms_.empty()) return "0";
      std::string out;
      bool first = true;
      for (const auto& [e, c] : terms_) {
        Coeff cc = c;
        if (first) {
          first = false;
        } else {
          if (coeff_is_negative(c)) {
            out += " - ";
            cc = -c;
          } else {
            out += " + ";
          }
        }
        const bool unit_exp = (e.eq == 0 && e.ep == 0);
        const std::string cs = cc.str();
        if (unit_exp) {
          out += cs;
        } else {
          if (cs == "1") {
          } else if (cs == "-1") {
            out += "-";
          } else {
            out += cs + " ";
          }
          append_monomial(out, e, denom_scale_, var_q, var_p);
        }
      }
      return out;
    }
    case PolyFormat::Json: {
      // Schema: { "denom_scale": int, "terms": [ { "eq", "ep", "re"[, "im"] } ] }.
      // The coefficient kind is encoded in the term shape: "im" present means
      // Gaussian, a "re" string with a slash means rational.
      nlohmann::ordered_json j;
      j["denom_scale"] = denom_scale_;
      j["terms"] = nlohmann::ordered_json::array();
      for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json t;
        t["eq"] = e.eq;
        t["ep"] = e.ep;
        switch (kind_) {
          case CoeffKind::Integer:
            if (c.int_value().fits_slong_p())
              t["re"] = static_cast<std::int64_t>(c.int_value().get_si());
            else
              t["re"] = c.int_value().get_str();
            break;
          case CoeffKind::Gaussian:
            if (c.re().fits_slong_p())
              t["re"] = static_cast<std::int64_t>(c.re().get_si());
            else
              t["re"] = c.re().get_str();
            if (c.im().fits_slong_p())
              t["im"] = static_cast<std::int64_t>(c.im().get_si());
            else
              t["im"] = c.im().get_str();
            break;
          case CoeffKind::Rational:
            t["re"] = c.rat_value().get_num().get_str() + "/" +
                      c.rat_value().get_den().get_str();
            break;
        }
        j["terms"].push_back(std::move(t));
      }
      return j.dump();
    }
    case PolyFormat::Csv: {
      std::string out = "eq,ep,coeff\n";
      for (const auto& [e, c] : terms_) {
        out += exponent_str(e.eq, denom_scale_) + "," + exponent_str(e.ep, denom_scale_) + "," +
               c.str() + "\n";
      }
      return out;
    }
  }
  throw std::logic_error("serialize: unknown format");
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }
};

mpz_class parse_mpz(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start || (c.i == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start]))))
    throw std::invalid_argument("parse: expected integer at position " + std::to_string(start));
  return mpz_class(c.s.substr(start, c.i - start));
}

// Fraction "a" or "a/b".
std::pair<std::int64_t, std::int64_t> parse_fraction(Cursor& c) {
  mpz_class num = parse_mpz(c);
  std::int64_t den = 1;
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    den = parse_mpz(c).get_si();
  }
  return {num.get_si(), den};
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, PolyFormat format,
                               const std::string& var_q, const std::string& var_p) {
  if (format == PolyFormat::Json) {
    const auto j = nlohmann::json::parse(text);
    const int scale = j.at("denom_scale").get<int>();
    // Infer the coefficient kind from the term shape.
    CoeffKind kind = CoeffKind::Integer;
    for (const auto& t : j.at("terms")) {
      if (t.contains("im")) kind = CoeffKind::Gaussian;
      if (t.at("re").is_string() &&
          t.at("re").get<std::string>().find('/') != std::string::npos)
        kind = CoeffKind::Rational;
    }
    LaurentPoly p(scale, kind);
    auto get_mpz = [](const nlohmann::json& v) {
      if (v.is_string()) return mpz_class(v.get<std::string>());
      return mpz_class(v.get<std::int64_t>());
    };
    for (const auto& t : j.at("terms")) {
      ExpPair e{t.at("eq").get<std::int64_t>(), t.at("ep").get<std::int64_t>()};
      Coeff c;
      switch (kind) {
        case CoeffKind::Integer: c = Coeff::integer(get_mpz(t.at("re"))); break;
        case CoeffKind::Gaussian:
          c = Coeff::gaussian(get_mpz(t.at("re")),
                              t.contains("im") ? get_mpz(t.at("im")) : mpz_class(0));
          break;
        case CoeffKind::Rational: {
          mpq_class v(t.at("re").get<std::string>());
          v.canonicalize();
          c = Coeff::rational(v);
          break;
        }
      }
      p.add_term(e, c);
    }
    return p;
  }
  if (format != PolyFormat::Plain)
    throw std::invalid_argument("parse: only plain and json formats are parsable");

  // Plain format.  Scan terms of the shape  [+|-] [coeff] [p^a/b] [q^c/d].
  Cursor c{text};
  struct RawTerm {
    Coeff coeff;
    std::int64_t eq_n = 0, eq_d = 1, ep_n = 0, ep_d = 1;
  };
  std::vector<RawTerm> raw;
  bool any_gauss = false, any_rat = false;
  while (!c.done()) {
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
      neg = (c.peek() == '-');
      ++c.i;
      c.skip_ws();
    }
    RawTerm t;
    bool have_coeff = false;
    mpz_class ire(1);
    if (c.i < c.s.size() && c.s[c.i] == '(') {
      // Gaussian coefficient "(a+bi)" / "(bi)" / "(-i)".
      ++c.i;
      mpz_class re(0), im(0);
      c.skip_ws();
      bool closed = false;
      while (!closed) {
        c.skip_ws();
        bool tneg = false;
        if (c.peek() == '+' || c.peek() == '-') {
          tneg = c.peek() == '-';
          ++c.i;
          c.skip_ws();
        }
        mpz_class v(1);
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) v = parse_mpz(c);
        if (c.i < c.s.size() && c.s[c.i] == 'i') {
          ++c.i;
          im += tneg ? -v : v;
        } else {
          re += tneg ? -v : v;
        }
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == ')') {
          ++c.i;
          closed = true;
        }
      }
      t.coeff = Coeff::gaussian(re, im);
      any_gauss = true;
      have_coeff = true;
    } else if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      ire = parse_mpz(c);
      if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        mpz_class den = parse_mpz(c);
        mpq_class v(ire);
        v /= mpq_class(den);
        t.coeff = Coeff::rational(v);
        any_rat = true;
      } else {
        t.coeff = Coeff::integer(ire);
      }
      have_coeff = true;
    }
    c.skip_ws();
    // Variables, in either order.
    auto try_var = [&](const std::string& name, std::int64_t& en, std::int64_t& ed) {
      c.skip_ws();
      if (c.s.compare(c.i, name.size(), name) != 0) return false;
      const std::size_t after = c.i + name.size();
      if (after < c.s.size() && (std::isalnum(static_cast<unsigned char>(c.s[after])) ||
                                 c.s[after] == '_'))
        return false;
      c.i = after;
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        auto [n, d] = parse_fraction(c);
        en = n;
        ed = d;
      } else {
        en = 1;
        ed = 1;
      }
      return true;
    };
    bool saw_var = true;
    bool any_var = false;
    while (saw_var) {
      saw_var = false;
      if (t.ep_n == 0 && try_var(var_p, t.ep_n, t.ep_d)) saw_var = any_var = true;
      if (t.eq_n == 0 && try_var(var_q, t.eq_n, t.eq_d)) saw_var = any_var = true;
    }
    if (!have_coeff) {
      if (!any_var) throw std::invalid_argument("parse: empty term");
      t.coeff = Coeff::integer(1);
    }
    if (neg) t.coeff = -t.coeff;
    if (!have_coeff || !t.coeff.is_zero() || any_var) raw.push_back(std::move(t));
  }

  std::int64_t scale = 1;
  for (const auto& t : raw) scale = std::lcm(scale, std::lcm(t.eq_d, t.ep_d));
  CoeffKind kind = any_gauss ? CoeffKind::Gaussian
                             : (any_rat ? CoeffKind::Rational : CoeffKind::Integer);
  LaurentPoly p(static_cast<int>(scale), kind);
  for (auto& t : raw) {
    Coeff cc = t.coeff;
    if (kind == CoeffKind::Gaussian && cc.kind() == CoeffKind::Integer)
      cc = Coeff::gaussian(cc.int_value(), 0);
    if (kind == CoeffKind::Rational && cc.kind() == CoeffKind::Integer)
      cc = Coeff::rational(mpq_class(cc.int_value()));
    if (cc.is_zero()) continue;
    p.add_term({t.eq_n * (scale / t.eq_d), t.ep_n * (scale / t.ep_d)}, cc);
  }
  return p;
}

}  // namespace lg

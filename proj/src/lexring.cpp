#include "babel/lexring.hpp"

#include <algorithm>
#include <sstream>

namespace babel {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotARoot: return "NotARoot";
    case Errc::DatumMismatch: return "DatumMismatch";
    case Errc::NotInApartment: return "NotInApartment";
    case Errc::DegenerateBasis: return "DegenerateBasis";
    case Errc::EmptyOmega: return "EmptyOmega";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::Disjoint: return "Disjoint";
    case Errc::NotASector: return "NotASector";
    case Errc::MixedLevels: return "MixedLevels";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::ZeroDivision: return "ZeroDivision";
    case Errc::ZeroToPrecision: return "ZeroToPrecision";
    case Errc::NotInScrOF: return "NotInScrOF";
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::InvalidConfiguration: return "InvalidConfiguration";
    case Errc::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

const char* order_name(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Greater: return "greater";
  }
  return "?";
}

// ---- Monomial ----

Monomial::Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) { trim(); }

void Monomial::trim() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

Monomial Monomial::var(int j, uint32_t e) {
  if (j <= 1 || e == 0) return Monomial();
  std::vector<uint32_t> v(static_cast<size_t>(j - 1), 0);
  v.back() = e;
  return Monomial(std::move(v));
}

uint32_t Monomial::exp(int j) const {
  size_t k = static_cast<size_t>(j - 2);
  return (j >= 2 && k < e_.size()) ? e_[k] : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<uint32_t> r(std::max(e_.size(), o.e_.size()), 0);
  for (size_t k = 0; k < e_.size(); ++k) r[k] += e_[k];
  for (size_t k = 0; k < o.e_.size(); ++k) r[k] += o.e_[k];
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() > o.e_.size()) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > o.e_[k]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  std::vector<uint32_t> r = e_;
  for (size_t k = 0; k < o.e_.size(); ++k) r[k] -= o.e_[k];
  return Monomial(std::move(r));
}

bool Monomial::all_even() const {
  return std::all_of(e_.begin(), e_.end(), [](uint32_t x) { return x % 2 == 0; });
}

Monomial Monomial::half() const {
  std::vector<uint32_t> r = e_;
  for (auto& x : r) x /= 2;
  return Monomial(std::move(r));
}

int compare(const Monomial& a, const Monomial& b) {
  size_t k = std::max(a.e_.size(), b.e_.size());
  while (k-- > 0) {
    uint32_t x = k < a.e_.size() ? a.e_[k] : 0;
    uint32_t y = k < b.e_.size() ? b.e_[k] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// ---- LexPoly ----

LexPoly::LexPoly(const Q& c) {
  if (c != 0) t_.push_back({Monomial(), c});
}

LexPoly LexPoly::omega(int j) { return term(Monomial::var(j), 1); }

LexPoly LexPoly::term(const Monomial& m, const Q& c) {
  LexPoly p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

LexPoly LexPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  LexPoly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().mono == t.mono) {
      p.t_.back().coeff += t.coeff;
    } else {
      if (!p.t_.empty() && p.t_.back().coeff == 0) p.t_.pop_back();
      p.t_.push_back(std::move(t));
    }
  }
  if (!p.t_.empty() && p.t_.back().coeff == 0) p.t_.pop_back();
  return p;
}

int LexPoly::sign() const { return t_.empty() ? 0 : sgn(t_.front().coeff); }

Q LexPoly::coeff(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.mono == m) return t.coeff;
  return 0;
}

int LexPoly::level() const {
  int lv = 1;
  for (const auto& t : t_) lv = std::max(lv, t.mono.top_var());
  return lv;
}

int LexPoly::degree() const {
  int d = 0;
  for (const auto& t : t_) {
    int s = 0;
    for (auto e : t.mono.exps()) s += static_cast<int>(e);
    d = std::max(d, s);
  }
  return d;
}

std::optional<LinLex> LexPoly::to_linlex(int n) const {
  if (!is_linear() || level() > n) return std::nullopt;
  LinLex r(n);
  for (const auto& t : t_) r[t.mono.top_var()] = t.coeff;
  return r;
}

LexPoly LexPoly::operator-() const {
  LexPoly r = *this;
  for (auto& t : r.t_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<LexPoly::Term> merge(const std::vector<LexPoly::Term>& a,
                                 const std::vector<LexPoly::Term>& b, int sb) {
  std::vector<LexPoly::Term> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size() ? 1 : compare(a[i].mono, b[j].mono));
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back({b[j].mono, sb > 0 ? b[j].coeff : Q(-b[j].coeff)});
      ++j;
    } else {
      Q s = sb > 0 ? Q(a[i].coeff + b[j].coeff) : Q(a[i].coeff - b[j].coeff);
      if (s != 0) r.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

LexPoly& LexPoly::operator+=(const LexPoly& o) {
  t_ = merge(t_, o.t_, 1);
  return *this;
}

LexPoly& LexPoly::operator-=(const LexPoly& o) {
  t_ = merge(t_, o.t_, -1);
  return *this;
}

LexPoly operator*(const LexPoly& a, const LexPoly& b) {
  std::vector<LexPoly::Term> prods;
  prods.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) prods.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return LexPoly::from_terms(std::move(prods));
}

LexPoly& LexPoly::operator*=(const LexPoly& o) {
  *this = *this * o;
  return *this;
}

LexPoly& LexPoly::operator*=(const Q& s) {
  if (s == 0) {
    t_.clear();
  } else {
    for (auto& t : t_) t.coeff *= s;
  }
  return *this;
}

bool operator==(const LexPoly& a, const LexPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t k = 0; k < a.t_.size(); ++k)
    if (!(a.t_[k].mono == b.t_[k].mono) || a.t_[k].coeff != b.t_[k].coeff) return false;
  return true;
}

bool operator<(const LexPoly& a, const LexPoly& b) { return (a - b).sign() < 0; }

Order lex_cmp(const LexPoly& p, const LexPoly& q) { return order_of((p - q).sign()); }

std::string q_to_string(const Q& q) { return q.get_str(); }

Q q_from_string(const std::string& s) {
  Q r;
  std::string t = s;
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (fp.empty() || fp.find_first_not_of("0123456789") != std::string::npos ||
        ip.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::InvalidInput, "bad rational '" + s + "'");
    mpz_class num(ip + fp), den = 1;
    for (size_t k = 0; k < fp.size(); ++k) den *= 10;
    r = Q(num, den);
    r.canonicalize();
    return neg ? Q(-r) : r;
  }
  if (t.empty() || r.set_str(t, 10) != 0)
    throw Error(Errc::InvalidInput, "bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string LexPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    Q c = t.coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0 && !t.mono.is_one()) {
      os << "-";
      c = -c;
    }
    first = false;
    bool unit = t.mono.is_one();
    if (unit || c != 1) os << q_to_string(c);
    bool star = !unit && c != 1;
    const auto& e = t.mono.exps();
    for (size_t k = e.size(); k-- > 0;) {
      if (e[k] == 0) continue;
      if (star) os << "*";
      os << "w" << (k + 2);
      if (e[k] > 1) os << "^" << e[k];
      star = true;
    }
  }
  return os.str();
}

// ---- LinLex ----

LinLex LinLex::real(int n, const Q& r) {
  LinLex x(n);
  x[1] = r;
  return x;
}

LinLex LinLex::unit(int n, int j, const Q& r) {
  LinLex x(n);
  x[j] = r;
  return x;
}

bool LinLex::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Q& x) { return x == 0; });
}

bool is_integer(const Q& x) { return x.get_den() == 1; }

Q floor_q(const Q& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Q(f);
}

Q ceil_q(const Q& x) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Q(f);
}

bool LinLex::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), is_integer);
}

bool LinLex::integral_above(int level) const {
  for (int j = level + 1; j <= n(); ++j)
    if (!is_integer((*this)[j])) return false;
  return true;
}

bool LinLex::zero_above(int level) const {
  for (int j = level + 1; j <= n(); ++j)
    if ((*this)[j] != 0) return false;
  return true;
}

int LinLex::level() const {
  for (int j = n(); j >= 2; --j)
    if ((*this)[j] != 0) return j;
  return 1;
}

int LinLex::sign() const {
  for (int j = n(); j >= 1; --j)
    if ((*this)[j] != 0) return sgn((*this)[j]);
  return 0;
}

LinLex LinLex::floor() const {
  LinLex r = *this;
  if (n() > 0) r[1] = floor_q(r[1]);
  return r;
}

LinLex LinLex::truncated_above(int level) const {
  LinLex r = *this;
  for (int j = level + 1; j <= n(); ++j) r[j] = 0;
  return r;
}

LinLex LinLex::resized(int m) const {
  LinLex r(m);
  for (int j = 1; j <= std::min(m, n()); ++j) r[j] = (*this)[j];
  return r;
}

LexPoly LinLex::to_poly() const {
  std::vector<LexPoly::Term> t;
  for (int j = 1; j <= n(); ++j)
    if ((*this)[j] != 0) t.push_back({Monomial::var(j), (*this)[j]});
  return LexPoly::from_terms(std::move(t));
}

LinLex LinLex::operator-() const {
  LinLex r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LinLex& LinLex::operator+=(const LinLex& o) {
  if (o.n() > n()) c_.resize(o.c_.size());
  for (int j = 1; j <= o.n(); ++j) (*this)[j] += o[j];
  return *this;
}

LinLex& LinLex::operator-=(const LinLex& o) {
  if (o.n() > n()) c_.resize(o.c_.size());
  for (int j = 1; j <= o.n(); ++j) (*this)[j] -= o[j];
  return *this;
}

LinLex& LinLex::operator*=(const Q& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

int compare(const LinLex& a, const LinLex& b) {
  int m = std::max(a.n(), b.n());
  for (int j = m; j >= 1; --j) {
    Q x = j <= a.n() ? a[j] : Q(0);
    Q y = j <= b.n() ? b[j] : Q(0);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

std::string LinLex::to_string() const { return to_poly().to_string(); }

// ---- square roots ----

SqrtExpr::SqrtExpr(LexPoly r) : radicand(std::move(r)) {
  if (radicand.sign() < 0) throw Error(Errc::NegativeRadicand, radicand.to_string());
}

SqrtExpr SqrtExpr::of_square(const LexPoly& p) { return SqrtExpr(p * p); }

std::optional<LexPoly> SqrtExpr::exact() const { return exact_sqrt(radicand); }

std::string SqrtExpr::to_string() const {
  auto e = exact();
  if (e) return e->to_string();
  return "sqrt(" + radicand.to_string() + ")";
}

namespace {

std::optional<Q> rational_sqrt(const Q& x) {
  if (x < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Q(n, d);
}

}  // namespace

std::optional<LexPoly> exact_sqrt(const LexPoly& p) {
  if (p.is_zero()) return LexPoly();
  if (p.sign() < 0) return std::nullopt;
  const auto& lead = p.leading();
  if (!lead.mono.all_even()) return std::nullopt;
  auto c = rational_sqrt(lead.coeff);
  if (!c) return std::nullopt;
  // Leading-term square root iteration. Each new term has a strictly smaller
  // monomial and monomials form a well-order, so this terminates.
  const Monomial lm = lead.mono.half();
  const Q lc = *c;
  LexPoly root = LexPoly::term(lm, lc);
  LexPoly rem = p - root * root;
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    if (!lm.divides(r.mono)) return std::nullopt;
    Monomial m = r.mono / lm;
    if (compare(m, lm) >= 0) return std::nullopt;
    LexPoly t = LexPoly::term(m, r.coeff / (2 * lc));
    rem -= (root * LexPoly(2) + t) * t;
    root += t;
  }
  return root;
}

Order sqrt_cmp(const SqrtExpr& a, const SqrtExpr& b) { return lex_cmp(a.radicand, b.radicand); }

Order sqrt_sum_cmp(const SqrtExpr& a, const SqrtExpr& b, const SqrtExpr& c) {
  // sqrt(a)+sqrt(b) vs sqrt(c): square both sides, compare 2 sqrt(ab) with d = c-a-b.
  LexPoly d = c.radicand - a.radicand - b.radicand;
  if (d.sign() < 0) return Order::Greater;
  LexPoly lhs = LexPoly(4) * a.radicand * b.radicand;
  return lex_cmp(lhs, d * d);
}

}  // namespace babel

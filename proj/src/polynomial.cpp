#include "samuel/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace samuel {

// ---------------------------------------------------------------- PolyRing

RingPtr PolyRing::make(FieldSpec field, std::vector<std::string> vars) {
  if (field.is_prime_field() && !is_prime_number(field.characteristic))
    throw Error(ErrorCode::Parse,
                std::to_string(field.characteristic) + " is not a prime");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string& v = vars[i];
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw Error(ErrorCode::Parse, "invalid variable name '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error(ErrorCode::Parse, "invalid variable name '" + v + "'");
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw Error(ErrorCode::Parse, "duplicate variable '" + v + "'");
  }
  return RingPtr(new PolyRing(field, std::move(vars)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i)
    throw Error(ErrorCode::BadArgument,
                "unknown variable '" + std::string(name) + "'");
  return *i;
}

RingPtr PolyRing::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> vars = vars_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make(field_, std::move(vars));
}

std::string PolyRing::fresh_var(std::string_view stem) const {
  std::string name(stem);
  int suffix = 0;
  while (index_of(name)) name = std::string(stem) + std::to_string(++suffix);
  return name;
}

// ---------------------------------------------------------------- Monomial

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

unsigned Monomial::degree_over(const std::vector<std::size_t>& vars) const {
  unsigned d = 0;
  for (auto v : vars) d += exp.at(v);
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = exp[i] + o.exp[i];
  return r;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (o.exp[i] > exp[i])
      throw Error(ErrorCode::Internal, "monomial division not exact");
    r.exp[i] = exp[i] - o.exp[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exp.size());
  for (std::size_t i = 0; i < a.exp.size(); ++i)
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] != 0 && o.exp[i] != 0) return false;
  return true;
}

// ------------------------------------------------------------ MonomialOrder

MonomialOrder MonomialOrder::block(std::vector<std::size_t> front,
                                   std::size_t nvars) {
  MonomialOrder o(Kind::Block);
  o.front_ = std::move(front);
  std::sort(o.front_.begin(), o.front_.end());
  for (std::size_t i = 0; i < nvars; ++i)
    if (!std::binary_search(o.front_.begin(), o.front_.end(), i))
      o.back_.push_back(i);
  return o;
}

namespace {

// a < b in grevlex restricted to the index list vs (declared order).
bool grevlex_less_on(const Monomial& a, const Monomial& b,
                     const std::vector<std::size_t>& vs) {
  long da = 0, db = 0;
  for (auto v : vs) {
    da += a.exp[v];
    db += b.exp[v];
  }
  if (da != db) return da < db;
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    long diff = static_cast<long>(a.exp[*it]) - static_cast<long>(b.exp[*it]);
    if (diff != 0) return diff > 0;
  }
  return false;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.exp.size(); ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
      }
      return false;
    case Kind::Grevlex:
      return grevlex_less_on(a, b, all_indices(a.exp.size()));
    case Kind::Block:
      if (grevlex_less_on(a, b, front_)) return true;
      if (grevlex_less_on(b, a, front_)) return false;
      return grevlex_less_on(a, b, back_);
  }
  return false;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block";
  }
  return "?";
}

// --------------------------------------------------------------- Polynomial

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  if (!(c.field() == ring->field()))
    throw Error(ErrorCode::BadArgument, "scalar field does not match the ring");
  Polynomial p = zero(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long n) {
  Scalar c(ring->field(), n);
  return constant(ring, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
  if (var >= ring->nvars())
    throw Error(ErrorCode::BadArgument, "variable index out of range");
  Monomial m(ring->nvars());
  m.exp[var] = 1;
  return from_term(ring, m, Scalar::one(ring->field()));
}

Polynomial Polynomial::from_term(RingPtr ring, Monomial m, Scalar c) {
  Polynomial p = zero(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p = zero(std::move(ring));
  p.terms_ = std::move(terms);
  p.sort_and_combine_();
  return p;
}

void Polynomial::sort_and_combine_() {
  MonomialOrder ord = MonomialOrder::grevlex();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.less(b.mono, a.mono);  // descending
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = out.back().coeff + t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

void Polynomial::require_same_ring_(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
    throw Error(ErrorCode::BadArgument,
                "polynomials live in different ambient rings");
}

long Polynomial::total_degree() const {
  long d = -1;
  for (auto& t : terms_) d = std::max(d, (long)t.mono.total_degree());
  return d;
}

long Polynomial::degree_in(std::size_t var) const {
  long d = is_zero() ? -1 : 0;
  for (auto& t : terms_) d = std::max(d, (long)t.mono.exp.at(var));
  return d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Scalar::zero(ring_->field());
}

Scalar Polynomial::constant_term() const {
  return coeff(Monomial(ring_->nvars()));
}

Polynomial Polynomial::coeff_of_power(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (auto& t : terms_)
    if (t.mono.exp.at(var) == k) {
      Term u = t;
      u.mono.exp[var] = 0;
      out.push_back(std::move(u));
    }
  return from_terms(ring_, std::move(out));
}

std::vector<std::size_t> Polynomial::support_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ring_->nvars(); ++v)
    if (involves(v)) out.push_back(v);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring_(o);
  std::vector<Term> ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring_(o);
  std::vector<Term> ts;
  ts.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_)
      ts.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = t.coeff * c;
  return p;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial acc = constant(ring_, 1);
  Polynomial b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return ring_ == o.ring_;
  if (!ring_->same(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& images,
                                  RingPtr target) const {
  if (!target) {
    for (auto& [v, img] : images) {
      (void)v;
      target = img.ring();
      break;
    }
    if (!target) target = ring_;
  }
  if (!(target->field() == ring_->field()))
    throw Error(ErrorCode::BadArgument,
                "substitution target has a different coefficient field");
  // Resolve every source variable to an image polynomial in the target ring.
  std::vector<Polynomial> image(ring_->nvars());
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    auto it = images.find(v);
    if (it != images.end()) {
      if (!it->second.ring()->same(*target))
        throw Error(ErrorCode::BadArgument,
                    "substitution images live in different rings");
      image[v] = it->second;
    } else {
      image[v] = Polynomial::variable(target, target->require_index(ring_->var_name(v)));
    }
  }
  // Cache powers per variable as we go.
  std::vector<std::vector<Polynomial>> powers(ring_->nvars());
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * image[v]);
    return cache[e];
  };
  Polynomial out = Polynomial::zero(target);
  for (auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, Scalar(target->field(), t.coeff.value()));
    for (std::size_t v = 0; v < ring_->nvars(); ++v)
      if (t.mono.exp[v] > 0) prod = prod * power_of(v, t.mono.exp[v]);
    out = out + prod;
  }
  return out;
}

Polynomial Polynomial::lift_to(RingPtr bigger) const {
  Polynomial out = zero(bigger);
  std::vector<std::size_t> where(ring_->nvars());
  for (std::size_t v = 0; v < ring_->nvars(); ++v)
    where[v] = bigger->require_index(ring_->var_name(v));
  std::vector<Term> ts;
  for (auto& t : terms_) {
    Monomial m(bigger->nvars());
    for (std::size_t v = 0; v < ring_->nvars(); ++v)
      m.exp[where[v]] = t.mono.exp[v];
    ts.push_back({std::move(m), Scalar(bigger->field(), t.coeff.value())});
  }
  return from_terms(bigger, std::move(ts));
}

Polynomial Polynomial::restrict_to(RingPtr smaller) const {
  std::vector<long> where(ring_->nvars(), -1);
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    auto i = smaller->index_of(ring_->var_name(v));
    if (i) where[v] = (long)*i;
  }
  std::vector<Term> ts;
  for (auto& t : terms_) {
    Monomial m(smaller->nvars());
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (where[v] < 0)
        throw Error(ErrorCode::BadArgument,
                    "polynomial involves '" + ring_->var_name(v) +
                        "', absent from the target ring");
      m.exp[where[v]] = t.mono.exp[v];
    }
    ts.push_back({std::move(m), Scalar(smaller->field(), t.coeff.value())});
  }
  return from_terms(smaller, std::move(ts));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> ts;
  for (auto& t : terms_) {
    unsigned e = t.mono.exp.at(var);
    if (e == 0) continue;
    Term u = t;
    u.mono.exp[var] = e - 1;
    u.coeff = t.coeff * Scalar(ring_->field(), (long)e);
    if (!u.coeff.is_zero()) ts.push_back(std::move(u));
  }
  return from_terms(ring_, std::move(ts));
}

OrderValue Polynomial::order_at_monomial_prime(
    const std::vector<std::size_t>& qvars) const {
  if (is_zero()) return OrderValue::infinity();
  unsigned best = 0;
  bool first = true;
  for (auto& t : terms_) {
    unsigned d = t.mono.degree_over(qvars);
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return OrderValue::integer((long)best);
}

Polynomial Polynomial::initial_form_at(
    const std::vector<std::size_t>& qvars) const {
  if (is_zero()) return *this;
  OrderValue o = order_at_monomial_prime(qvars);
  return graded_part(qvars, (unsigned)o.to_long());
}

Polynomial Polynomial::graded_part(const std::vector<std::size_t>& qvars,
                                   unsigned d) const {
  std::vector<Term> ts;
  for (auto& t : terms_)
    if (t.mono.degree_over(qvars) == d) ts.push_back(t);
  return from_terms(ring_, std::move(ts));
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (is_zero())
    throw Error(ErrorCode::Internal, "leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (auto& t : terms_)
    if (ord.less(best->mono, t.mono)) best = &t;
  return *best;
}

Polynomial Polynomial::make_monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(leading_term(ord).coeff.inverse());
}

Polynomial Polynomial::normalized_primitive() const {
  if (is_zero()) return *this;
  if (ring_->field().is_prime_field())
    return make_monic(MonomialOrder::grevlex());
  mpz_class den(1), num(0);
  for (auto& t : terms_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
            t.coeff.value().get_den().get_mpz_t());
  for (auto& t : terms_) {
    mpz_class n = t.coeff.value().get_num() *
                  mpz_class(den / t.coeff.value().get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class factor(den, num);
  factor.canonicalize();
  if (leading_term(MonomialOrder::grevlex()).coeff.value() < 0) factor = -factor;
  return scaled(Scalar(ring_->field(), factor));
}

// ------------------------------------------------------------------ parsing

namespace {

struct Token {
  enum class Kind { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

struct Lexer {
  std::string_view s;
  std::size_t i = 0;

  Token next() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) return {Token::Kind::End, "", i};
    std::size_t start = i;
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return {Token::Kind::Int, std::string(s.substr(start, i - start)), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      return {Token::Kind::Ident, std::string(s.substr(start, i - start)), start};
    }
    ++i;
    switch (c) {
      case '+': return {Token::Kind::Plus, "+", start};
      case '-': return {Token::Kind::Minus, "-", start};
      case '*': return {Token::Kind::Star, "*", start};
      case '^': return {Token::Kind::Caret, "^", start};
      case '(': return {Token::Kind::LParen, "(", start};
      case ')': return {Token::Kind::RParen, ")", start};
      default:
        throw Error(ErrorCode::Parse, std::string("unexpected character '") +
                                          c + "' at position " +
                                          std::to_string(start));
    }
  }
};

struct Parser {
  RingPtr ring;
  Lexer lex;
  Token tok;

  explicit Parser(RingPtr r, std::string_view text) : ring(std::move(r)), lex{text} {
    advance();
  }
  void advance() { tok = lex.next(); }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::Parse, what + " at position " + std::to_string(tok.pos));
  }

  Polynomial parse_expr() {
    bool neg = false;
    if (tok.kind == Token::Kind::Minus) {
      neg = true;
      advance();
    } else if (tok.kind == Token::Kind::Plus) {
      advance();
    }
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    while (tok.kind == Token::Kind::Plus || tok.kind == Token::Kind::Minus) {
      bool minus = tok.kind == Token::Kind::Minus;
      advance();
      Polynomial t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (tok.kind == Token::Kind::Star) {
      advance();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (tok.kind == Token::Kind::Caret) {
      advance();
      if (tok.kind != Token::Kind::Int) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(tok.text);
      advance();
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_atom() {
    switch (tok.kind) {
      case Token::Kind::Int: {
        Scalar c(ring->field(), mpz_class(tok.text));
        advance();
        return Polynomial::constant(ring, c);
      }
      case Token::Kind::Ident: {
        auto idx = ring->index_of(tok.text);
        if (!idx) fail("unknown variable '" + tok.text + "'");
        advance();
        return Polynomial::variable(ring, *idx);
      }
      case Token::Kind::LParen: {
        advance();
        Polynomial p = parse_expr();
        if (tok.kind != Token::Kind::RParen) fail("expected ')'");
        advance();
        return p;
      }
      case Token::Kind::Minus: {
        advance();
        return -parse_atom();
      }
      default:
        fail("expected a term");
    }
  }
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  Parser p(ring, text);
  Polynomial out = p.parse_expr();
  if (p.tok.kind != Token::Kind::End) p.fail("trailing input");
  return out;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    mpq_class c = t.coeff.value();
    bool negative = c < 0 && !ring_->field().is_prime_field();
    mpq_class abs = negative ? mpq_class(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string coeff_txt;
    if (abs.get_den() == 1)
      coeff_txt = abs.get_num().get_str();
    else
      coeff_txt = abs.get_num().get_str() + "/" + abs.get_den().get_str();
    bool wrote_coeff = false;
    if (t.mono.is_one() || coeff_txt != "1") {
      os << coeff_txt;
      wrote_coeff = true;
    }
    bool first_var = !wrote_coeff;
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->var_name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

// -------------------------------------------------------- division, resultant

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::BadArgument, "division by zero polynomial");
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial r = f;
  Polynomial q = Polynomial::zero(f.ring());
  const Term& lg = g.leading_term(ord);
  while (!r.is_zero()) {
    const Term& lr = r.leading_term(ord);
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    Polynomial t = Polynomial::from_term(f.ring(), lr.mono.divided_by(lg.mono),
                                         lr.coeff / lg.coeff);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

Polynomial matrix_determinant(std::vector<std::vector<Polynomial>> m,
                              RingPtr ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  int sign = 1;
  Polynomial prev = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Polynomial::zero(ring);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto exact = try_divide(num, prev);
        if (!exact)
          throw Error(ErrorCode::Internal, "fraction-free elimination failed");
        m[i][j] = std::move(*exact);
      }
      m[i][k] = Polynomial::zero(ring);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Polynomial resultant_in_var(const Polynomial& f, const Polynomial& g,
                            std::size_t var) {
  if (!f.ring() || !g.ring() || !f.ring()->same(*g.ring()))
    throw Error(ErrorCode::BadArgument, "resultant inputs in different rings");
  RingPtr ring = f.ring();
  long m = f.degree_in(var), n = g.degree_in(var);
  if (m <= 0 && n <= 0)
    throw Error(ErrorCode::BadArgument,
                "'" + ring->var_name(var) + "' appears in neither input");
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(ring);
  if (m <= 0) return f.pow((unsigned long)n);
  if (n <= 0) return g.pow((unsigned long)m);

  std::size_t size = (std::size_t)(m + n);
  std::vector<std::vector<Polynomial>> s(
      size, std::vector<Polynomial>(size, Polynomial::zero(ring)));
  for (long row = 0; row < n; ++row)
    for (long k = 0; k <= m; ++k)
      s[(std::size_t)row][(std::size_t)(row + k)] =
          f.coeff_of_power(var, (unsigned)(m - k));
  for (long row = 0; row < m; ++row)
    for (long k = 0; k <= n; ++k)
      s[(std::size_t)(n + row)][(std::size_t)(row + k)] =
          g.coeff_of_power(var, (unsigned)(n - k));
  return matrix_determinant(std::move(s), ring);
}

}  // namespace samuel

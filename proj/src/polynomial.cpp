#include "gasep/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace gasep {

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::var(VarId v, int exp) {
  Polynomial p;
  p.add_term(Monomial::var(v, exp), Rational(1));
  return p;
}

Polynomial Polynomial::term(Rational c, Monomial m) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // grlex order is degree-major, so the leading term has maximal degree
  return terms_.rbegin()->first.degree();
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, c * x);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
  Polynomial r = constant(Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::partial(VarId v) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.with_exponent(v, e - 1), c * Rational(e));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& sigma) const {
  Polynomial r;
  // per-variable power cache for the duration of the call
  std::map<VarId, std::map<int, Polynomial>> powers;
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(c);
    for (const auto& [v, e] : m.factors()) {
      auto sub = sigma.find(v);
      if (sub == sigma.end()) {
        t = t * Polynomial::var(v, e);
        continue;
      }
      auto& cache = powers[v];
      auto hit = cache.find(e);
      if (hit == cache.end()) hit = cache.emplace(e, sub->second.pow(e)).first;
      t = t * hit->second;
    }
    r = r + t;
  }
  return r;
}

Rational Polynomial::evaluate(const std::function<Rational(VarId)>& value_of) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) t *= value_of(v).pow(static_cast<unsigned>(e));
    total += t;
  }
  return total;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  return vars;
}

std::set<int> Polynomial::summands() const {
  std::set<int> js;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (v.is_main()) js.insert(v.summand());
  return js;
}

bool Polynomial::has_aux() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors())
      if (v.is_aux()) return true;
  return false;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // leading-first: walk the grlex-ordered map backwards
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool first = s.empty();
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rational a = c.abs();
    if (m.is_unit()) {
      s += a.str();
    } else {
      if (!(a == Rational(1))) s += a.str();
      s += m.str();
    }
  }
  return s;
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
    parse_term(p, sign);
    skip_ws();
    while (pos_ < s_.size()) {
      char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      parse_term(p, op == '-' ? -1 : 1);
      skip_ws();
    }
    return p;
  }

 private:
  void parse_term(Polynomial& p, int sign) {
    skip_ws();
    Rational coeff(sign);
    bool any = false;
    if (std::isdigit(peek())) {
      coeff *= parse_rational();
      any = true;
    }
    Monomial m;
    skip_ws();
    while (peek() == 'x' || peek() == 'y' || peek() == '*') {
      if (peek() == '*') {
        take();
        skip_ws();
        continue;
      }
      m = m * parse_varpow();
      any = true;
      skip_ws();
    }
    if (!any) fail("empty term");
    p.add_term(m, coeff);
  }

  Rational parse_rational() {
    std::string num = parse_digits();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      std::string den = parse_digits();
      return Rational::parse(num + "/" + den);
    }
    return Rational::parse(num);
  }

  Monomial parse_varpow() {
    VarId v = parse_var();
    int e = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      e = parse_int();
    }
    return Monomial::var(v, e);
  }

  VarId parse_var() {
    char c = take();
    if (c == 'y') {
      char idx = take();
      if (idx != '0' && idx != '1') fail("expected y0 or y1");
      return VarId::aux(idx - '0');
    }
    if (c != 'x') fail("expected variable");
    expect('[');
    int i = parse_int();
    skip_ws();
    expect(',');
    int j = parse_int();
    skip_ws();
    expect(']');
    return VarId::main(i, j);
  }

  int parse_int() {
    skip_ws();
    std::string d = parse_digits();
    if (d.size() > 9) fail("index too large");
    return std::stoi(d);
  }

  std::string parse_digits() {
    skip_ws();
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  void expect(char c) {
    skip_ws();
    if (take() != c) fail(std::string("expected '") + c + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_++];
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("Polynomial::parse: " + what + " at position " +
                                std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Polynomial::parse: empty input");
  return TextParser(s).parse();
}

nlohmann::ordered_json Polynomial::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    nlohmann::ordered_json mono = nlohmann::ordered_json::array();
    for (const auto& [v, e] : m.factors()) {
      if (v.is_main()) {
        mono.push_back({"x", v.level(), v.summand(), e});
      } else {
        mono.push_back({"y", v.aux_index(), e});
      }
    }
    terms.push_back({{"coeff", c.str()}, {"monomial", mono}});
  }
  return nlohmann::ordered_json{{"terms", terms}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  Polynomial p;
  for (const auto& t : j.at("terms")) {
    Rational c = Rational::parse(t.at("coeff").get<std::string>());
    Monomial m;
    for (const auto& f : t.at("monomial")) {
      std::string kind = f.at(0).get<std::string>();
      if (kind == "x") {
        m = m * Monomial::var(VarId::main(f.at(1).get<int>(), f.at(2).get<int>()),
                              f.at(3).get<int>());
      } else if (kind == "y") {
        m = m * Monomial::var(VarId::aux(f.at(1).get<int>()), f.at(2).get<int>());
      } else {
        throw std::invalid_argument("Polynomial::from_json: unknown variable kind '" + kind + "'");
      }
    }
    p.add_term(m, c);
  }
  return p;
}

}  // namespace gasep

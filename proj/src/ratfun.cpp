#include "aslab/ratfun.hpp"

#include <cctype>

#include "aslab/errors.hpp"

namespace aslab {

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (!num_.field()) num_ = Poly(den_.field());
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  Elem l = den_.lead();
  if (l != 1) {
    Elem li = num_.F().inv(l);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

int RationalFunction::height() const { return std::max(num_.degree(), den_.degree()); }

std::optional<Elem> RationalFunction::eval(Elem x) const {
  Elem d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.F().div(num_.eval(x), d);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw InvalidArgument("division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::pow(std::int64_t e) const {
  if (e < 0) {
    if (is_zero()) throw InvalidArgument("zero to a negative power");
    return RationalFunction(den_.pow(static_cast<std::uint64_t>(-e)), num_.pow(static_cast<std::uint64_t>(-e)));
  }
  // lowest terms are preserved by powers
  RationalFunction r;
  r.num_ = num_.pow(static_cast<std::uint64_t>(e));
  r.den_ = den_.pow(static_cast<std::uint64_t>(e));
  return r;
}

RationalFunction RationalFunction::translate(Elem a) const { return RationalFunction(num_.translate(a), den_.translate(a)); }

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

class Parser {
 public:
  Parser(const FieldPtr& F, const std::string& s, const std::string& var) : F_(F), s_(s), var_(var) {}

  RationalFunction run() {
    auto r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  const FieldPtr& F_;
  const std::string& s_;
  std::string var_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidArgument("cannot parse '" + s_ + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    r = term();
    if (neg) r = -r;
    while (true) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = factor();
    while (true) {
      if (eat('*')) {
        r = r * factor();
      } else if (eat('/')) {
        r = r / factor();
      } else {
        // implicit multiplication: "3x", "2(x+1)"
        skip();
        if (pos_ < s_.size() && (s_[pos_] == '(' || s_.compare(pos_, var_.size(), var_) == 0 || s_[pos_] == '['))
          r = r * factor();
        else
          return r;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      std::int64_t e = std::stoll(s_.substr(start, pos_ - start));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto r = expr();
      if (!eat(')')) fail("')' expected");
      return r;
    }
    if (c == '[') {
      std::size_t end = s_.find(']', pos_);
      if (end == std::string::npos) fail("']' expected");
      Elem v = F_->parse(s_.substr(pos_, end - pos_ + 1));
      pos_ = end + 1;
      return RationalFunction::constant(F_, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      mpz_class r = v % F_->p();
      return RationalFunction::constant(F_, static_cast<Elem>(r.get_ui()));
    }
    if (s_.compare(pos_, var_.size(), var_) == 0) {
      pos_ += var_.size();
      return RationalFunction(Poly::x(F_));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RationalFunction parse_ratfun(const FieldPtr& F, const std::string& s, const std::string& var) {
  return Parser(F, s, var).run();
}

Poly parse_poly(const FieldPtr& F, const std::string& s, const std::string& var) {
  auto r = parse_ratfun(F, s, var);
  if (!r.is_polynomial()) throw InvalidArgument("expected a polynomial: " + s);
  return r.num();
}

}  // namespace aslab

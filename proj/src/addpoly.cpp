#include "aslab/addpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "aslab/budget.hpp"
#include "aslab/errors.hpp"

namespace aslab {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

struct LinearData {
  std::vector<Elem> kernel, image;
};

// kernel and image of the F_p-linear map sending the basis element p^i to images[i]
LinearData linear_data(const Field& F, const std::vector<Elem>& images) {
  const unsigned n = F.n();
  const std::uint32_t p = F.p();
  std::vector<std::vector<std::uint32_t>> M(n, std::vector<std::uint32_t>(n));
  for (unsigned j = 0; j < n; ++j) {
    auto d = F.digits(images[j]);
    for (unsigned i = 0; i < n; ++i) M[i][j] = d[i];
  }
  auto inv = [&](std::uint32_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  std::vector<int> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < n && row < n; ++col) {
    unsigned sel = row;
    while (sel < n && M[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(M[sel], M[row]);
    std::uint32_t iv = inv(M[row][col]);
    for (auto& v : M[row]) v = static_cast<std::uint32_t>(std::uint64_t(v) * iv % p);
    for (unsigned i = 0; i < n; ++i) {
      if (i == row || M[i][col] == 0) continue;
      std::uint64_t c = M[i][col];
      for (unsigned j = 0; j < n; ++j) M[i][j] = static_cast<std::uint32_t>((M[i][j] + (p - c) * M[row][j]) % p);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  LinearData out;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) {
    is_pivot[static_cast<unsigned>(c)] = true;
    out.image.push_back(images[static_cast<unsigned>(c)]);
  }
  for (unsigned f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[f] = 1;
    for (unsigned r = 0; r < pivots.size(); ++r) v[static_cast<unsigned>(pivots[r])] = (p - M[r][f]) % p;
    out.kernel.push_back(F.from_digits(v));
  }
  return out;
}

std::vector<Elem> basis_images(const AdditivePolynomial& A) {
  const Field& F = *A.field();
  std::vector<Elem> im(F.n());
  Elem e = 1;
  for (unsigned i = 0; i < F.n(); ++i) {
    im[i] = A.eval(e);
    e = e * F.p();
  }
  return im;
}

}  // namespace

AdditivePolynomial::AdditivePolynomial(FieldPtr F, std::vector<Elem> coeffs) : F_(std::move(F)), a_(std::move(coeffs)) {
  while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
  if (a_.empty() || a_.back() != 1) throw InvalidArgument("additive polynomial must be monic");
  if (a_[0] == 0) throw InvalidArgument("additive polynomial must be separable (a_0 != 0)");
  for (auto c : a_)
    if (!F_->contains(c)) throw InvalidArgument("coefficient outside the field");
}

AdditivePolynomial AdditivePolynomial::identity(FieldPtr F) { return AdditivePolynomial(std::move(F), {1}); }

AdditivePolynomial AdditivePolynomial::wp(FieldPtr F, std::uint64_t q) {
  int k = log_p(q, F->p());
  if (k < 1) throw InvalidArgument("q must be a positive power of p");
  std::vector<Elem> a(static_cast<std::size_t>(k) + 1, 0);
  a[0] = F->neg(1);
  a[static_cast<std::size_t>(k)] = 1;
  return AdditivePolynomial(std::move(F), std::move(a));
}

AdditivePolynomial AdditivePolynomial::from_terms(FieldPtr F, const std::vector<std::pair<unsigned, Elem>>& terms) {
  unsigned top = 0;
  for (auto& t : terms) top = std::max(top, t.first);
  std::vector<Elem> a(top + 1, 0);
  for (auto& [e, c] : terms) a[e] = F->add(a[e], c);
  return AdditivePolynomial(std::move(F), std::move(a));
}

std::uint64_t AdditivePolynomial::degree() const { return ipow(F_->p(), nu()); }

Elem AdditivePolynomial::eval(Elem x) const {
  Elem r = 0, xp = x;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i]) r = F_->add(r, F_->mul(a_[i], xp));
    if (i + 1 < a_.size()) xp = F_->pow(xp, F_->p());
  }
  return r;
}

Poly AdditivePolynomial::to_poly() const {
  std::vector<Elem> c(degree() + 1, 0);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    c[e] = a_[i];
    e *= F_->p();
  }
  return Poly(F_, std::move(c));
}

AdditivePolynomial AdditivePolynomial::embedded(const Embedding& e) const {
  if (!e.sub()->same_as(*F_)) throw InvalidArgument("embedding source does not match the coefficient field");
  std::vector<Elem> b(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) b[i] = e.embed(a_[i]);
  return AdditivePolynomial(e.ambient(), std::move(b));
}

bool AdditivePolynomial::operator==(const AdditivePolynomial& o) const { return F_->same_as(*o.F_) && a_ == o.a_; }

std::string AdditivePolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!a_[i]) continue;
    os << (first ? "" : ",") << '(' << i << ',' << F_->format(a_[i]) << ')';
    first = false;
  }
  os << ']';
  return os.str();
}

bool RootGroup::contains(Elem a) const { return std::binary_search(elements.begin(), elements.end(), a); }

std::vector<Elem> span(const Field& F, const std::vector<Elem>& basis) {
  std::vector<Elem> out{0};
  for (Elem b : basis) {
    const std::size_t cur = out.size();
    Elem mult = b;
    for (std::uint32_t c = 1; c < F.p(); ++c) {
      for (std::size_t i = 0; i < cur; ++i) out.push_back(F.add(out[i], mult));
      mult = F.add(mult, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> kernel_basis(const AdditivePolynomial& A) { return linear_data(*A.field(), basis_images(A)).kernel; }
std::vector<Elem> image_basis(const AdditivePolynomial& A) { return linear_data(*A.field(), basis_images(A)).image; }

AdditivePolynomial roots_to_poly(const RootGroup& H) {
  const Field& F = *H.ambient;
  const auto& E = H.elements;
  if (E.empty() || !std::is_sorted(E.begin(), E.end()) || std::adjacent_find(E.begin(), E.end()) != E.end())
    throw InvalidArgument("root group must be a nonempty sorted set");
  if (!H.contains(0)) throw InvalidArgument("root group must contain 0");
  if (log_p(E.size(), F.p()) < 0 && E.size() != 1) throw InvalidArgument("root group order is not a power of p");
  require_budget(static_cast<std::uint64_t>(E.size()) * E.size(), "subgroup closure check");
  for (Elem a : E)
    for (Elem b : E)
      if (!H.contains(F.add(a, b))) throw InvalidArgument("root set is not closed under addition");
  // product tree
  std::vector<Poly> level;
  for (Elem a : E) level.push_back(Poly::linear(H.ambient, a));
  while (level.size() > 1) {
    std::vector<Poly> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  const Poly& P = level.front();
  std::vector<Elem> a;
  std::uint64_t e = 1;
  for (int i = 0; i <= P.degree(); ++i) {
    if (static_cast<std::uint64_t>(i) == e) {
      a.push_back(P[static_cast<std::size_t>(i)]);
      e *= F.p();
    } else if (P[static_cast<std::size_t>(i)] != 0) {
      throw CheckFailed("expanded product is not additive");
    }
  }
  return AdditivePolynomial(H.ambient, std::move(a));
}

RootGroup poly_to_roots(const AdditivePolynomial& A, const FieldPtr& ambient) {
  AdditivePolynomial Am = A.field()->same_as(*ambient) ? A : A.embedded(Embedding(A.field(), ambient));
  auto ker = kernel_basis(Am);
  std::uint64_t found = ipow(ambient->p(), static_cast<unsigned>(ker.size()));
  if (found < A.degree())
    throw InvalidArgument("ambient field " + ambient->descriptor() + " too small: found " + std::to_string(found) +
                          " of " + std::to_string(A.degree()) + " roots");
  return RootGroup{ambient, span(*ambient, ker)};
}

AdditivePolynomial compose(const AdditivePolynomial& A, const AdditivePolynomial& B) {
  if (!A.field()->same_as(*B.field())) throw InvalidArgument("compose: different coefficient fields");
  const Field& F = *A.field();
  const auto& a = A.coeffs();
  const auto& b = B.coeffs();
  std::vector<Elem> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      c[i + j] = F.add(c[i + j], F.mul(a[i], F.frobenius_power(b[j], static_cast<unsigned>(i))));
    }
  }
  return AdditivePolynomial(A.field(), std::move(c));
}

AdditivePolynomial coefficients_in(const AdditivePolynomial& A, const FieldPtr& Fq) {
  const FieldPtr& F = A.field();
  if (F->same_as(*Fq)) return A;
  if (is_subfield(*F, *Fq)) return A.embedded(Embedding(F, Fq));
  if (is_subfield(*Fq, *F)) {
    Embedding e(Fq, F);
    std::vector<Elem> b;
    for (Elem c : A.coeffs()) {
      auto r = e.restrict(c);
      if (!r) throw InvalidArgument("coefficients of A do not lie in " + Fq->descriptor());
      b.push_back(*r);
    }
    return AdditivePolynomial(Fq, std::move(b));
  }
  throw InvalidArgument(F->descriptor() + " and " + Fq->descriptor() + " are not nested");
}

RootGroup image_group(const AdditivePolynomial& A) {
  return RootGroup{A.field(), span(*A.field(), image_basis(A))};
}

AdditivePolynomial complement(const AdditivePolynomial& A, std::uint64_t q) {
  const std::uint32_t p = A.field()->p();
  int e = log_p(q, p);
  if (e < 1) throw InvalidArgument("q must be a positive power of p");
  FieldPtr Fq = make_field(p, static_cast<unsigned>(e));
  AdditivePolynomial Aq = coefficients_in(A, Fq);
  try {
    poly_to_roots(Aq, Fq);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("roots of A are not contained in F_" + std::to_string(q));
  }
  AdditivePolynomial B = roots_to_poly(image_group(Aq));
  auto wq = AdditivePolynomial::wp(Fq, q);
  if (compose(Aq, B) != wq || compose(B, Aq) != wq) throw CheckFailed("complement does not compose to x^q - x");
  return B;
}

std::vector<RootGroup> all_subgroups(const FieldPtr& F) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> frontier{{0}};
  seen.insert({0});
  std::vector<std::vector<Elem>> all{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& S : frontier) {
      for (Elem v = 1; v < F->size(); ++v) {
        if (std::binary_search(S.begin(), S.end(), v)) continue;
        std::vector<Elem> T;
        T.reserve(S.size() * F->p());
        Elem mult = 0;
        for (std::uint32_t c = 0; c < F->p(); ++c) {
          for (Elem s : S) T.push_back(F->add(s, mult));
          mult = F->add(mult, v);
        }
        std::sort(T.begin(), T.end());
        if (seen.insert(T).second) {
          next.push_back(T);
          all.push_back(T);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<RootGroup> out;
  for (auto& s : all) out.push_back(RootGroup{F, std::move(s)});
  return out;
}

AdditivePolynomial parse_addpoly(const FieldPtr& F, const std::string& s) {
  // [(e,coef),(e,coef),...]; coef is an element literal or integer
  std::vector<std::pair<unsigned, Elem>> terms;
  std::size_t i = 0;
  auto fail = [&]() { throw InvalidArgument("bad additive polynomial literal: " + s); };
  auto skip = [&]() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i >= s.size() || s[i] != '[') fail();
  ++i;
  while (true) {
    skip();
    if (i < s.size() && s[i] == ']') break;
    if (i >= s.size() || s[i] != '(') fail();
    ++i;
    std::size_t comma = s.find(',', i);
    if (comma == std::string::npos) fail();
    unsigned e = static_cast<unsigned>(std::stoul(s.substr(i, comma - i)));
    i = comma + 1;
    skip();
    std::size_t end;
    if (i < s.size() && s[i] == '[') {
      end = s.find(']', i);
      if (end == std::string::npos) fail();
      ++end;
    } else {
      end = s.find(')', i);
    }
    if (end == std::string::npos) fail();
    Elem c = F->parse(s.substr(i, end - i));
    i = end;
    skip();
    if (i >= s.size() || s[i] != ')') fail();
    ++i;
    terms.emplace_back(e, c);
    skip();
    if (i < s.size() && s[i] == ',') ++i;
  }
  return AdditivePolynomial::from_terms(F, terms);
}

}  // namespace aslab

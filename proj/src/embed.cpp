#include "aslab/embed.hpp"

#include "aslab/errors.hpp"
#include "aslab/factor.hpp"

namespace aslab {

bool is_subfield(const Field& sub, const Field& amb) { return sub.p() == amb.p() && amb.n() % sub.n() == 0; }

Embedding::Embedding(FieldPtr sub, FieldPtr ambient) : sub_(std::move(sub)), amb_(std::move(ambient)) {
  if (!is_subfield(*sub_, *amb_))
    throw InvalidArgument(sub_->descriptor() + " is not a subfield of " + amb_->descriptor());
  const Field& A = *amb_;
  const Field& S = *sub_;
  const unsigned m = S.n(), n = A.n();
  std::vector<Elem> mod(S.modulus().begin(), S.modulus().end());
  auto r = roots(Poly(amb_, mod));
  if (r.empty()) throw CheckFailed("subfield modulus has no root in the ambient field");
  root_ = r.front();
  basis_.resize(m);
  Elem pw = 1;
  for (unsigned i = 0; i < m; ++i) {
    basis_[i] = pw;
    pw = A.mul(pw, root_);
  }
  // Gaussian elimination on the n x m system (columns = basis images), augmented with identity
  const std::uint32_t p = A.p();
  std::vector<std::vector<std::uint32_t>> M(n, std::vector<std::uint32_t>(m + m, 0));
  for (unsigned j = 0; j < m; ++j) {
    auto d = A.digits(basis_[j]);
    for (unsigned i = 0; i < n; ++i) M[i][j] = d[i];
  }
  // we solve by eliminating columns: keep an explicit transform of the rows
  std::vector<std::vector<std::uint32_t>> T(n, std::vector<std::uint32_t>(n, 0));
  for (unsigned i = 0; i < n; ++i) T[i][i] = 1;
  auto inv = [&](std::uint32_t a) { return static_cast<std::uint32_t>(A.inv(a)); };
  unsigned row = 0;
  pivot_col_.assign(m, -1);
  std::vector<unsigned> pivot_row(m, 0);
  for (unsigned col = 0; col < m && row < n; ++col) {
    unsigned sel = row;
    while (sel < n && M[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(M[sel], M[row]);
    std::swap(T[sel], T[row]);
    std::uint32_t iv = inv(M[row][col]);
    for (auto& v : M[row]) v = static_cast<std::uint32_t>(std::uint64_t(v) * iv % p);
    for (auto& v : T[row]) v = static_cast<std::uint32_t>(std::uint64_t(v) * iv % p);
    for (unsigned i = 0; i < n; ++i) {
      if (i == row || M[i][col] == 0) continue;
      std::uint64_t c = M[i][col];
      for (unsigned j = 0; j < m; ++j) M[i][j] = static_cast<std::uint32_t>((M[i][j] + (p - c) * M[row][j]) % p);
      for (unsigned j = 0; j < n; ++j) T[i][j] = static_cast<std::uint32_t>((T[i][j] + (p - c) * T[row][j]) % p);
    }
    pivot_col_[col] = static_cast<int>(row);
    ++row;
  }
  if (row != m) throw CheckFailed("embedding is not injective");
  // rows_[i] = transform row i; rows beyond m must annihilate any image vector
  rows_ = T;
}

Elem Embedding::embed(Elem a) const {
  const Field& A = *amb_;
  auto d = sub_->digits(a);
  Elem r = 0;
  for (unsigned i = 0; i < d.size(); ++i)
    if (d[i]) r = A.add(r, A.scale(basis_[i], d[i]));
  return r;
}

std::optional<Elem> Embedding::restrict(Elem a) const {
  const Field& A = *amb_;
  const std::uint32_t p = A.p();
  auto v = A.digits(a);
  const unsigned n = A.n(), m = sub_->n();
  std::vector<std::uint32_t> y(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t s = 0;
    for (unsigned j = 0; j < n; ++j) s += std::uint64_t(rows_[i][j]) * v[j] % p;
    y[i] = static_cast<std::uint32_t>(s % p);
  }
  for (unsigned i = m; i < n; ++i)
    if (y[i] != 0) return std::nullopt;
  std::vector<std::uint32_t> c(m);
  for (unsigned j = 0; j < m; ++j) c[j] = y[static_cast<unsigned>(pivot_col_[j])];
  Elem r = sub_->from_digits(c);
  if (embed(r) != a) return std::nullopt;
  return r;
}

FieldElement trace(const FieldElement& x, const FieldPtr& sub) {
  const FieldPtr& A = x.field();
  if (!is_subfield(*sub, *A)) throw InvalidArgument(sub->descriptor() + " is not a subfield of " + A->descriptor());
  const unsigned k = A->n() / sub->n();
  Elem s = 0, y = x.value();
  for (unsigned j = 0; j < k; ++j) {
    s = A->add(s, y);
    y = A->frobenius_power(y, sub->n());
  }
  Embedding emb(sub, A);
  auto r = emb.restrict(s);
  if (!r) throw CheckFailed("trace left the subfield");
  return FieldElement(sub, *r);
}

}  // namespace aslab

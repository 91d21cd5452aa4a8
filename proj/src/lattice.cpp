#include "aslab/lattice.hpp"

#include <exception>
#include <numeric>
#include <thread>

#include "aslab/budget.hpp"
#include "aslab/errors.hpp"
#include "aslab/height.hpp"

namespace aslab {

namespace {

// Runs fn(i) for i < n on the worker threads; each index writes its own slot.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const unsigned T = static_cast<unsigned>(std::min<std::size_t>(worker_threads(), std::max<std::size_t>(n, 1)));
  if (T <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> err(T);
  std::vector<std::thread> th;
  for (unsigned t = 0; t < T; ++t)
    th.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += T) fn(i);
      } catch (...) {
        err[t] = std::current_exception();
      }
    });
  for (auto& x : th) x.join();
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
}

std::vector<mpq_class> heights_of(const FFEllipticCurve& E, const std::vector<FFPoint>& pts) {
  std::vector<mpq_class> h(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { h[i] = canonical_height(E, pts[i]); });
  return h;
}

// Row-reduces M in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& M) {
  std::vector<std::size_t> piv;
  if (M.empty()) return piv;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t s = r;
    while (s < rows && M[s][c] == 0) ++s;
    if (s == rows) continue;
    std::swap(M[r], M[s]);
    mpq_class inv = 1 / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      mpq_class f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

mpz_class pow_z(std::uint64_t b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

void check_iso_q(std::uint64_t q) {
  if (q % 3 != 2) throw InvalidArgument("the isotrivial family needs q = 2 mod 3, got q = " + std::to_string(q));
}

}  // namespace

bool Gram::symmetric() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

Gram Gram::submatrix(const std::vector<std::size_t>& idx) const {
  Gram g;
  for (auto i : idx) {
    g.labels.push_back(labels.at(i));
    std::vector<mpq_class> row;
    for (auto j : idx) row.push_back(entries.at(i).at(j));
    g.entries.push_back(std::move(row));
  }
  return g;
}

std::size_t rational_rank(RatMatrix M) { return rref(M).size(); }

mpq_class rational_det(RatMatrix M) {
  const std::size_t n = M.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (M[c].size() != n) throw InvalidArgument("determinant of a non-square matrix");
    std::size_t s = c;
    while (s < n && M[s][c] == 0) ++s;
    if (s == n) return 0;
    if (s != c) {
      std::swap(M[c], M[s]);
      det = -det;
    }
    det *= M[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (M[i][c] == 0) continue;
      mpq_class f = M[i][c] / M[c][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  return det;
}

std::vector<mpq_class> rational_solve(RatMatrix M, std::vector<mpq_class> b) {
  const std::size_t n = M.size();
  if (b.size() != n) throw InvalidArgument("right-hand side has the wrong length");
  for (std::size_t i = 0; i < n; ++i) M[i].push_back(b[i]);
  auto piv = rref(M);
  if (piv.size() != n || piv.back() != n - 1) throw CheckFailed("singular system");
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = M[i][n];
  return x;
}

std::vector<std::vector<mpz_class>> integer_kernel(const RatMatrix& M) {
  std::vector<std::vector<mpz_class>> out;
  if (M.empty()) return out;
  RatMatrix R = M;
  auto piv = rref(R);
  const std::size_t cols = M[0].size();
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -R[r][f];
    mpz_class den = 1;
    for (auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> w(cols);
    mpz_class g = 0;
    for (std::size_t i = 0; i < cols; ++i) {
      mpq_class s = v[i] * den;
      w[i] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    out.push_back(std::move(w));
  }
  return out;
}

mpz_class lattice_determinant(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return 1;
  const std::size_t cols = rows[0].size();
  mpz_class det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) return 0;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    det *= abs(rows[r][c]);
    ++r;
  }
  return det;
}

Gram oracle_gram(const FFEllipticCurve& E, const std::vector<FFPoint>& pts, const std::vector<std::string>& labels) {
  const std::size_t n = pts.size();
  std::vector<FFPoint> work(pts);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
      work.push_back(ec_add(E, pts[i], pts[j]));
    }
  auto h = heights_of(E, work);
  Gram g{labels, RatMatrix(n, std::vector<mpq_class>(n))};
  for (std::size_t i = 0; i < n; ++i) g.entries[i][i] = h[i];
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    mpq_class v = (h[n + k] - h[i] - h[j]) / 2;
    g.entries[i][j] = g.entries[j][i] = v;
  }
  return g;
}

Gram iso_gram_closed(std::uint64_t q) {
  check_iso_q(q);
  const std::size_t n = 3 * q;
  Gram g;
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < q; ++a) g.labels.push_back("P[" + std::to_string(i) + "," + std::to_string(a) + "]");
  const mpq_class qq(static_cast<long>(q));
  g.entries.assign(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      bool same_i = r / q == c / q, same_a = r % q == c % q;
      mpq_class v;
      if (same_i && same_a) v = 2 * (qq - 1) / 3;
      else if (same_i) v = mpq_class(-2, 3);
      else if (same_a) v = -(qq - 1) / 3;
      else v = mpq_class(1, 3);
      g.entries[r][c] = v;
    }
  return g;
}

Gram noniso_gram_closed(std::uint64_t q, Elem b) {
  auto ps = prime_factors(q);
  if (ps.size() != 1 || ps[0] == 2) throw InvalidArgument("the nonisotrivial family needs odd prime power q");
  FieldPtr F = make_field(static_cast<std::uint32_t>(ps[0]), static_cast<unsigned>(log_p(q, static_cast<std::uint32_t>(ps[0]))));
  if (!F->contains(b) || b == 0 || b == 1 || b == F->neg(1))
    throw InvalidArgument("b must lie in F_q outside {0, 1, -1}, got " + F->format(b));
  const Elem b4 = F->mul(F->from_int(4), b);
  const mpq_class base = mpq_class(1 - 3 * static_cast<long>(q), 4 * static_cast<long>(q));
  const int chi_m1 = F->quadratic_character(F->neg(1));
  Gram g;
  for (std::size_t a = 0; a < q; ++a) g.labels.push_back("P[" + std::to_string(a) + "]");
  g.entries.assign(q, std::vector<mpq_class>(q));
  std::vector<mpq_class> by_gamma(q);
  for (Elem gamma = 0; gamma < q; ++gamma) {
    if (gamma == 0) {
      by_gamma[gamma] = mpq_class((3 * static_cast<long>(q) - 1) * (static_cast<long>(q) - 1), 4 * static_cast<long>(q)) + mpq_class(1, 2);
    } else if (gamma == b4 || gamma == F->neg(b4)) {
      by_gamma[gamma] = base + mpq_class(chi_m1, 4);
    } else {
      by_gamma[gamma] = base + mpq_class(trace_gamma(F, b, gamma), 4);
    }
    by_gamma[gamma].canonicalize();
  }
  for (Elem a = 0; a < q; ++a)
    for (Elem c = 0; c < q; ++c) g.entries[a][c] = by_gamma[F->sub(a, c)];
  return g;
}

mpq_class iso_discriminant_closed(std::uint64_t q) {
  check_iso_q(q);
  mpq_class r(pow_z(q, 2 * (q - 2)), pow_z(3, q - 1));
  r.canonicalize();
  return r;
}

std::vector<std::size_t> iso_basis(std::uint64_t q) {
  std::vector<std::size_t> b;
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t a = 1; a < q; ++a) b.push_back(i * q + a);
  return b;
}

std::vector<std::size_t> noniso_basis(std::uint64_t q) {
  std::vector<std::size_t> b;
  for (std::size_t a = 1; a < q; ++a) b.push_back(a);
  return b;
}

LatticeReport lattice_report(const Gram& g, const std::vector<std::size_t>& basis) {
  if (!g.symmetric()) throw InvalidArgument("Gram matrix is not symmetric");
  LatticeReport rep;
  RatMatrix R = g.entries;
  auto piv = rref(R);
  rep.rank = piv.size();
  rep.basis = basis.empty() ? piv : basis;
  for (auto i : rep.basis) rep.basis_labels.push_back(g.labels.at(i));
  rep.discriminant = rational_det(g.submatrix(rep.basis).entries);
  if (rep.basis.size() == rep.rank && rep.discriminant == 0)
    throw CheckFailed("basis Gram is singular although its size equals the rank");
  rep.relations = integer_kernel(g.entries);
  return rep;
}

std::vector<GramMismatch> compare_grams(const Gram& a, const Gram& b) {
  if (a.size() != b.size()) throw InvalidArgument("Gram matrices of different sizes");
  std::vector<GramMismatch> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.entries[i][j] != b.entries[i][j]) out.push_back({i, j, a.entries[i][j], b.entries[i][j]});
  return out;
}

IndexReport index_conjecture_check(std::uint64_t q) {
  check_iso_q(q);
  IsoFamily fam = iso_family(q);
  IsoExtraPoints ex = iso_extra_points(fam);
  const auto& E = fam.E;
  const std::size_t n = fam.points.size();
  const auto B = iso_basis(q);
  const std::size_t r = B.size(), nb = ex.base.size();

  // every height the check needs, computed in one parallel sweep
  std::vector<FFPoint> work(fam.points);
  std::vector<std::pair<std::size_t, std::size_t>> bpairs;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x + 1; y < r; ++y) {
      bpairs.emplace_back(x, y);
      work.push_back(ec_add(E, fam.points[B[x]], fam.points[B[y]]));
    }
  const std::size_t off_beta = work.size();
  for (const auto& P : ex.base) work.push_back(P);
  const std::size_t off_mixed = work.size();
  for (const auto& P : ex.base)
    for (const auto& Q : fam.points) work.push_back(ec_add(E, P, Q));
  auto h = heights_of(E, work);

  RatMatrix GB(r, std::vector<mpq_class>(r));
  for (std::size_t x = 0; x < r; ++x) GB[x][x] = h[B[x]];
  for (std::size_t k = 0; k < bpairs.size(); ++k) {
    auto [x, y] = bpairs[k];
    GB[x][y] = GB[y][x] = (h[n + k] - h[B[x]] - h[B[y]]) / 2;
  }

  IndexReport rep;
  rep.q = q;
  rep.orbit_size = ex.orbit.size();
  rep.det_V = rational_det(GB);
  rep.det_V_matches_closed = rep.det_V == iso_discriminant_closed(q);
  if (rep.det_V == 0) throw CheckFailed("Gram of V is singular");

  rep.beta_rows.assign(nb, std::vector<mpq_class>(n));
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t m = 0; m < n; ++m)
      rep.beta_rows[k][m] = (h[off_mixed + k * n + m] - h[off_beta + k] - h[m]) / 2;

  const Field& K = *fam.K;
  std::vector<std::vector<mpq_class>> coords;
  rep.orbit_in_span = true;
  for (std::size_t k = 0; k < nb; ++k)
    for (unsigned j = 0; j < 3; ++j)
      for (std::size_t a = 0; a < q; ++a) {
        std::vector<mpq_class> rhs(r);
        for (std::size_t x = 0; x < r; ++x) {
          const std::size_t i = B[x] / q, c = B[x] % q;
          const std::size_t ii = (i + 3 - j) % 3;
          const std::size_t cc = fam.alpha_index(K.sub(fam.alphas[c], fam.alphas[a]));
          rhs[x] = rep.beta_rows[k][fam.index(static_cast<unsigned>(ii), cc)];
        }
        auto c = rational_solve(GB, rhs);
        if (j == 0 && a == 0) {
          mpq_class self = 0;
          for (std::size_t x = 0; x < r; ++x) self += c[x] * rhs[x];
          if (self != h[off_beta + k]) rep.orbit_in_span = false;
        }
        coords.push_back(std::move(c));
      }

  mpz_class d = 1;
  for (const auto& c : coords)
    for (const auto& x : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t x = 0; x < r; ++x) {
    std::vector<mpz_class> e(r, 0);
    e[x] = d;
    rows.push_back(std::move(e));
  }
  for (const auto& c : coords) {
    std::vector<mpz_class> v(r);
    for (std::size_t x = 0; x < r; ++x) {
      mpq_class s = c[x] * d;
      v[x] = s.get_num();
    }
    rows.push_back(std::move(v));
  }
  mpz_class det = lattice_determinant(std::move(rows));
  mpz_class dr;
  mpz_pow_ui(dr.get_mpz_t(), d.get_mpz_t(), r);
  rep.index = mpq_class(dr, det);
  rep.index.canonicalize();
  rep.integral = rep.index.get_den() == 1;
  rep.det_V1 = rep.det_V / (rep.index * rep.index);
  rep.conjectured = pow_z(q, 2 * (q - 2) / 3);
  rep.match = rep.integral && rep.index == mpq_class(rep.conjectured);
  if (!rep.integral) throw CheckFailed("index [V1:V] is not an integer: " + rep.index.get_str());
  return rep;
}

}  // namespace aslab

#pragma once

#include <string>
#include <vector>

#include "aslab/embed.hpp"
#include "aslab/poly.hpp"

namespace aslab {

/// sum a_i x^{p^i}, i = 0..nu, monic (a_nu = 1) and separable (a_0 != 0).
class AdditivePolynomial {
 public:
  AdditivePolynomial(FieldPtr F, std::vector<Elem> coeffs);
  static AdditivePolynomial identity(FieldPtr F);
  /// x^q - x
  static AdditivePolynomial wp(FieldPtr F, std::uint64_t q);
  /// From (exponent-of-p, coefficient) pairs; unspecified coefficients are zero.
  static AdditivePolynomial from_terms(FieldPtr F, const std::vector<std::pair<unsigned, Elem>>& terms);

  const FieldPtr& field() const { return F_; }
  const std::vector<Elem>& coeffs() const { return a_; }
  unsigned nu() const { return static_cast<unsigned>(a_.size() - 1); }
  std::uint64_t degree() const;
  Elem eval(Elem x) const;
  Poly to_poly() const;
  /// Same polynomial with coefficients pushed through an embedding.
  AdditivePolynomial embedded(const Embedding& e) const;
  bool operator==(const AdditivePolynomial& o) const;
  bool operator!=(const AdditivePolynomial& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  FieldPtr F_;
  std::vector<Elem> a_;
};

/// Finite additive subgroup of a field, elements sorted ascending.
struct RootGroup {
  FieldPtr ambient;
  std::vector<Elem> elements;
  bool contains(Elem a) const;
};

/// prod_{h in H} (x - h); throws if H is not an additive subgroup.
AdditivePolynomial roots_to_poly(const RootGroup& H);
/// All roots of A in `ambient`; throws if fewer than deg A are found.
RootGroup poly_to_roots(const AdditivePolynomial& A, const FieldPtr& ambient);
/// A o B via the twisted product rule c_k = sum_{i+j=k} a_i b_j^{p^i}.
AdditivePolynomial compose(const AdditivePolynomial& A, const AdditivePolynomial& B);
/// B = A_{A(F_q)}; satisfies A o B = B o A = x^q - x.  The result lives over F_q.
AdditivePolynomial complement(const AdditivePolynomial& A, std::uint64_t q);
/// A(F) as a subgroup of F (A must have coefficients in F).
RootGroup image_group(const AdditivePolynomial& A);
/// Every additive subgroup (F_p-subspace) of F, ordered by size then elements.
std::vector<RootGroup> all_subgroups(const FieldPtr& F);
/// Brings A's coefficients into F_q when possible; throws otherwise.
AdditivePolynomial coefficients_in(const AdditivePolynomial& A, const FieldPtr& Fq);
/// Parses "[(0,[1]),(1,[1])]" style literals.
AdditivePolynomial parse_addpoly(const FieldPtr& F, const std::string& s);

/// Basis (as elements) of the F_p-kernel of z -> A(z) on the ambient field.
std::vector<Elem> kernel_basis(const AdditivePolynomial& A);
/// Basis of the image of z -> A(z).
std::vector<Elem> image_basis(const AdditivePolynomial& A);
/// All F_p-combinations of the basis, ascending.
std::vector<Elem> span(const Field& F, const std::vector<Elem>& basis);

}  // namespace aslab

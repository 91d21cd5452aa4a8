#pragma once

#include <optional>

#include "aslab/field.hpp"

namespace aslab {

/// Canonical embedding of F_{p^m} into F_{p^n} (m | n): the class of x in the
/// subfield goes to the least root of the subfield's modulus in the ambient field.
class Embedding {
 public:
  Embedding(FieldPtr sub, FieldPtr ambient);

  const FieldPtr& sub() const { return sub_; }
  const FieldPtr& ambient() const { return amb_; }
  Elem image_of_generator() const { return root_; }
  Elem embed(Elem a) const;
  /// Preimage of an ambient element, or nullopt when it lies outside the subfield.
  std::optional<Elem> restrict(Elem a) const;

 private:
  FieldPtr sub_, amb_;
  Elem root_ = 0;
  std::vector<Elem> basis_;  // images of x^i
  // reduced row echelon data for inverting the F_p-linear embedding
  std::vector<std::vector<std::uint32_t>> rows_;  // augmented [ambient digits | sub digits]
  std::vector<int> pivot_col_;
};

bool is_subfield(const Field& sub, const Field& amb);

}  // namespace aslab

#include "grw/linalg.hpp"

namespace grw {

Subspace<ExtField> extend_scalars(const ExtField& ext, const Subspace<BaseField>& u) {
  Mat<ExtField> lifted(u.basis.rows, u.basis.cols, ext.zero());
  for (std::size_t i = 0; i < u.basis.rows; ++i)
    for (std::size_t j = 0; j < u.basis.cols; ++j) lifted.at(i, j) = ext.from_base(u.basis.at(i, j));
  return span(ext, std::move(lifted));
}

}  // namespace grw

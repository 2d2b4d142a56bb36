#ifndef ZETAREG_TOOLS_MATRIX_IO_HPP_
#define ZETAREG_TOOLS_MATRIX_IO_HPP_

#include <istream>
#include <string>
#include <vector>

#include "zetareg/volumes.hpp"

namespace zetareg::cli {

// First non-blank line: N.  Then N non-blank lines of N whitespace-separated
// complex entries "re+imi".  Throws ParseError.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);

// Inverse of read_matrix, entries at 17 significant digits.
std::string write_matrix(const ComplexMatrix& a);

// Throws NonNormalMatrixError unless |A A^dagger - A^dagger A| <= tol
// entrywise, scaled by max(1, max |a_ij|^2).
void require_normal(const ComplexMatrix& a, double tol = 1e-10);

// Eigenvalues sorted by (real, imag) so output order is canonical.
std::vector<Complex> sorted_eigenvalues(const ComplexMatrix& a);

}  // namespace zetareg::cli

#endif  // ZETAREG_TOOLS_MATRIX_IO_HPP_

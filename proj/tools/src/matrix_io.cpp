#include "matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "zetareg/errors.hpp"

namespace zetareg::cli {
namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("matrix: empty input");

  std::istringstream head(line);
  std::string token;
  head >> token;
  std::string extra;
  long n = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), n);
  if (ec != std::errc() || ptr != token.data() + token.size() || n <= 0 || (head >> extra)) {
    throw ParseError("matrix: line " + std::to_string(line_no) +
                     ": expected a positive dimension N");
  }
  if (n > 4096) throw ParseError("matrix: dimension " + token + " is too large");

  ComplexMatrix a(n, n);
  for (long row = 0; row < n; ++row) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("matrix: expected " + std::to_string(n) + " rows, found " +
                       std::to_string(row));
    }
    std::istringstream cells(line);
    long col = 0;
    while (cells >> token) {
      if (col == n) {
        throw ParseError("matrix: line " + std::to_string(line_no) + ": more than " +
                         std::to_string(n) + " entries");
      }
      try {
        a(row, col++) = parse_complex(token);
      } catch (const ParseError& e) {
        throw ParseError("matrix: line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (col != n) {
      throw ParseError("matrix: line " + std::to_string(line_no) + ": expected " +
                       std::to_string(n) + " entries, found " + std::to_string(col));
    }
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError("matrix: line " + std::to_string(line_no) + ": trailing content");
  }
  if (!a.allFinite()) throw ParseError("matrix: non-finite entry");
  return a;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("matrix: cannot open '" + path + "'");
  return read_matrix(in);
}

std::string write_matrix(const ComplexMatrix& a) {
  std::string out = std::to_string(a.rows()) + "\n";
  for (Eigen::Index row = 0; row < a.rows(); ++row) {
    for (Eigen::Index col = 0; col < a.cols(); ++col) {
      if (col > 0) out += ' ';
      out += format_complex(a(row, col));
    }
    out += '\n';
  }
  return out;
}

void require_normal(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionError("matrix must be square");
  const double max_entry = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, max_entry * max_entry);
  const ComplexMatrix commutator = a * a.adjoint() - a.adjoint() * a;
  const double defect = a.size() == 0 ? 0.0 : commutator.cwiseAbs().maxCoeff();
  if (defect > tol * scale) {
    throw NonNormalMatrixError("matrix is not normal: |A A^dagger - A^dagger A| = " +
                               format_double(defect, 6) + " exceeds " +
                               format_double(tol * scale, 6));
  }
}

std::vector<Complex> sorted_eigenvalues(const ComplexMatrix& a) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue solver did not converge");
  std::vector<Complex> eig(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(eig.begin(), eig.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return eig;
}

}  // namespace zetareg::cli

#pragma once

#include <string>
#include <vector>

#include "subdepth/depthcore.hpp"
#include "subdepth/intmatrix.hpp"

namespace subdepth {

/// Restriction (M), induction (N) and Cartan (C for A, D for B) matrices of
/// an algebra pair B <= A. M and N are r x s, C is s x s, D is r x r.
struct AlgebraMatrixData {
  std::string label;
  std::size_t r = 0;
  std::size_t s = 0;
  IntMatrix M;
  IntMatrix N;
  IntMatrix C;
  IntMatrix D;
  bool algebraically_closed = false;
  std::string note;
};

struct EntryViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  mpz_class dm;
  mpz_class nc;
};

struct ValidationReport {
  std::vector<std::string> problems;  // shape and sign errors
  bool relation_checked = false;
  std::vector<EntryViolation> violations;  // entries where DM != NC

  bool ok() const { return problems.empty() && violations.empty(); }
};

ValidationReport validate(const AlgebraMatrixData& data);

enum class Parity { Even, Odd };

struct NecessaryConditionResult {
  bool holds = false;
  int n = 0;
  Parity parity = Parity::Even;
  Certificate certificate;
};

/// With X = M N^T: even tests X^n M <= t X^(n-1) M, odd tests
/// X^(n+1) <= t X^n. True is necessary for depth 2n (resp. 2n+1), never
/// sufficient. Throws DimensionMismatch or ParameterOutOfRange (n < 1).
NecessaryConditionResult necessary_condition(const AlgebraMatrixData& data, int n, Parity parity);

/// Upper triangular n x n matrices over their diagonal: M = C = upper
/// triangular ones, N = D = I.
AlgebraMatrixData triangular_example(int n);

/// Semisimple pair: N = M, C = I, D = I. Throws DegenerateMatrix.
AlgebraMatrixData from_semisimple_pair(const IntMatrix& m, std::string label = {});

std::string to_string(Parity parity);
Parity parse_parity(const std::string& text);

}  // namespace subdepth

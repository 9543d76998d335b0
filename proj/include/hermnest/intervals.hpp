#pragma once

#include <cstdint>
#include <vector>

namespace hermnest {

// The only floating point in the artifact: directed-rounding evaluation of the
// floor/ceiling expressions in the closed-form bounds. Every term is computed
// twice, rounding down and up; if the two floors disagree the precision is
// doubled and the evaluation retried.
//
// Terms have the form  c * x * ln(num/den)^e  with integer c, x, num, den.
struct LogTerm {
  int64_t coeff_num = 1;   // rational coefficient coeff_num/coeff_den
  int64_t coeff_den = 1;
  int64_t x = 1;           // linear factor
  int64_t log_num = 1;     // ln(log_num/log_den), exponent e
  int64_t log_den = 1;
  uint32_t log_exp = 1;
};

// floor / ceil of  base + sum of terms  (base is exact rational base_num/base_den)
int64_t floor_log_expr(int64_t base_num, int64_t base_den, const std::vector<LogTerm>& terms);
int64_t ceil_log_expr(int64_t base_num, int64_t base_den, const std::vector<LogTerm>& terms);

// floor(x + x*ln(num/den)) — the shape used by the dimension and codimension bounds
int64_t floor_x_xln(int64_t x, int64_t num, int64_t den);

}  // namespace hermnest

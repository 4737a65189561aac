#pragma once

#include <string>
#include <vector>

#include "krall/krall.hpp"
#include "krall/report.hpp"

namespace krall {

struct TableRow {
  int n;
  Poly th;  // th_{n+1} = (x + b) hhat_n
  Scalar lambda;
  Scalar norm;  // lambda_b(n) nu_n
};

std::vector<TableRow> gen_table(const KrallContext& ctx, int n_max);
/// Coefficients are exact strings, lowest power first.
std::string render_table(const std::vector<TableRow>& rows, const Scalar& b, Format format);

}  // namespace krall

#include "kpde/grid.hpp"

namespace kpde {

Grid1D make_grid(double a, double b, int n) {
  if (!(b > a)) throw param_error("make_grid: need b > a");
  if (n < 6) throw param_error("make_grid: need at least 6 nodes");
  Grid1D g;
  g.a = a;
  g.b = b;
  g.n = n;
  g.dx = (b - a) / n;
  return g;
}

Field make_field(int nx, int ny) {
  Field f;
  f.nx = nx;
  f.ny = ny;
  f.v.assign((std::size_t)nx * ny, 0.0);
  return f;
}

void extract_line(const Field& f, char axis, int index, double* out) {
  if (axis == 'x') {
    const double* row = f.v.data() + (std::size_t)index * f.nx;
    for (int i = 0; i < f.nx; ++i) out[i] = row[i];
  } else {
    for (int j = 0; j < f.ny; ++j) out[j] = f.v[(std::size_t)j * f.nx + index];
  }
}

void write_line(Field& f, char axis, int index, const double* in) {
  if (axis == 'x') {
    double* row = f.v.data() + (std::size_t)index * f.nx;
    for (int i = 0; i < f.nx; ++i) row[i] = in[i];
  } else {
    for (int j = 0; j < f.ny; ++j) f.v[(std::size_t)j * f.nx + index] = in[j];
  }
}

}  // namespace kpde

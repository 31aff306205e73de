#pragma once
#include <cstddef>
#include <vector>

#include "kpde/errors.hpp"

namespace kpde {

// wrap index into [0, n)
inline int periodic_index(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

// uniform periodic grid on [a,b): n unique nodes x_i = a + i dx, dx = (b-a)/n.
// x_n identifies with x_0; the closure point b is kept only inside sweeps.
struct Grid1D {
  double a = 0.0, b = 1.0;
  int n = 0;
  double dx = 0.0;
};

Grid1D make_grid(double a, double b, int n);

inline double grid_node(const Grid1D& g, int i) { return g.a + g.dx * i; }

// 2D scalar field, row-major with x fastest: v[j*nx + i].  1D fields use ny = 1.
struct Field {
  int nx = 0, ny = 1;
  std::vector<double> v;
  double& at(int i, int j) { return v[(std::size_t)j * nx + i]; }
  double at(int i, int j) const { return v[(std::size_t)j * nx + i]; }
};

Field make_field(int nx, int ny = 1);

// copy row j (axis 'x', length nx) or column i (axis 'y', length ny)
void extract_line(const Field& f, char axis, int index, double* out);
void write_line(Field& f, char axis, int index, const double* in);

}  // namespace kpde

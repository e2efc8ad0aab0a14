#include "geronimus/reference.hpp"

#include "geronimus/error.hpp"

namespace geronimus {

namespace {

ReferenceTable make_table1()
{
  ReferenceTable t;
  t.id = 1;
  t.spec = MeasureSpec::laguerre(0.0);
  t.c = -1.0;
  t.n = 3;
  t.N_values = {0.0, 0.0125, 0.025, 0.05, 5.0};
  t.zeros.resize(5, 3);
  t.zeros << 0.296771, 1.794881, 5.327153,
             0.096936, 1.381317, 4.846199,
             -0.079531, 1.196907, 4.66079,
             -0.324373, 1.050055, 4.50679,
             -0.988481, 0.87094, 4.276644;
  t.charge.resize(5);
  t.charge << -1.27309, -0.039345, -0.015274, -0.156362, -0.700057;
  t.kernel_limits.resize(2);
  t.kernel_limits << 0.869089, 4.273768;
  return t;
}

ReferenceTable make_table2()
{
  ReferenceTable t;
  t.id = 2;
  t.spec = MeasureSpec::jacobi(0.5, 1.0);
  t.c = -1.5;
  t.n = 4;
  t.N_values = {0.0, 0.0008, 0.002, 0.05, 5.0};
  t.zeros.resize(5, 4);
  t.zeros << -0.784545, -0.302212, 0.304654, 0.806277,
             -0.925906, -0.430453, 0.230271, 0.784909,
             -1.080633, -0.488136, 0.199190, 0.776221,
             -1.467364, -0.544057, 0.163585, 0.765818,
             -1.499661, -0.546604, 0.161684, 0.765238;
  t.charge.resize(5);
  t.charge << -1.61637, -0.97778, -1.04893, -1.35837, -1.38587;
  t.kernel_limits.resize(3);
  t.kernel_limits << -0.546629, 0.161665, 0.765232;
  return t;
}

} // namespace

const ReferenceTable& reference_table(int id)
{
  static const ReferenceTable t1 = make_table1();
  static const ReferenceTable t2 = make_table2();
  if (id == 1)
    return t1;
  if (id == 2)
    return t2;
  throw DomainError("unknown table id " + std::to_string(id) + " (expected 1 or 2)");
}

const FigureSpec& figure_spec(int id)
{
  static const FigureSpec f1{1, 1, -1.5, 7.0, 600};
  static const FigureSpec f2{2, 2, -1.6, 1.0, 600};
  if (id == 1)
    return f1;
  if (id == 2)
    return f2;
  throw DomainError("unknown figure id " + std::to_string(id) + " (expected 1 or 2)");
}

} // namespace geronimus

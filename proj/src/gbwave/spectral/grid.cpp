#include "gbwave/spectral/grid.hpp"

#include <cstdint>
#include <istream>
#include <ostream>

namespace gbwave {

GridField2D::GridField2D(int K_, double L_) : K(K_), L(L_) {
  if (K < 2 || (K & (K - 1)) != 0)
    throw std::invalid_argument("GridField2D: K must be a power of two >= 2");
  if (L <= 0) throw std::invalid_argument("GridField2D: L must be positive");
  values.assign(static_cast<std::size_t>(K) * K, cplx{});
}

void write_field_dump(std::ostream& os, const GridField2D& f, double t) {
  const std::uint32_t K = static_cast<std::uint32_t>(f.K);
  os.write(reinterpret_cast<const char*>(&K), sizeof K);
  os.write(reinterpret_cast<const char*>(&f.L), sizeof f.L);
  os.write(reinterpret_cast<const char*>(&t), sizeof t);
  std::vector<float> buf(2 * f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    buf[2 * i] = static_cast<float>(f.values[i].real());
    buf[2 * i + 1] = static_cast<float>(f.values[i].imag());
  }
  os.write(reinterpret_cast<const char*>(buf.data()),
           static_cast<std::streamsize>(buf.size() * sizeof(float)));
}

GridField2D read_field_dump(std::istream& is, double* t_out) {
  std::uint32_t K = 0;
  double L = 0, t = 0;
  is.read(reinterpret_cast<char*>(&K), sizeof K);
  is.read(reinterpret_cast<char*>(&L), sizeof L);
  is.read(reinterpret_cast<char*>(&t), sizeof t);
  if (!is) throw std::runtime_error("read_field_dump: truncated header");
  GridField2D f(static_cast<int>(K), L);
  std::vector<float> buf(2 * f.values.size());
  is.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!is) throw std::runtime_error("read_field_dump: truncated payload");
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = cplx(buf[2 * i], buf[2 * i + 1]);
  if (t_out) *t_out = t;
  return f;
}

}  // namespace gbwave

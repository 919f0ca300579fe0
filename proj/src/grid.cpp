#include "sobmult/grid.hpp"

#include "sobmult/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little, "file formats assume a little-endian host");

namespace sobmult {

namespace {

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

} // namespace

GridFunction::GridFunction(int dim, std::size_t m, double period,
                           std::vector<std::complex<double>> samples)
    : dim_(dim), m_(m), period_(period), samples_(std::move(samples)) {
  if (dim_ != 1 && dim_ != 2) {
    throw ValidationError("grid dimension must be 1 or 2, got " + std::to_string(dim_));
  }
  if (!is_pow2(m_)) {
    throw ValidationError("grid size must be a power of two, got " + std::to_string(m_));
  }
  if (!(period_ > 0.0) || !std::isfinite(period_)) {
    throw ValidationError("grid period must be positive and finite");
  }
  const std::size_t expected = dim_ == 1 ? m_ : m_ * m_;
  if (samples_.size() != expected) {
    throw ValidationError("sample count " + std::to_string(samples_.size()) + " does not match grid size " +
                          std::to_string(expected));
  }
  for (const auto& z : samples_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("grid samples must be finite");
    }
  }
}

GridFunction GridFunction::zeros(int dim, std::size_t m, double period) {
  return GridFunction(dim, m, period, std::vector<std::complex<double>>(dim == 1 ? m : m * m));
}

double GridFunction::cell_volume() const {
  const double step = h();
  return dim_ == 1 ? step : step * step;
}

GridFunction pointwise_product(const GridFunction& u, const GridFunction& v) {
  if (u.dim() != v.dim() || u.m() != v.m() || u.period() != v.period()) {
    throw ValidationError("pointwise product requires identical grids");
  }
  std::vector<std::complex<double>> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u[i] * v[i];
  return GridFunction(u.dim(), u.m(), u.period(), std::move(out));
}

GridFunction scaled(const GridFunction& u, std::complex<double> factor) {
  std::vector<std::complex<double>> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = factor * u[i];
  return GridFunction(u.dim(), u.m(), u.period(), std::move(out));
}

GridFunction pointwise_sum(const GridFunction& u, const GridFunction& v) {
  if (u.dim() != v.dim() || u.m() != v.m() || u.period() != v.period()) {
    throw ValidationError("pointwise sum requires identical grids");
  }
  std::vector<std::complex<double>> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u[i] + v[i];
  return GridFunction(u.dim(), u.m(), u.period(), std::move(out));
}

void write_sobg(const GridFunction& u, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write("SOBG", 4);
  const std::uint32_t dim = static_cast<std::uint32_t>(u.dim());
  const std::uint32_t m = static_cast<std::uint32_t>(u.m());
  const double period = u.period();
  out.write(reinterpret_cast<const char*>(&dim), sizeof dim);
  out.write(reinterpret_cast<const char*>(&m), sizeof m);
  out.write(reinterpret_cast<const char*>(&period), sizeof period);
  for (const auto& z : u.samples()) {
    const double re = z.real();
    const double im = z.imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof re);
    out.write(reinterpret_cast<const char*>(&im), sizeof im);
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

GridFunction read_sobg(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "SOBG", 4) != 0) {
    throw ParseError("'" + path.string() + "' is not a SOBG file");
  }
  std::uint32_t dim = 0;
  std::uint32_t m = 0;
  double period = 0.0;
  in.read(reinterpret_cast<char*>(&dim), sizeof dim);
  in.read(reinterpret_cast<char*>(&m), sizeof m);
  in.read(reinterpret_cast<char*>(&period), sizeof period);
  if (!in) throw ParseError("truncated SOBG header in '" + path.string() + "'");
  const std::size_t count = dim == 1 ? m : static_cast<std::size_t>(m) * m;
  std::vector<std::complex<double>> samples(count);
  for (auto& z : samples) {
    double re = 0.0;
    double im = 0.0;
    in.read(reinterpret_cast<char*>(&re), sizeof re);
    in.read(reinterpret_cast<char*>(&im), sizeof im);
    if (!in) throw ParseError("truncated SOBG payload in '" + path.string() + "'");
    z = {re, im};
  }
  return GridFunction(static_cast<int>(dim), m, period, std::move(samples));
}

void write_csv(const GridFunction& u, const std::filesystem::path& path) {
  if (u.dim() != 1) throw UsageError("CSV export supports dimension 1 only");
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << "index,re,im\n";
  out.precision(17);
  for (std::size_t i = 0; i < u.size(); ++i) {
    out << i << "," << u[i].real() << "," << u[i].imag() << "\n";
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

GridFunction read_csv(const std::filesystem::path& path, double period) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::complex<double>> samples;
  std::string line;
  std::size_t expected_index = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string index_field, re_field, im_field;
    if (!std::getline(row, index_field, ',') || !std::getline(row, re_field, ',') ||
        !std::getline(row, im_field)) {
      throw ParseError("malformed CSV row: '" + line + "'");
    }
    if (first && index_field == "index") {
      first = false;
      continue;
    }
    first = false;
    std::size_t index = 0;
    try {
      index = std::stoul(index_field);
      samples.emplace_back(std::stod(re_field), std::stod(im_field));
    } catch (const std::exception&) {
      throw ParseError("malformed CSV row: '" + line + "'");
    }
    if (index != expected_index) {
      throw ParseError("CSV rows must be indexed consecutively from 0, got " + index_field);
    }
    ++expected_index;
  }
  const std::size_t count = samples.size();
  return GridFunction(1, count, period, std::move(samples));
}

} // namespace sobmult

#include <fftw3.h>

#include <algorithm>

#include "bigcp/errors.hpp"
#include "bigcp/series.hpp"

namespace bigcp {

namespace {

std::vector<Complex> multiply_naive(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                    int m) {
  const int la = std::min<int>(a.size(), m + 1);
  const int lb = std::min<int>(b.size(), m + 1);
  if (la == 0 || lb == 0) return {};
  const int len = std::min(la + lb - 1, m + 1);
  std::vector<Complex> out(len);
  for (int i = 0; i < la; ++i) {
    if (a[i] == Complex{}) continue;
    const int top = std::min(lb, len - i);
    for (int j = 0; j < top; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

struct FftBuffer {
  explicit FftBuffer(std::size_t n) : data(fftw_alloc_complex(n)), size(n) {
    if (!data) throw ResourceError("FFT buffer allocation failed");
  }
  ~FftBuffer() { fftw_free(data); }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;

  fftw_complex* data;
  std::size_t size;
};

void transform(FftBuffer& buf, int sign) {
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(buf.size), buf.data, buf.data, sign,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

}  // namespace

std::vector<Complex> multiply_truncated(const std::vector<Complex>& a,
                                        const std::vector<Complex>& b, int m) {
  const std::size_t la = std::min<std::size_t>(a.size(), m + 1);
  const std::size_t lb = std::min<std::size_t>(b.size(), m + 1);
  if (la == 0 || lb == 0) return {};
  if (std::min(la, lb) <= 64) return multiply_naive(a, b, m);
  const std::size_t full = la + lb - 1;
  std::size_t n = 1;
  while (n < full) n <<= 1;
  FftBuffer fa(n), fb(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex x = i < la ? a[i] : Complex{};
    const Complex y = i < lb ? b[i] : Complex{};
    fa.data[i][0] = x.real();
    fa.data[i][1] = x.imag();
    fb.data[i][0] = y.real();
    fb.data[i][1] = y.imag();
  }
  transform(fa, FFTW_FORWARD);
  transform(fb, FFTW_FORWARD);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex x(fa.data[i][0], fa.data[i][1]);
    const Complex y(fb.data[i][0], fb.data[i][1]);
    const Complex z = x * y;
    fa.data[i][0] = z.real();
    fa.data[i][1] = z.imag();
  }
  transform(fa, FFTW_BACKWARD);
  const std::size_t len = std::min<std::size_t>(full, m + 1);
  std::vector<Complex> out(len);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < len; ++i) out[i] = Complex(fa.data[i][0], fa.data[i][1]) * scale;
  return out;
}

std::vector<Complex> series_inverse(const std::vector<Complex>& a, int m) {
  if (a.empty() || a[0] == Complex{})
    throw ContractError("invalid-input", "series inverse needs a nonzero constant term");
  std::vector<Complex> b{1.0 / a[0]};
  int have = 1;
  while (have < m + 1) {
    const int next = std::min(2 * have, m + 1);
    std::vector<Complex> head(a.begin(), a.begin() + std::min<std::size_t>(a.size(), next));
    auto t = multiply_truncated(head, b, next - 1);
    t.resize(next);
    for (auto& x : t) x = -x;
    t[0] += 2.0;
    b = multiply_truncated(b, t, next - 1);
    b.resize(next);
    have = next;
  }
  b.resize(m + 1);
  return b;
}

}  // namespace bigcp

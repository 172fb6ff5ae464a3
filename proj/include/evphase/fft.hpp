#pragma once

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace evphase::detail {

// FFTW plans are reused per (rows, cols, kind). Plan creation is not
// thread-safe and the cached buffers are shared, so the whole execute is
// serialized behind one mutex.
class TransformCache {
 public:
  static TransformCache& instance() {
    static TransformCache cache;
    return cache;
  }

  void fft2(std::vector<std::complex<double>>& io, int rows, int cols, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    Entry& e = complex_entry(rows, cols, sign);
    std::memcpy(e.cin, io.data(), io.size() * sizeof(fftw_complex));
    fftw_execute(e.plan);
    std::memcpy(io.data(), e.cout, io.size() * sizeof(fftw_complex));
    if (sign == FFTW_BACKWARD) {
      const double scale = 1.0 / (static_cast<double>(rows) * cols);
      for (auto& v : io) v *= scale;
    }
  }

  // Unnormalized DCT-II (REDFT10) over both axes.
  void dct2(std::vector<double>& io, int rows, int cols) {
    std::lock_guard<std::mutex> lock(mutex_);
    Entry& e = real_entry(rows, cols, FFTW_REDFT10);
    std::memcpy(e.rin, io.data(), io.size() * sizeof(double));
    fftw_execute(e.plan);
    std::memcpy(io.data(), e.rout, io.size() * sizeof(double));
  }

  // Inverse of dct2, including the 1/(4*rows*cols) normalization.
  void idct2(std::vector<double>& io, int rows, int cols) {
    std::lock_guard<std::mutex> lock(mutex_);
    Entry& e = real_entry(rows, cols, FFTW_REDFT01);
    std::memcpy(e.rin, io.data(), io.size() * sizeof(double));
    fftw_execute(e.plan);
    const double scale = 1.0 / (4.0 * rows * cols);
    for (std::size_t i = 0; i < io.size(); ++i) io[i] = e.rout[i] * scale;
  }

  TransformCache(const TransformCache&) = delete;
  TransformCache& operator=(const TransformCache&) = delete;

 private:
  struct Entry {
    fftw_plan plan = nullptr;
    fftw_complex* cin = nullptr;
    fftw_complex* cout = nullptr;
    double* rin = nullptr;
    double* rout = nullptr;
  };

  TransformCache() = default;

  ~TransformCache() {
    for (auto& [key, e] : entries_) {
      if (e.plan) fftw_destroy_plan(e.plan);
      if (e.cin) fftw_free(e.cin);
      if (e.cout) fftw_free(e.cout);
      if (e.rin) fftw_free(e.rin);
      if (e.rout) fftw_free(e.rout);
    }
  }

  Entry& complex_entry(int rows, int cols, int sign) {
    Key key{rows, cols, sign, /*real=*/0};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      Entry e;
      const std::size_t n = static_cast<std::size_t>(rows) * cols;
      e.cin = fftw_alloc_complex(n);
      e.cout = fftw_alloc_complex(n);
      e.plan = fftw_plan_dft_2d(rows, cols, e.cin, e.cout, sign, FFTW_ESTIMATE);
      it = entries_.emplace(key, e).first;
    }
    return it->second;
  }

  Entry& real_entry(int rows, int cols, fftw_r2r_kind kind) {
    Key key{rows, cols, static_cast<int>(kind), /*real=*/1};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      Entry e;
      const std::size_t n = static_cast<std::size_t>(rows) * cols;
      e.rin = fftw_alloc_real(n);
      e.rout = fftw_alloc_real(n);
      // Solver transforms run thousands of times per sweep; FFTW_MEASURE pays
      // for itself after the first few calls.
      e.plan = fftw_plan_r2r_2d(rows, cols, e.rin, e.rout, kind, kind, FFTW_MEASURE);
      it = entries_.emplace(key, e).first;
    }
    return it->second;
  }

  using Key = std::tuple<int, int, int, int>;
  std::mutex mutex_;
  std::map<Key, Entry> entries_;
};

inline void fft2_inplace(std::vector<std::complex<double>>& io, int rows, int cols, int sign) {
  TransformCache::instance().fft2(io, rows, cols, sign);
}

inline void dct2_inplace(std::vector<double>& io, int rows, int cols) {
  TransformCache::instance().dct2(io, rows, cols);
}

inline void idct2_inplace(std::vector<double>& io, int rows, int cols) {
  TransformCache::instance().idct2(io, rows, cols);
}

}  // namespace evphase::detail

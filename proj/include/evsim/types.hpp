#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace evsim {

// All frame data is stored row-major: row index = y, column index = x.
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GridD = Grid<double>;
using GridU16 = Grid<std::uint16_t>;
using GridI8 = Grid<std::int8_t>;

// Linear intensity treated as full scale (16-bit input range) when the
// low-pass bandwidth is scaled by pixel intensity.
inline constexpr double kFullScaleIntensity = 65535.0;

// Sentinel for "pixel has never emitted an event".
inline constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::min();

// Timestamps are integer microseconds; fractional times round half-up.
inline std::int64_t round_us(double t) {
  return static_cast<std::int64_t>(std::floor(t + 0.5));
}

struct IntensityFrame {
  std::int64_t timestamp_us = 0;
  GridD data;  // linear intensity, >= 0

  int width() const { return static_cast<int>(data.cols()); }
  int height() const { return static_cast<int>(data.rows()); }
};

struct Event {
  std::int64_t t_us = 0;
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  std::int8_t polarity = 1;  // +1 or -1

  friend bool operator==(const Event&, const Event&) = default;
};

// Canonical output order for event streams.
inline bool event_order(const Event& a, const Event& b) {
  if (a.t_us != b.t_us) return a.t_us < b.t_us;
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

// One fixed-rate snapshot; each cell holds -1, 0 or +1.
struct EventFrame {
  std::int64_t timestamp_us = 0;
  GridI8 data;
};

// 10-bit digital numbers, 0..1023.
struct CisFrame {
  std::int64_t timestamp_us = 0;
  GridU16 data;
};

enum class PixelFault : std::uint8_t { normal, hot, cold };

struct PixelState {
  double ref_log = 0.0;
  double lpf_state1 = 0.0;
  double lpf_state2 = 0.0;
  double threshold_offset = 0.0;
  std::int64_t last_event_us = kNever;
  PixelFault fault = PixelFault::normal;
};

struct FrameScore {
  int frame = 0;
  double ssim = 0.0;
  double psnr = 0.0;
};

struct QualityReport {
  double mean_ssim = 0.0;
  double min_ssim = 0.0;
  double std_ssim = 0.0;
  double mean_psnr = 0.0;
  double min_psnr = 0.0;
  double std_psnr = 0.0;
  double min_patch_ssim = 0.0;
  double min_patch_psnr = 0.0;
  std::vector<FrameScore> per_frame;
};

// Configuration / input validation failure. Carries the offending key so the
// CLI can name it in the error message.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Requested time span is not covered by the source sequence.
class CoverageError : public std::runtime_error {
 public:
  CoverageError(std::int64_t need_start, std::int64_t need_end,
                std::int64_t have_start, std::int64_t have_end)
      : std::runtime_error("source does not cover [" +
                           std::to_string(need_start) + ", " +
                           std::to_string(need_end) + "] us (have [" +
                           std::to_string(have_start) + ", " +
                           std::to_string(have_end) + "])"),
        need_start_us(need_start),
        need_end_us(need_end),
        have_start_us(have_start),
        have_end_us(have_end) {}

  std::int64_t need_start_us, need_end_us, have_start_us, have_end_us;
};

}  // namespace evsim

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace eegqml::dsp {

/// One named channel of raw samples.
struct Channel {
  std::string name;
  std::vector<double> samples;
};

/// Multichannel time-series EEG trial at a fixed sampling rate.
struct SignalRecord {
  double sample_rate_hz = 0.0;
  std::vector<Channel> channels;
  std::string trial_id;
  std::optional<int> label;
};

/// Throws ConfigError/DataError when the record invariants are violated
/// (equal channel lengths >= 2, positive sample rate).
void validate(const SignalRecord& record);

struct FilterSpec {
  double low_cut_hz = 0.5;
  double high_cut_hz = 45.0;
  int order = 5;  // analog prototype order; the digital bandpass is 2x this
  double sample_rate_hz = 250.0;
};

void validate(const FilterSpec& spec);

/// Digital IIR transfer function b(z)/a(z), a[0] normalized to 1.
struct IIRCoefficients {
  std::vector<double> numerator;    // b
  std::vector<double> denominator;  // a
};

enum class WindowKind { hann };
enum class Detrend { constant, none };

struct WelchConfig {
  int segment_length = 256;
  double overlap_fraction = 0.5;
  WindowKind window_kind = WindowKind::hann;
  Detrend detrend = Detrend::constant;
};

void validate(const WelchConfig& cfg);

/// One-sided power spectral density estimate.
struct PsdEstimate {
  std::vector<double> frequencies_hz;  // ascending, [0, fs/2]
  std::vector<double> power_density;   // signal-units^2 / Hz
  double resolution_hz = 0.0;
};

enum class BandName { delta, theta, alpha, beta };

struct FrequencyBand {
  BandName name;
  double low_hz;
  double high_hz;  // half-open bin rule: low <= f < high
};

/// Canonical EEG band table: delta [0.5,4), theta [4,8), alpha [8,13),
/// beta [13,30).
const std::array<FrequencyBand, 4>& canonical_bands();

const char* band_name_str(BandName name);

/// Per-trial band powers, in canonical band order.
struct BandPowerVector {
  double delta = 0.0;
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  bool standardized = false;

  std::array<double, 4> values() const { return {delta, theta, alpha, beta}; }
  static BandPowerVector from_values(const std::array<double, 4>& v,
                                     bool standardized);
};

/// Per-feature mean and population standard deviation, fitted on the
/// training split only.
struct StandardizerStats {
  std::array<double, 4> mean{};
  std::array<double, 4> std_dev{};
};

}  // namespace eegqml::dsp

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rfbeats::signal {

/// One-sided amplitude spectrum of a uniformly sampled real series, with
/// angular frequencies. The series is zero-padded to `padded_length` (rounded
/// up to a power of two, at least the input length), so callers should pass it
/// with its long-time asymptote subtracted; a mean subtraction instead would
/// leave a rectangular-window ripple across the whole band.
struct AmplitudeSpectrum {
    std::vector<double> omegas;
    std::vector<double> amplitudes;
    double native_resolution = 0.0;  // 2 pi / (n dt) of the unpadded record
};

AmplitudeSpectrum amplitude_spectrum(std::span<const double> samples, double dt,
                                     std::size_t padded_length = 1u << 16);

struct Peak {
    double omega = 0.0;
    double amplitude = 0.0;
};

/// Local maxima in [omega_min, omega_max] whose amplitude and topographic
/// prominence are both at least `rel_threshold` times the largest amplitude in
/// that band, strongest first. The prominence test drops truncation ripple
/// riding on the tail of a stronger line.
std::vector<Peak> find_peaks(const AmplitudeSpectrum& spectrum, double omega_min,
                             double omega_max, double rel_threshold = 0.05);

/// Carrier and envelope frequencies of a two-tone signal. With a single peak
/// the envelope is zero.
struct BeatEstimate {
    double carrier = 0.0;
    double envelope = 0.0;
    std::vector<Peak> peaks;
    double resolution = 0.0;

    bool single_peak() const { return peaks.size() == 1; }
};

BeatEstimate estimate_beats(std::span<const double> samples, double dt, double omega_min,
                            double omega_max, double rel_threshold = 0.05);

}  // namespace rfbeats::signal

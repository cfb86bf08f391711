#include "rfbeats/signal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "rfbeats/errors.hpp"

namespace rfbeats::signal {

namespace {

// Height of a[k] above the higher of the two saddles separating it from
// taller maxima (or from the band edges).
double prominence(const std::vector<double>& a, std::size_t k, std::size_t first,
                  std::size_t last) {
    double left_min = a[k];
    for (std::size_t j = k; j-- > first;) {
        if (a[j] > a[k]) break;
        left_min = std::min(left_min, a[j]);
    }
    double right_min = a[k];
    for (std::size_t j = k + 1; j <= last; ++j) {
        if (a[j] > a[k]) break;
        right_min = std::min(right_min, a[j]);
    }
    return a[k] - std::max(left_min, right_min);
}

}  // namespace

AmplitudeSpectrum amplitude_spectrum(std::span<const double> samples, double dt,
                                     std::size_t padded_length) {
    if (samples.size() < 2) throw DimensionMismatch("amplitude_spectrum: need at least 2 samples");
    if (!(dt > 0.0)) throw InvalidParameters("amplitude_spectrum: dt must be positive");

    std::size_t n = 1;
    while (n < std::max(padded_length, samples.size())) n <<= 1;

    std::vector<double> padded(n, 0.0);
    std::copy(samples.begin(), samples.end(), padded.begin());

    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, padded);

    AmplitudeSpectrum out;
    const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    const std::size_t bins = n / 2 + 1;
    out.omegas.resize(bins);
    out.amplitudes.resize(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        out.omegas[k] = d_omega * static_cast<double>(k);
        out.amplitudes[k] = std::abs(spectrum[k]);
    }
    out.native_resolution = 2.0 * std::numbers::pi / (static_cast<double>(samples.size()) * dt);
    return out;
}

std::vector<Peak> find_peaks(const AmplitudeSpectrum& spectrum, double omega_min,
                             double omega_max, double rel_threshold) {
    const auto& w = spectrum.omegas;
    const auto& a = spectrum.amplitudes;
    std::vector<Peak> peaks;
    const auto lo = std::lower_bound(w.begin(), w.end(), omega_min);
    const auto hi = std::upper_bound(w.begin(), w.end(), omega_max);
    if (lo >= hi) return peaks;
    const auto first = static_cast<std::size_t>(lo - w.begin());
    const auto last = static_cast<std::size_t>(hi - w.begin()) - 1;
    const double band_max = *std::max_element(a.begin() + first, a.begin() + last + 1);
    if (band_max <= 0.0) return peaks;
    const double floor = rel_threshold * band_max;
    for (std::size_t k = std::max<std::size_t>(first, 1); k <= last && k + 1 < w.size(); ++k) {
        if (a[k] >= a[k - 1] && a[k] > a[k + 1] && a[k] >= floor &&
            prominence(a, k, first, last) >= floor) {
            peaks.push_back({w[k], a[k]});
        }
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& x, const Peak& y) { return x.amplitude > y.amplitude; });
    return peaks;
}

BeatEstimate estimate_beats(std::span<const double> samples, double dt, double omega_min,
                            double omega_max, double rel_threshold) {
    const AmplitudeSpectrum spectrum = amplitude_spectrum(samples, dt);
    BeatEstimate out;
    out.resolution = spectrum.native_resolution;
    out.peaks = find_peaks(spectrum, omega_min, omega_max, rel_threshold);
    if (out.peaks.empty()) return out;
    if (out.peaks.size() == 1) {
        out.carrier = out.peaks.front().omega;
        return out;
    }
    const double lo = std::min(out.peaks[0].omega, out.peaks[1].omega);
    const double hi = std::max(out.peaks[0].omega, out.peaks[1].omega);
    out.carrier = 0.5 * (hi + lo);
    out.envelope = 0.5 * (hi - lo);
    return out;
}

}  // namespace rfbeats::signal

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "soundscreen/audio_io.hpp"
#include "soundscreen/types.hpp"

namespace soundscreen {

template <typename T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), data(r * c, fill) {}

    T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    T* row(std::size_t r) { return data.data() + r * cols; }
    const T* row(std::size_t r) const { return data.data() + r * cols; }
};

using MatrixF = Matrix<float>;
using MatrixD = Matrix<double>;

struct SpectrogramConfig {
    double window_ms = 25.0;
    double hop_ms = 10.0;
    std::size_t n_fft = 512;
    std::size_t n_mels = 64;
    double fmin_hz = 125.0;
    double fmax_hz = 7500.0;
    double log_floor = 1e-10;

    std::size_t window_samples(int sample_rate_hz) const;
    std::size_t hop_samples(int sample_rate_hz) const;
    void validate(int sample_rate_hz) const;
};

struct LogMelSpectrogram {
    MatrixF values;  // frames x n_mels, natural-log energies
    SpectrogramConfig config;
};

struct FeatureWindow {
    MatrixF values;  // t_frames x n_mels, z-normalized per window
    Modality modality = Modality::breathing;
};

enum class WindowPolicy { center_crop_or_pad, tiled_50pct_overlap };

/// mel(f) = 2595 * log10(1 + f / 700)
double hz_to_mel(double hz);
double mel_to_hz(double mel);

struct MelFilterbank {
    std::size_t n_mels = 0;
    std::size_t n_bins = 0;          // n_fft/2 + 1
    MatrixD weights;                 // n_mels x n_bins triangular rows
    std::vector<double> center_hz;   // filter peak frequencies
    // Nonzero column range [begin, end) per row, for the sparse apply path.
    std::vector<std::pair<std::size_t, std::size_t>> row_span;
};

/// Hann-windowed, hop-strided power spectra; frames x (n_fft/2 + 1).
MatrixD stft_power(const AudioClip& clip, const SpectrogramConfig& config);

MelFilterbank mel_filterbank(int sample_rate_hz, std::size_t n_fft, std::size_t n_mels,
                             double fmin_hz, double fmax_hz);

/// values = ln(max(filterbank . power_frame, log_floor)) per frame.
MatrixF log_mel(const MatrixD& power, const MelFilterbank& filterbank, double log_floor);

/// Full front end: decode rate assumed canonical, returns log-mel features.
LogMelSpectrogram compute_log_mel(const AudioClip& clip, const SpectrogramConfig& config);

/// Cut fixed-size model inputs out of a spectrogram. Padding replicates edge
/// frames; every window is independently z-normalized (constant -> zeros).
std::vector<FeatureWindow> windows(const LogMelSpectrogram& spec, std::size_t t_frames,
                                   WindowPolicy policy, Modality modality);

// LMEL feature file: magic "LMEL", version u16=1, u32 frames, u32 n_mels,
// u8 modality, then frames*n_mels little-endian f32 row-major.
void write_lmel(const std::filesystem::path& path, const MatrixF& values, Modality modality);
struct LmelFile {
    MatrixF values;
    Modality modality;
};
LmelFile read_lmel(const std::filesystem::path& path);

}  // namespace soundscreen

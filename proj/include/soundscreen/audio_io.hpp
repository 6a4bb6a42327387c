#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace soundscreen {

/// Decoded mono waveform. Samples are dimensionless amplitudes in [-1, 1].
struct AudioClip {
    std::vector<float> samples;
    int sample_rate_hz = 0;
    std::string source_path;

    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate_hz;
    }
};

enum class QualityReason { ok, too_short, clipped, silent };

struct QualityVerdict {
    bool accepted = false;
    QualityReason reason = QualityReason::ok;
};

const char* to_string(QualityReason reason);

/// Gate thresholds; defaults are pipeline policy, all overridable.
struct QualityConfig {
    double min_duration_s = 1.0;
    double clip_fraction_max = 0.05;
    double silence_rms_floor = 1e-4;
};

/// Decode a RIFF/WAVE buffer (PCM16 or IEEE float32, 1-2 channels).
/// Stereo is averaged to mono; PCM16 is scaled by 1/32768.
AudioClip decode_wav(std::span<const std::uint8_t> bytes, const std::string& source_path = "");

/// Encode mono PCM16 WAV.
std::vector<std::uint8_t> encode_wav(const AudioClip& clip);

AudioClip load_wav(const std::filesystem::path& path);
void save_wav(const std::filesystem::path& path, const AudioClip& clip);

/// Polyphase windowed-sinc resampler (Kaiser beta = 8.6, 32 taps per phase).
/// Identity (bitwise) when rates match. Output length = round(len * target/source).
AudioClip resample(const AudioClip& clip, int target_hz);

QualityVerdict quality_gate(const AudioClip& clip, const QualityConfig& config = {});

}  // namespace soundscreen

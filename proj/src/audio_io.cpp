#include "soundscreen/audio_io.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <numeric>

#include "soundscreen/errors.hpp"
#include "soundscreen/util.hpp"

namespace soundscreen {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

float pcm16_to_float(std::int16_t v) {
    return static_cast<float>(v) / 32768.0f;
}

std::int16_t float_to_pcm16(float v) {
    const double scaled = std::lround(static_cast<double>(v) * 32768.0);
    return static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
}

double kaiser_window(double x, double half_width, double beta) {
    const double t = x / half_width;
    if (t <= -1.0 || t >= 1.0) return 0.0;
    return std::cyl_bessel_i(0.0, beta * std::sqrt(1.0 - t * t)) / std::cyl_bessel_i(0.0, beta);
}

double sinc(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

}  // namespace

const char* to_string(QualityReason reason) {
    switch (reason) {
        case QualityReason::ok: return "ok";
        case QualityReason::too_short: return "too_short";
        case QualityReason::clipped: return "clipped";
        case QualityReason::silent: return "silent";
    }
    return "?";
}

AudioClip decode_wav(std::span<const std::uint8_t> bytes, const std::string& source_path) {
    ByteReader r(bytes.data(), bytes.size());
    char magic[4];
    for (char& c : magic) c = static_cast<char>(r.u8());
    if (std::memcmp(magic, "RIFF", 4) != 0) throw DecodeError("not a RIFF file");
    r.u32();  // declared riff size; not trusted
    for (char& c : magic) c = static_cast<char>(r.u8());
    if (std::memcmp(magic, "WAVE", 4) != 0) throw DecodeError("not a WAVE file");

    std::uint16_t format = 0, channels = 0, bits = 0;
    int sample_rate = 0;
    bool have_fmt = false;
    const std::uint8_t* data_ptr = nullptr;
    std::size_t data_size = 0;

    while (r.remaining() >= 8) {
        char id[4];
        for (char& c : id) c = static_cast<char>(r.u8());
        const std::uint32_t chunk_size = r.u32();
        if (chunk_size > r.remaining()) throw DecodeError("truncated chunk");
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (chunk_size < 16) throw DecodeError("fmt chunk too small");
            ByteReader f(r.cursor(), chunk_size);
            format = f.u16();
            channels = f.u16();
            sample_rate = static_cast<int>(f.u32());
            f.u32();  // byte rate
            f.u16();  // block align
            bits = f.u16();
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data_ptr = r.cursor();
            data_size = chunk_size;
        }
        r.skip(chunk_size + (chunk_size & 1));  // chunks are word-aligned
    }

    if (!have_fmt) throw DecodeError("missing fmt chunk");
    if (data_ptr == nullptr) throw DecodeError("missing data chunk");
    if (sample_rate <= 0) throw DecodeError("invalid sample rate");
    if (channels < 1 || channels > 2) throw UnsupportedFormat("unsupported channel count");
    const bool pcm16 = format == kFormatPcm && bits == 16;
    const bool f32 = format == kFormatIeeeFloat && bits == 32;
    if (!pcm16 && !f32) throw UnsupportedFormat("only PCM16 and IEEE float32 are supported");

    const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
    const std::size_t frame_bytes = bytes_per_sample * channels;
    if (data_size % frame_bytes != 0) throw DecodeError("data chunk not frame aligned");
    const std::size_t frames = data_size / frame_bytes;
    if (frames == 0) throw DecodeError("empty data chunk");

    AudioClip clip;
    clip.sample_rate_hz = sample_rate;
    clip.source_path = source_path;
    clip.samples.resize(frames);
    ByteReader d(data_ptr, data_size);
    for (std::size_t i = 0; i < frames; ++i) {
        float acc = 0.0f;
        for (int c = 0; c < channels; ++c) {
            float v;
            if (pcm16) {
                v = pcm16_to_float(static_cast<std::int16_t>(d.u16()));
            } else {
                v = d.f32();
                if (!std::isfinite(v)) throw DecodeError("non-finite sample");
                v = std::clamp(v, -1.0f, 1.0f);
            }
            acc += v;
        }
        clip.samples[i] = acc / static_cast<float>(channels);
    }
    return clip;
}

std::vector<std::uint8_t> encode_wav(const AudioClip& clip) {
    const std::uint32_t data_size = static_cast<std::uint32_t>(clip.samples.size() * 2);
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_size);
    auto put_tag = [&out](const char* tag) {
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(tag[i]));
    };
    put_tag("RIFF");
    put_u32(out, 36 + data_size);
    put_tag("WAVE");
    put_tag("fmt ");
    put_u32(out, 16);
    put_u16(out, kFormatPcm);
    put_u16(out, 1);  // mono
    put_u32(out, static_cast<std::uint32_t>(clip.sample_rate_hz));
    put_u32(out, static_cast<std::uint32_t>(clip.sample_rate_hz * 2));
    put_u16(out, 2);   // block align
    put_u16(out, 16);  // bits
    put_tag("data");
    put_u32(out, data_size);
    for (const float s : clip.samples)
        put_u16(out, static_cast<std::uint16_t>(float_to_pcm16(s)));
    return out;
}

AudioClip load_wav(const std::filesystem::path& path) {
    const auto bytes = read_bytes(path);
    return decode_wav(bytes, path.string());
}

void save_wav(const std::filesystem::path& path, const AudioClip& clip) {
    const auto bytes = encode_wav(clip);
    write_bytes(path, bytes.data(), bytes.size());
}

AudioClip resample(const AudioClip& clip, int target_hz) {
    if (target_hz <= 0) throw Error("target rate must be positive");
    if (target_hz == clip.sample_rate_hz) return clip;

    const int source_hz = clip.sample_rate_hz;
    const int g = std::gcd(target_hz, source_hz);
    const std::int64_t up = target_hz / g;    // L phases
    const std::int64_t down = source_hz / g;  // input step numerator

    constexpr int kTapsPerPhase = 32;
    constexpr int kHalfTaps = kTapsPerPhase / 2;
    constexpr double kBeta = 8.6;
    const double cutoff = std::min(1.0, static_cast<double>(target_hz) / source_hz);

    // Taps for one phase, normalized to unit DC gain.
    auto make_phase = [&](double frac) {
        std::vector<double> taps(kTapsPerPhase);
        double sum = 0.0;
        for (int k = 0; k < kTapsPerPhase; ++k) {
            const double offset = static_cast<double>(k - kHalfTaps + 1) - frac;
            const double h = cutoff * sinc(cutoff * offset) * kaiser_window(offset, kHalfTaps, kBeta);
            taps[k] = h;
            sum += h;
        }
        for (double& t : taps) t /= sum;
        return taps;
    };

    // Precompute the phase bank when it is small; fall back to on-the-fly taps
    // for pathological rate pairs.
    const bool use_table = up <= 4096;
    std::vector<std::vector<double>> bank;
    if (use_table) {
        bank.reserve(static_cast<std::size_t>(up));
        for (std::int64_t p = 0; p < up; ++p)
            bank.push_back(make_phase(static_cast<double>(p) / static_cast<double>(up)));
    }

    const std::int64_t n_in = static_cast<std::int64_t>(clip.samples.size());
    const std::int64_t n_out = std::llround(static_cast<double>(n_in) * target_hz / source_hz);

    AudioClip out;
    out.sample_rate_hz = target_hz;
    out.source_path = clip.source_path;
    out.samples.resize(static_cast<std::size_t>(std::max<std::int64_t>(n_out, 0)));

    for (std::int64_t n = 0; n < n_out; ++n) {
        const std::int64_t num = n * down;
        const std::int64_t idx = num / up;
        const std::int64_t phase = num % up;
        const std::vector<double>& taps =
            use_table ? bank[static_cast<std::size_t>(phase)]
                      : make_phase(static_cast<double>(phase) / static_cast<double>(up));
        double acc = 0.0;
        for (int k = 0; k < kTapsPerPhase; ++k) {
            const std::int64_t j = idx + k - kHalfTaps + 1;
            if (j < 0 || j >= n_in) continue;
            acc += taps[static_cast<std::size_t>(k)] * clip.samples[static_cast<std::size_t>(j)];
        }
        out.samples[static_cast<std::size_t>(n)] = static_cast<float>(acc);
    }
    return out;
}

QualityVerdict quality_gate(const AudioClip& clip, const QualityConfig& config) {
    // Check order is part of the contract: too_short, clipped, silent.
    if (clip.duration_s() < config.min_duration_s) return {false, QualityReason::too_short};

    std::size_t clipped = 0;
    double energy = 0.0;
    for (const float s : clip.samples) {
        if (std::abs(s) >= 0.999f) ++clipped;
        energy += static_cast<double>(s) * s;
    }
    const double clip_fraction =
        static_cast<double>(clipped) / static_cast<double>(clip.samples.size());
    if (clip_fraction > config.clip_fraction_max) return {false, QualityReason::clipped};

    const double rms = std::sqrt(energy / static_cast<double>(clip.samples.size()));
    if (rms < config.silence_rms_floor) return {false, QualityReason::silent};

    return {true, QualityReason::ok};
}

}  // namespace soundscreen

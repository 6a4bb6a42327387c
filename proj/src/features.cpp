#include "soundscreen/features.hpp"

#include <cmath>
#include <numbers>

#include "soundscreen/errors.hpp"
#include "soundscreen/fft.hpp"
#include "soundscreen/util.hpp"

namespace soundscreen {

std::size_t SpectrogramConfig::window_samples(int sample_rate_hz) const {
    return static_cast<std::size_t>(std::lround(window_ms * sample_rate_hz / 1000.0));
}

std::size_t SpectrogramConfig::hop_samples(int sample_rate_hz) const {
    return static_cast<std::size_t>(std::lround(hop_ms * sample_rate_hz / 1000.0));
}

void SpectrogramConfig::validate(int sample_rate_hz) const {
    if (hop_ms <= 0 || window_ms <= 0) throw Error("window/hop must be positive");
    if (hop_ms > window_ms) throw Error("hop_ms must not exceed window_ms");
    if (!is_power_of_two(n_fft)) throw Error("n_fft must be a power of two");
    if (n_fft < window_samples(sample_rate_hz)) throw Error("n_fft smaller than window length");
    if (n_mels == 0) throw Error("n_mels must be positive");
    if (!(fmin_hz < fmax_hz)) throw Error("fmin_hz must be below fmax_hz");
    if (fmax_hz > sample_rate_hz / 2.0) throw Error("fmax_hz above Nyquist");
    if (log_floor <= 0) throw Error("log_floor must be positive");
}

double hz_to_mel(double hz) {
    return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double mel_to_hz(double mel) {
    return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MatrixD stft_power(const AudioClip& clip, const SpectrogramConfig& config) {
    config.validate(clip.sample_rate_hz);
    const std::size_t win = config.window_samples(clip.sample_rate_hz);
    const std::size_t hop = config.hop_samples(clip.sample_rate_hz);
    const std::size_t len = clip.samples.size();
    if (len < win) throw TooShort("clip shorter than one analysis window");

    const std::size_t frames = 1 + (len - win) / hop;
    const std::size_t n_bins = config.n_fft / 2 + 1;

    // Periodic Hann.
    std::vector<double> hann(win);
    for (std::size_t i = 0; i < win; ++i)
        hann[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                       static_cast<double>(win));

    MatrixD power(frames, n_bins);
    std::vector<std::complex<double>> buf(config.n_fft);
    for (std::size_t f = 0; f < frames; ++f) {
        const float* src = clip.samples.data() + f * hop;
        for (std::size_t i = 0; i < win; ++i)
            buf[i] = std::complex<double>(hann[i] * static_cast<double>(src[i]), 0.0);
        for (std::size_t i = win; i < config.n_fft; ++i) buf[i] = {0.0, 0.0};
        fft_radix2(buf);
        double* out = power.row(f);
        for (std::size_t k = 0; k < n_bins; ++k) out[k] = std::norm(buf[k]);
    }
    return power;
}

MelFilterbank mel_filterbank(int sample_rate_hz, std::size_t n_fft, std::size_t n_mels,
                             double fmin_hz, double fmax_hz) {
    if (n_mels == 0) throw Error("n_mels must be positive");
    if (!(fmin_hz >= 0 && fmin_hz < fmax_hz && fmax_hz <= sample_rate_hz / 2.0))
        throw Error("mel band must satisfy 0 <= fmin < fmax <= Nyquist");

    MelFilterbank fb;
    fb.n_mels = n_mels;
    fb.n_bins = n_fft / 2 + 1;
    fb.weights = MatrixD(n_mels, fb.n_bins);
    fb.center_hz.resize(n_mels);
    fb.row_span.resize(n_mels);

    const double mel_lo = hz_to_mel(fmin_hz);
    const double mel_hi = hz_to_mel(fmax_hz);
    std::vector<double> edges(n_mels + 2);
    for (std::size_t i = 0; i < edges.size(); ++i)
        edges[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                             static_cast<double>(n_mels + 1));

    const double bin_hz = static_cast<double>(sample_rate_hz) / static_cast<double>(n_fft);
    for (std::size_t m = 0; m < n_mels; ++m) {
        const double f_lo = edges[m];
        const double f_mid = edges[m + 1];
        const double f_hi = edges[m + 2];
        fb.center_hz[m] = f_mid;
        std::size_t begin = fb.n_bins, end = 0;
        for (std::size_t k = 0; k < fb.n_bins; ++k) {
            const double f = bin_hz * static_cast<double>(k);
            double w = 0.0;
            if (f > f_lo && f < f_mid) {
                w = (f - f_lo) / (f_mid - f_lo);
            } else if (f >= f_mid && f < f_hi) {
                w = (f_hi - f) / (f_hi - f_mid);
            }
            fb.weights.at(m, k) = w;
            if (w > 0.0) {
                begin = std::min(begin, k);
                end = std::max(end, k + 1);
            }
        }
        if (begin >= end)
            throw DegenerateBand("mel filter " + std::to_string(m) +
                                 " covers no FFT bin (too many mels for n_fft)");
        fb.row_span[m] = {begin, end};
    }
    return fb;
}

MatrixF log_mel(const MatrixD& power, const MelFilterbank& filterbank, double log_floor) {
    if (power.cols != filterbank.n_bins)
        throw ShapeMismatch("power matrix has " + std::to_string(power.cols) +
                            " bins, filterbank expects " + std::to_string(filterbank.n_bins));
    if (log_floor <= 0) throw Error("log_floor must be positive");

    MatrixF out(power.rows, filterbank.n_mels);
    for (std::size_t f = 0; f < power.rows; ++f) {
        const double* p = power.row(f);
        float* o = out.row(f);
        for (std::size_t m = 0; m < filterbank.n_mels; ++m) {
            const auto [begin, end] = filterbank.row_span[m];
            const double* w = filterbank.weights.row(m);
            double acc = 0.0;
            for (std::size_t k = begin; k < end; ++k) acc += w[k] * p[k];
            o[m] = static_cast<float>(std::log(std::max(acc, log_floor)));
        }
    }
    return out;
}

LogMelSpectrogram compute_log_mel(const AudioClip& clip, const SpectrogramConfig& config) {
    const MatrixD power = stft_power(clip, config);
    const MelFilterbank fb = mel_filterbank(clip.sample_rate_hz, config.n_fft, config.n_mels,
                                            config.fmin_hz, config.fmax_hz);
    LogMelSpectrogram spec;
    spec.values = log_mel(power, fb, config.log_floor);
    spec.config = config;
    return spec;
}

namespace {

/// Copy rows [offset, offset + t) with edge replication for out-of-range rows,
/// then z-normalize in place.
FeatureWindow cut_window(const MatrixF& values, std::ptrdiff_t offset, std::size_t t_frames,
                         Modality modality) {
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(values.rows) - 1;
    FeatureWindow w;
    w.modality = modality;
    w.values = MatrixF(t_frames, values.cols);
    for (std::size_t r = 0; r < t_frames; ++r) {
        std::ptrdiff_t src = offset + static_cast<std::ptrdiff_t>(r);
        src = std::clamp<std::ptrdiff_t>(src, 0, last);
        const float* from = values.row(static_cast<std::size_t>(src));
        float* to = w.values.row(r);
        std::copy(from, from + values.cols, to);
    }

    double sum = 0.0, sum_sq = 0.0;
    for (const float v : w.values.data) {
        sum += v;
        sum_sq += static_cast<double>(v) * v;
    }
    const double n = static_cast<double>(w.values.data.size());
    const double mean = sum / n;
    const double var = std::max(sum_sq / n - mean * mean, 0.0);
    const double stdev = std::sqrt(var);
    if (stdev < 1e-12) {
        std::fill(w.values.data.begin(), w.values.data.end(), 0.0f);
    } else {
        for (float& v : w.values.data)
            v = static_cast<float>((static_cast<double>(v) - mean) / stdev);
    }
    return w;
}

}  // namespace

std::vector<FeatureWindow> windows(const LogMelSpectrogram& spec, std::size_t t_frames,
                                   WindowPolicy policy, Modality modality) {
    if (t_frames == 0) throw Error("t_frames must be positive");
    const std::size_t frames = spec.values.rows;
    if (frames == 0) throw TooShort("empty spectrogram");

    std::vector<FeatureWindow> out;
    if (policy == WindowPolicy::center_crop_or_pad || frames <= t_frames) {
        // Centered crop, or symmetric edge-replicated pad when too short.
        const std::ptrdiff_t offset = (static_cast<std::ptrdiff_t>(frames) -
                                       static_cast<std::ptrdiff_t>(t_frames)) / 2;
        out.push_back(cut_window(spec.values, offset, t_frames, modality));
        return out;
    }

    const std::size_t stride = std::max<std::size_t>(t_frames / 2, 1);
    std::size_t offset = 0;
    for (; offset + t_frames <= frames; offset += stride)
        out.push_back(cut_window(spec.values, static_cast<std::ptrdiff_t>(offset), t_frames,
                                 modality));
    const std::size_t tail = frames - t_frames;
    if (out.empty() || (offset - stride) != tail)
        out.push_back(cut_window(spec.values, static_cast<std::ptrdiff_t>(tail), t_frames,
                                 modality));
    return out;
}

void write_lmel(const std::filesystem::path& path, const MatrixF& values, Modality modality) {
    std::vector<std::uint8_t> buf;
    buf.reserve(15 + values.data.size() * 4);
    buf.push_back('L');
    buf.push_back('M');
    buf.push_back('E');
    buf.push_back('L');
    put_u16(buf, 1);
    put_u32(buf, static_cast<std::uint32_t>(values.rows));
    put_u32(buf, static_cast<std::uint32_t>(values.cols));
    buf.push_back(static_cast<std::uint8_t>(modality));
    for (const float v : values.data) put_f32(buf, v);
    write_bytes(path, buf.data(), buf.size());
}

LmelFile read_lmel(const std::filesystem::path& path) {
    const auto bytes = read_bytes(path);
    ByteReader r(bytes.data(), bytes.size());
    char magic[4];
    for (char& c : magic) c = static_cast<char>(r.u8());
    if (std::string_view(magic, 4) != "LMEL") throw DecodeError("not an LMEL file");
    const std::uint16_t version = r.u16();
    if (version != 1) throw UnsupportedFormat("unsupported LMEL version");
    const std::uint32_t frames = r.u32();
    const std::uint32_t n_mels = r.u32();
    const std::uint8_t modality = r.u8();
    if (modality > 2) throw DecodeError("bad modality code");
    LmelFile file;
    file.modality = static_cast<Modality>(modality);
    file.values = MatrixF(frames, n_mels);
    for (float& v : file.values.data) v = r.f32();
    return file;
}

}  // namespace soundscreen

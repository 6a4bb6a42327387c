#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace soundscreen {

// ---- file IO ----

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, const void* data, std::size_t size);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// ---- little-endian serialization ----

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v);
void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v);
void put_f32(std::vector<std::uint8_t>& out, float v);

/// Cursor over a byte buffer; throws DecodeError past the end.
class ByteReader {
public:
    ByteReader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

    std::uint8_t u8();
    std::uint16_t u16();
    std::uint32_t u32();
    float f32();
    void skip(std::size_t n);
    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return size_ - pos_; }
    const std::uint8_t* cursor() const { return data_ + pos_; }

private:
    void need(std::size_t n) const;
    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
};

// ---- digests ----

/// FNV-1a 64-bit digest; used for idempotence checks, not security.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t v);

// ---- time ----

/// UTC seconds -> "2020-04-08T12:34:56Z".
std::string iso8601_utc(std::int64_t seconds);

// ---- numeric formatting (deterministic, locale independent) ----

std::string format_double(double v, int decimals);

// ---- parallelism ----

/// Run fn(i) for i in [0, n). Each index writes to its own slot, so results
/// are identical for any thread count. threads <= 1 runs inline.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace soundscreen

#pragma once

#include <cstdint>
#include <string>

#include "soundscreen/errors.hpp"

namespace soundscreen {

enum class Modality : std::uint8_t { breathing = 0, cough = 1, voice = 2 };
constexpr int kNumModalities = 3;

enum class Label : std::uint8_t { negative = 0, positive = 1 };

enum class Gender : std::uint8_t { male, female, unknown };

enum class AgeBin : std::uint8_t {
    a16_29,
    a30_39,
    a40_49,
    a50_59,
    a60_69,
    a70_plus,
    unknown
};

const char* to_string(Modality m);
const char* to_string(Label l);
const char* to_string(Gender g);
const char* to_string(AgeBin a);

Modality modality_from_string(const std::string& s);
Label label_from_string(const std::string& s);
Gender gender_from_string(const std::string& s);
AgeBin age_bin_from_string(const std::string& s);

}  // namespace soundscreen

#include "soundscreen/types.hpp"

namespace soundscreen {

const char* to_string(Modality m) {
    switch (m) {
        case Modality::breathing: return "breathing";
        case Modality::cough: return "cough";
        case Modality::voice: return "voice";
    }
    return "?";
}

const char* to_string(Label l) {
    return l == Label::positive ? "positive" : "negative";
}

const char* to_string(Gender g) {
    switch (g) {
        case Gender::male: return "male";
        case Gender::female: return "female";
        case Gender::unknown: return "unknown";
    }
    return "?";
}

const char* to_string(AgeBin a) {
    switch (a) {
        case AgeBin::a16_29: return "16-29";
        case AgeBin::a30_39: return "30-39";
        case AgeBin::a40_49: return "40-49";
        case AgeBin::a50_59: return "50-59";
        case AgeBin::a60_69: return "60-69";
        case AgeBin::a70_plus: return "70+";
        case AgeBin::unknown: return "unknown";
    }
    return "?";
}

Modality modality_from_string(const std::string& s) {
    if (s == "breathing") return Modality::breathing;
    if (s == "cough") return Modality::cough;
    if (s == "voice") return Modality::voice;
    throw Error("unknown modality: " + s);
}

Label label_from_string(const std::string& s) {
    if (s == "positive") return Label::positive;
    if (s == "negative") return Label::negative;
    throw Error("unknown label: " + s);
}

Gender gender_from_string(const std::string& s) {
    if (s == "male") return Gender::male;
    if (s == "female") return Gender::female;
    if (s == "unknown") return Gender::unknown;
    throw Error("unknown gender: " + s);
}

AgeBin age_bin_from_string(const std::string& s) {
    if (s == "16-29") return AgeBin::a16_29;
    if (s == "30-39") return AgeBin::a30_39;
    if (s == "40-49") return AgeBin::a40_49;
    if (s == "50-59") return AgeBin::a50_59;
    if (s == "60-69") return AgeBin::a60_69;
    if (s == "70+") return AgeBin::a70_plus;
    if (s == "unknown") return AgeBin::unknown;
    throw Error("unknown age bin: " + s);
}

}  // namespace soundscreen

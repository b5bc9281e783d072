#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace plagdet {

/// Porter's measure m of a word: the number of VC sequences in the
/// [C](VC)^m[V] decomposition, with 'y' counting as a vowel after a
/// consonant. Defined for lowercase ASCII letter words.
int porter_measure(std::string_view word);

/// Porter stem of a token. Words of length <= 2 and tokens containing
/// anything but ASCII letters are returned unchanged; uppercase input is
/// not expected here (the preprocess pipeline lowercases first).
///
/// This is the reference variant of the algorithm (the one the published
/// sample vocabulary is stemmed with), which differs from the 1980 paper
/// in three small points: short words are left alone, step 2 maps
/// "bli" -> "ble" rather than "abli" -> "able", and step 2 gains
/// "logi" -> "log".
std::string porter_stem(std::string_view token);

/// Element-wise porter_stem; order and length preserved.
std::vector<std::string> stem_tokens(std::vector<std::string> tokens);

}  // namespace plagdet

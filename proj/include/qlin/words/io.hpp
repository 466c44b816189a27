#pragma once

#include <json.hpp>

#include "qlin/words/words.hpp"

namespace qlin::words {

// GammaElement: [[gen, exp], ...]
inline nlohmann::json to_json(const GammaElement& g) {
  nlohmann::json j = nlohmann::json::array();
  for (const Letter& l : g.letters()) j.push_back({l.gen, l.exp});
  return j;
}

inline GammaElement gamma_from_json(const nlohmann::json& j, const char* what = "word") {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array of letters");
  std::vector<Letter> letters;
  for (const auto& cell : j) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
        !cell[1].is_number_integer())
      throw ValidationError(std::string(what) + ": letter must be [generator, exponent]");
    letters.push_back(Letter{cell[0].get<int>(), cell[1].get<long>()});
  }
  return GammaElement(std::move(letters));
}

// HnnWord: {"prefix": [[gen, exp], ...], "syllables": [[p, [[gen, exp], ...]], ...]}
inline nlohmann::json to_json(const HnnWord& w) {
  nlohmann::json syl = nlohmann::json::array();
  for (const Syllable& s : w.syllables) syl.push_back({s.p, to_json(s.g)});
  return nlohmann::json{{"prefix", to_json(w.prefix)}, {"syllables", syl}};
}

inline HnnWord hnn_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("hnn word: expected an object");
  for (const auto& [key, _] : j.items())
    if (key != "prefix" && key != "syllables")
      throw ValidationError("hnn word: unknown field \"" + key + "\"");
  HnnWord w;
  if (j.contains("prefix")) w.prefix = gamma_from_json(j.at("prefix"), "prefix");
  if (j.contains("syllables")) {
    if (!j.at("syllables").is_array()) throw ValidationError("syllables: expected an array");
    for (const auto& cell : j.at("syllables")) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer())
        throw ValidationError("syllable must be [p, word]");
      Syllable s{cell[0].get<long>(), gamma_from_json(cell[1], "syllable word")};
      if (s.p == 0) throw ValidationError("syllable exponent must be nonzero");
      w.syllables.push_back(std::move(s));
    }
  }
  return w;
}

// AmalgamWord: [[factor, [[gen, exp], ...]], ...]
inline nlohmann::json to_json(const AmalgamWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const AmalgamLetter& l : w.letters) j.push_back({l.factor, to_json(l.g)});
  return j;
}

inline AmalgamWord amalgam_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("amalgam word: expected an array of letters");
  AmalgamWord w;
  for (const auto& cell : j) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer())
      throw ValidationError("amalgam letter must be [factor, word]");
    const int factor = cell[0].get<int>();
    if (factor != 1 && factor != 2) throw ValidationError("amalgam factor tag must be 1 or 2");
    w.letters.push_back(AmalgamLetter{factor, gamma_from_json(cell[1], "amalgam letter")});
  }
  return w;
}

}  // namespace qlin::words

#include "numforge/data.hpp"

namespace numforge::data {

// The 12 sentence templates with their world-state semantics. A "verb" of
// OBS marks literal-verb clauses ("had", "There were"), which assert counts.
const char* sentence_templates_json() {
  return R"json([
{"text": "CONT-1-AGT VERB-1-* NUM-1 ATTR-1 ENT-1 .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"}]},
{"text": "CONT-1-AGT VERB-1-POS NUM-1 ATTR-1 ENT-1 and CONT-2-AGT VERB-1-POS NUM-2 ATTR-1 ENT-1 .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "VERB-1", "container": "CONT-2", "num": "NUM-2", "attr": "ATTR-1", "ent": "ENT-1"}]},
{"text": "CONT-1-AGT VERB-1-POS NUM-1 ATTR-1 ENT-1 and NUM-2 ATTR-2 ENT-2 .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "VERB-1", "container": "CONT-1", "num": "NUM-2", "attr": "ATTR-2", "ent": "ENT-2"}]},
{"text": "CONT-1-AGT VERB-1-POS NUM-1 ATTR-1 ENT-1 , but VERB-2-NEG NUM-2 ATTR-2 ENT-2 .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "VERB-2", "container": "CONT-1", "num": "NUM-2", "attr": "ATTR-2", "ent": "ENT-2"}]},
{"text": "CONT-1-AGT VERB-1-POS NUM-1 ATTR-1 ENT-1 in ATTR-2 CONT-2-ENV .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "VERB-1", "container": "CONT-2", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"}]},
{"text": "CONT-1-AGT VERB-1-NEG NUM-1 of the ATTR-1 ENT-1 .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"}]},
{"text": "CONT-1-AGT had NUM-1 ATTR-1 ENT-1 , CONT-2-AGT had NUM-2 ATTR-1 ENT-1 , and CONT-3-AGT had NUM-3 ATTR-1 ENT-1 .",
 "events": [{"verb": "OBS", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "OBS", "container": "CONT-2", "num": "NUM-2", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "OBS", "container": "CONT-3", "num": "NUM-3", "attr": "ATTR-1", "ent": "ENT-1"}]},
{"text": "NUM-1 ATTR-1 ENT-1 , NUM-2 ATTR-2 ENT-2 , and NUM-3 ATTR-3 ENT-3 were VERB-1-POS in ATTR-4 CONT-1-ENV .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "VERB-1", "container": "CONT-1", "num": "NUM-2", "attr": "ATTR-2", "ent": "ENT-2"},
            {"verb": "VERB-1", "container": "CONT-1", "num": "NUM-3", "attr": "ATTR-3", "ent": "ENT-3"}]},
{"text": "There were NUM-1 ATTR-1 ENT-1 and NUM-2 ATTR-2 ENT-2 in ATTR-3 CONT-1-ENV .",
 "events": [{"verb": "OBS", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"},
            {"verb": "OBS", "container": "CONT-1", "num": "NUM-2", "attr": "ATTR-2", "ent": "ENT-2"}]},
{"text": "There were NUM-1 ATTR-1 ENT-1 in ATTR-2 CONT-1-ENV .",
 "events": [{"verb": "OBS", "container": "CONT-1", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"}]},
{"text": "CONT-1-AGT VERB-1-NEGTRN NUM-1 ATTR-1 ENT-1 to CONT-2-AGT .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "other": "CONT-2", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"}]},
{"text": "CONT-1-AGT VERB-1-POSTRN NUM-1 ATTR-1 ENT-1 from CONT-2-AGT .",
 "events": [{"verb": "VERB-1", "container": "CONT-1", "other": "CONT-2", "num": "NUM-1", "attr": "ATTR-1", "ent": "ENT-1"}]}
])json";
}

const char* vocab_history_json() {
  return R"json({
"domain": "history",
"agents": ["Napoleon", "Wellington", "Kutuzov", "Blucher", "Murat", "Ney"],
"environments": ["Spain", "Russia", "Prussia", "Bavaria", "Andalusia", "Saxony"],
"environment_parents": {"Andalusia": "Spain"},
"entities": ["families", "soldiers", "rebels", "settlers", "prisoners", "musketeers"],
"attributes": ["Polish", "Japanese", "Chinese", "British", "French", "Prussian", "veteran", "loyal"],
"env_attributes": ["southern", "northern", "central", "occupied"],
"verbs": {
  "POS": [{"base": "recruit", "past": "recruited"},
          {"base": "enlist", "past": "enlisted"},
          {"base": "train", "past": "trained"},
          {"base": "muster", "past": "mustered"}],
  "NEG": [{"base": "dismiss", "past": "dismissed"},
          {"base": "release", "past": "released"},
          {"base": "abandon", "past": "abandoned"}],
  "OBS": [{"base": "command", "past": "commanded"},
          {"base": "control", "past": "controlled"},
          {"base": "maintain", "past": "maintained"}],
  "NEG_TRN": [{"base": "transfer", "past": "transferred"},
              {"base": "surrender", "past": "surrendered"}],
  "POS_TRN": [{"base": "obtain", "past": "obtained"},
              {"base": "capture", "past": "captured"}]
}
})json";
}

const char* vocab_football_json() {
  return R"json({
"domain": "nfl",
"agents": ["Packers", "Bears", "Cowboys", "Broncos", "Seahawks", "Raiders"],
"environments": ["Wisconsin", "Illinois", "Texas", "Colorado", "Washington", "Denver"],
"environment_parents": {"Denver": "Colorado"},
"entities": ["players", "rookies", "linebackers", "receivers", "kickers", "punters"],
"attributes": ["injured", "veteran", "undrafted", "promising", "backup", "starting"],
"env_attributes": ["northern", "rainy", "snowy", "sunny"],
"verbs": {
  "POS": [{"base": "draft", "past": "drafted"},
          {"base": "sign", "past": "signed"},
          {"base": "recruit", "past": "recruited"},
          {"base": "promote", "past": "promoted"}],
  "NEG": [{"base": "bench", "past": "benched"},
          {"base": "suspend", "past": "suspended"},
          {"base": "waive", "past": "waived"}],
  "OBS": [{"base": "retain", "past": "retained"},
          {"base": "field", "past": "fielded"},
          {"base": "manage", "past": "managed"}],
  "NEG_TRN": [{"base": "trade", "past": "traded"},
              {"base": "loan", "past": "loaned"}],
  "POS_TRN": [{"base": "acquire", "past": "acquired"},
              {"base": "poach", "past": "poached"}]
}
})json";
}

}  // namespace numforge::data

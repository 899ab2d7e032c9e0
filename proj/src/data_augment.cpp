#include "numforge/data.hpp"

namespace numforge::data {

// One comparative pair per line. Every word appears in exactly one pair,
// so the loaded lexicon is a strict involution.
const char* antonym_table() {
  static const char* const table = R"(higher|lower
larger|smaller
more|fewer
longer|shorter
later|earlier
older|younger
greater|lesser
faster|slower
closer|farther
heavier|lighter
wider|narrower
deeper|shallower
stronger|weaker
richer|poorer
warmer|cooler
hotter|colder
thicker|thinner
better|worse
steeper|gentler
denser|sparser
most|least
highest|lowest
largest|smallest
longest|shortest
latest|earliest
oldest|youngest
best|worst
fastest|slowest
strongest|weakest
heaviest|lightest
widest|narrowest
greatest|fewest
)";
  return table;
}

}  // namespace numforge::data

#pragma once

#include <map>
#include <string>

namespace widthkit {
namespace charclass {

// Text presentations of the stock cohomology rings, in the exact serializer
// format.  The files under data/rings/ carry the same bytes; a test keeps the
// two in sync.  Everything downstream (suites, CLI defaults) reads these, so
// runs do not depend on a data directory.
inline const std::map<std::string, std::string>& bundled_ring_texts() {
  static const std::map<std::string, std::string> rings = {
      {"s2",
       "RING d=2\n"
       "H 0 1 one\n"
       "H 1 0\n"
       "H 2 1 s\n"
       "W1 -\n"
       "W2 -\n"
       "TOP 2.0\n"},
      {"s3",
       "RING d=3\n"
       "H 0 1 one\n"
       "H 1 0\n"
       "H 2 0\n"
       "H 3 1 s\n"
       "W1 -\n"
       "W2 -\n"
       "TOP 3.0\n"},
      {"s4",
       "RING d=4\n"
       "H 0 1 one\n"
       "H 1 0\n"
       "H 2 0\n"
       "H 3 0\n"
       "H 4 1 s\n"
       "W1 -\n"
       "W2 -\n"
       "TOP 4.0\n"},
      {"t2",
       "RING d=2\n"
       "H 0 1 one\n"
       "H 1 2 a b\n"
       "H 2 1 ab\n"
       "CUP 1.0 1.0 -> -\n"
       "CUP 1.0 1.1 -> 2.0\n"
       "CUP 1.1 1.1 -> -\n"
       "W1 -\n"
       "W2 -\n"
       "TOP 2.0\n"},
      {"t3",
       "RING d=3\n"
       "H 0 1 one\n"
       "H 1 3 a b c\n"
       "H 2 3 ab ac bc\n"
       "H 3 1 abc\n"
       "CUP 1.0 1.0 -> -\n"
       "CUP 1.0 1.1 -> 2.0\n"
       "CUP 1.0 1.2 -> 2.1\n"
       "CUP 1.1 1.1 -> -\n"
       "CUP 1.1 1.2 -> 2.2\n"
       "CUP 1.2 1.2 -> -\n"
       "CUP 1.0 2.0 -> -\n"
       "CUP 1.0 2.1 -> -\n"
       "CUP 1.0 2.2 -> 3.0\n"
       "CUP 1.1 2.0 -> -\n"
       "CUP 1.1 2.1 -> 3.0\n"
       "CUP 1.1 2.2 -> -\n"
       "CUP 1.2 2.0 -> 3.0\n"
       "CUP 1.2 2.1 -> -\n"
       "CUP 1.2 2.2 -> -\n"
       "W1 -\n"
       "W2 -\n"
       "TOP 3.0\n"},
      {"cp2",
       "RING d=4\n"
       "H 0 1 one\n"
       "H 1 0\n"
       "H 2 1 h\n"
       "H 3 0\n"
       "H 4 1 hh\n"
       "CUP 2.0 2.0 -> 4.0\n"
       "W1 -\n"
       "W2 2.0\n"
       "TOP 4.0\n"},
      {"rp2",
       "RING d=2\n"
       "H 0 1 one\n"
       "H 1 1 a\n"
       "H 2 1 aa\n"
       "CUP 1.0 1.0 -> 2.0\n"
       "W1 1.0\n"
       "W2 2.0\n"
       "TOP 2.0\n"},
      {"s2xs3",
       "RING d=5\n"
       "H 0 1 one\n"
       "H 1 0\n"
       "H 2 1 x\n"
       "H 3 1 y\n"
       "H 4 0\n"
       "H 5 1 xy\n"
       "CUP 2.0 2.0 -> -\n"
       "CUP 2.0 3.0 -> 5.0\n"
       "W1 -\n"
       "W2 -\n"
       "TOP 5.0\n"},
  };
  return rings;
}

}  // namespace charclass
}  // namespace widthkit

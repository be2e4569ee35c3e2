#pragma once

#include <cstdint>
#include <string>

namespace osplax {

// Superoscillator generator families. Xi is the gl-type family of Section-2
// constructions; A/B/C are the orthosymplectic bosonic/bosonic/fermionic
// families. Copies 1 and 2 label the two mutually supercommuting sets used
// in fusion.
enum class Family : uint8_t { Xi = 0, A = 1, B = 2, C = 3 };

enum class Kind : uint8_t { Creation = 0, Annihilation = 1 };

// A single generator, packed into 32 bits so that the integer order of the
// key realizes the canonical generator order: creators before annihilators,
// then (family, copy, row, col). The lowest bit stores the Z2 parity, which
// is constant per (family,row,col) under a fixed parity sequence and so does
// not disturb uniqueness.
struct Generator {
  uint32_t key = 0;

  static Generator make(Family f, int copy, int row, int col, Kind k, int parity) {
    Generator g;
    g.key = (uint32_t(k) << 22) | (uint32_t(f) << 20) | (uint32_t(copy - 1) << 19) |
            (uint32_t(row) << 11) | (uint32_t(col) << 3) | uint32_t(parity & 1);
    return g;
  }

  Kind kind() const { return Kind((key >> 22) & 1); }
  Family family() const { return Family((key >> 20) & 3); }
  int copy() const { return int((key >> 19) & 1) + 1; }
  int row() const { return int((key >> 11) & 0xff); }
  int col() const { return int((key >> 3) & 0xff); }
  int parity() const { return int(key & 1); }

  bool is_creation() const { return kind() == Kind::Creation; }

  // The pairing partner of (family, i, j, annihilation) is
  // (family, j, i, creation), and vice versa.
  Generator partner() const {
    return make(family(), copy(), col(), row(),
                is_creation() ? Kind::Annihilation : Kind::Creation, parity());
  }

  friend bool operator==(Generator a, Generator b) { return a.key == b.key; }
  friend bool operator<(Generator a, Generator b) { return a.key < b.key; }

  std::string str() const {
    static const char* fam = "xabc";
    std::string s;
    s += fam[int(family())];
    if (copy() == 2) s += '2';
    s += is_creation() ? '+' : '-';
    s += "(" + std::to_string(row()) + "," + std::to_string(col()) + ")";
    return s;
  }
};

// Contraction test: annihilator `x` against creator `y`, [x,y] = 1 exactly
// when they are pairing partners.
inline bool contracts(Generator ann, Generator cre) {
  return ann.family() == cre.family() && ann.copy() == cre.copy() &&
         ann.row() == cre.col() && ann.col() == cre.row();
}

}  // namespace osplax

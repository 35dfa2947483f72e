//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/elements.h"

#include <array>

namespace pestgraph {
namespace {

constexpr std::array<std::string_view, kMaxAtomicNumber + 1> kSymbols = {
  "",   "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na",
  "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",
  "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br",
  "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag",
  "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr",
  "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu",
  "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi",
  "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am",
  "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh",
  "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
};

constexpr int kBoron[] = { 3 };
constexpr int kCarbon[] = { 4 };
constexpr int kNitrogen[] = { 3 };
constexpr int kOxygen[] = { 2 };
constexpr int kPhosphorus[] = { 3, 5 };
constexpr int kSulfur[] = { 2, 4, 6 };
constexpr int kHalogen[] = { 1 };

}  // namespace

int atomic_number(std::string_view symbol) {
  for (int z = 1; z <= kMaxAtomicNumber; ++z)
    if (kSymbols[z] == symbol)
      return z;
  return 0;
}

std::string_view element_symbol(int atomic_number) {
  if (atomic_number < 1 || atomic_number > kMaxAtomicNumber)
    return {};
  return kSymbols[atomic_number];
}

bool is_organic_subset(int atomic_number) {
  return !default_valences(atomic_number).empty();
}

std::span<const int> default_valences(int atomic_number) {
  switch (atomic_number) {
  case 5:
    return kBoron;
  case 6:
    return kCarbon;
  case 7:
    return kNitrogen;
  case 8:
    return kOxygen;
  case 15:
    return kPhosphorus;
  case 16:
    return kSulfur;
  case 9:
  case 17:
  case 35:
  case 53:
    return kHalogen;
  default:
    return {};
  }
}

bool may_be_aromatic(int atomic_number) {
  switch (atomic_number) {
  case 5:   // b
  case 6:   // c
  case 7:   // n
  case 8:   // o
  case 15:  // p
  case 16:  // s
  case 33:  // as
  case 34:  // se
  case 52:  // te
    return true;
  default:
    return false;
  }
}

}  // namespace pestgraph

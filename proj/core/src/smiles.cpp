//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/smiles.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pestgraph/elements.h"

namespace pestgraph {
namespace {

std::atomic<std::size_t> g_stereo_discards { 0 };

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

struct OpenRing {
  int atom;
  std::optional<BondOrder> order;
  std::size_t position;
};

class SmilesParser {
public:
  explicit SmilesParser(std::string_view text): text_(text) { }

  Molecule parse() {
    if (text_.empty())
      fail(SmilesErrorKind::kEmpty, 0, "empty SMILES");

    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '[' || is_upper(c) || is_lower(c) || c == '*') {
        atom_token();
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' ||
                 c == '\\' || c == '$') {
        bond_token();
      } else if (c == '(') {
        if (prev_ < 0)
          fail(SmilesErrorKind::kSyntax, pos_, "branch without a preceding atom");
        if (pending_)
          fail(SmilesErrorKind::kSyntax, pending_pos_,
               "bond symbol before branch");
        branches_.push_back({ prev_, pos_ });
        last_ = Token::kOpen;
        ++pos_;
      } else if (c == ')') {
        if (branches_.empty())
          fail(SmilesErrorKind::kSyntax, pos_, "unmatched ')'");
        if (pending_)
          fail(SmilesErrorKind::kSyntax, pending_pos_, "dangling bond");
        if (last_ == Token::kOpen)
          fail(SmilesErrorKind::kSyntax, pos_, "empty branch");
        prev_ = branches_.back().first;
        branches_.pop_back();
        last_ = Token::kClose;
        ++pos_;
      } else if (is_digit(c) || c == '%') {
        ring_token();
      } else if (c == '.') {
        if (pending_)
          fail(SmilesErrorKind::kSyntax, pending_pos_, "dangling bond");
        if (prev_ < 0)
          fail(SmilesErrorKind::kSyntax, pos_, "'.' without a preceding atom");
        prev_ = -1;
        last_ = Token::kDot;
        ++pos_;
      } else {
        fail(SmilesErrorKind::kSyntax, pos_,
             std::string("unexpected character '") + printable(c) + "'");
      }
    }

    if (pending_)
      fail(SmilesErrorKind::kSyntax, pending_pos_, "dangling bond");
    if (last_ == Token::kDot)
      fail(SmilesErrorKind::kSyntax, pos_ - 1, "trailing '.'");
    if (!branches_.empty())
      fail(SmilesErrorKind::kUnclosedBranch, branches_.back().second,
           "unclosed branch");
    if (!rings_.empty()) {
      auto it = std::min_element(rings_.begin(), rings_.end(),
                                 [](const auto &a, const auto &b) {
                                   return a.second.position < b.second.position;
                                 });
      fail(SmilesErrorKind::kUnmatchedRingClosure, it->second.position,
           "unmatched ring closure " + std::to_string(it->first));
    }

    // Valence model for unbracketed atoms runs after all bonds are known.
    std::vector<int> valence(atoms_.size(), 0);
    for (const Bond &b: bonds_) {
      valence[b.begin] += valence_contribution(b.order);
      valence[b.end] += valence_contribution(b.order);
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (!bracketed_[i])
        atoms_[i].hydrogens = implicit_hydrogens(
            atoms_[i].element, atoms_[i].aromatic, valence[i]);

    if (stereo_) {
      if (g_stereo_discards++ == 0)
        std::cerr << "pestgraph: warning: stereochemistry is not retained\n";
    }

    return { std::move(atoms_), std::move(bonds_), std::string(text_) };
  }

private:
  enum class Token { kNone, kAtom, kBond, kOpen, kClose, kRing, kDot };

  [[noreturn]] void fail(SmilesErrorKind kind, std::size_t at,
                         const std::string &msg) const {
    throw SmilesError(kind, at, msg);
  }

  static std::string printable(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7F)
      return std::string(1, c);
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("\\x") + kHex[u >> 4] + kHex[u & 0xF];
  }

  char peek(std::size_t offset = 0) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }

  void bond_token() {
    const char c = text_[pos_];
    if (prev_ < 0)
      fail(SmilesErrorKind::kSyntax, pos_, "bond without a preceding atom");
    if (pending_)
      fail(SmilesErrorKind::kSyntax, pos_, "consecutive bond symbols");
    switch (c) {
    case '-':
      pending_ = BondOrder::kSingle;
      break;
    case '=':
      pending_ = BondOrder::kDouble;
      break;
    case '#':
      pending_ = BondOrder::kTriple;
      break;
    case ':':
      pending_ = BondOrder::kAromatic;
      break;
    case '/':
    case '\\':
      pending_ = BondOrder::kSingle;
      stereo_ = true;
      break;
    default:
      fail(SmilesErrorKind::kSyntax, pos_, "quadruple bonds are not supported");
    }
    pending_pos_ = pos_;
    last_ = Token::kBond;
    ++pos_;
  }

  void add_bond(int a, int b, std::optional<BondOrder> order,
                std::size_t at) {
    if (a == b)
      fail(SmilesErrorKind::kInvalidGraph, at, "ring closure to the same atom");
    if (!bond_keys_.insert(std::minmax(a, b)).second)
      fail(SmilesErrorKind::kInvalidGraph, at, "duplicate bond");
    BondOrder o;
    if (order) {
      o = *order;
    } else {
      o = atoms_[a].aromatic && atoms_[b].aromatic ? BondOrder::kAromatic
                                                   : BondOrder::kSingle;
    }
    bonds_.push_back({ a, b, o });
  }

  void attach(int atom, std::size_t at) {
    if (prev_ >= 0) {
      add_bond(prev_, atom, pending_, at);
    } else if (pending_) {
      fail(SmilesErrorKind::kSyntax, pending_pos_, "bond without a preceding atom");
    }
    pending_.reset();
    prev_ = atom;
    last_ = Token::kAtom;
  }

  void atom_token() {
    const std::size_t start = pos_;
    Atom atom;
    atom.index = static_cast<int>(atoms_.size());
    bool bracket = false;

    const char c = text_[pos_];
    if (c == '[') {
      bracket = true;
      bracket_atom(atom);
    } else if (c == '*') {
      fail(SmilesErrorKind::kUnknownElement, pos_,
           "wildcard atoms are not supported");
    } else if (is_upper(c)) {
      std::string_view sym = text_.substr(pos_, 1);
      if ((c == 'C' && peek(1) == 'l') || (c == 'B' && peek(1) == 'r'))
        sym = text_.substr(pos_, 2);
      atom.element = atomic_number(sym);
      if (!is_organic_subset(atom.element))
        fail(SmilesErrorKind::kUnknownElement, pos_,
             "'" + std::string(sym) + "' is not an organic-subset element");
      pos_ += sym.size();
    } else {
      const std::string up(1, static_cast<char>(std::toupper(c)));
      atom.element = atomic_number(up);
      if (atom.element == 0 || !is_organic_subset(atom.element) ||
          !may_be_aromatic(atom.element))
        fail(SmilesErrorKind::kUnknownElement, pos_,
             std::string("'") + c + "' is not an aromatic organic-subset atom");
      atom.aromatic = true;
      ++pos_;
    }

    atoms_.push_back(atom);
    bracketed_.push_back(bracket);
    attach(atom.index, start);
  }

  int read_int() {
    int v = 0;
    int digits = 0;
    while (is_digit(peek())) {
      if (++digits > 6)
        fail(SmilesErrorKind::kSyntax, pos_, "number too long");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void bracket_atom(Atom &atom) {
    const std::size_t open = pos_;
    ++pos_;  // '['

    if (is_digit(peek()))
      atom.isotope = read_int();

    const char c = peek();
    if (c == '*') {
      fail(SmilesErrorKind::kUnknownElement, pos_,
           "wildcard atoms are not supported");
    } else if (is_upper(c)) {
      int z = 0;
      if (is_lower(peek(1)))
        z = atomic_number(text_.substr(pos_, 2));
      if (z != 0) {
        pos_ += 2;
      } else {
        z = atomic_number(text_.substr(pos_, 1));
        if (z == 0)
          fail(SmilesErrorKind::kUnknownElement, pos_,
               "unknown element '" +
                   std::string(text_.substr(pos_, is_lower(peek(1)) ? 2 : 1)) +
                   "'");
        ++pos_;
      }
      atom.element = z;
    } else if (is_lower(c)) {
      int z = 0;
      if (is_lower(peek(1))) {
        std::string two { static_cast<char>(std::toupper(c)), peek(1) };
        z = atomic_number(two);
        if (z != 0 && may_be_aromatic(z))
          pos_ += 2;
        else
          z = 0;
      }
      if (z == 0) {
        z = atomic_number(std::string(1, static_cast<char>(std::toupper(c))));
        if (z == 0 || !may_be_aromatic(z))
          fail(SmilesErrorKind::kUnknownElement, pos_,
               std::string("unknown aromatic element '") + c + "'");
        ++pos_;
      }
      atom.element = z;
      atom.aromatic = true;
    } else {
      fail(SmilesErrorKind::kSyntax, pos_, "expected element symbol");
    }

    // Chirality: @, @@, @TH1, @AL2, @SP3, @TB10, @OH22 ...
    if (peek() == '@') {
      stereo_ = true;
      ++pos_;
      if (peek() == '@') {
        ++pos_;
      } else if (is_upper(peek()) && is_upper(peek(1)) && is_digit(peek(2))) {
        pos_ += 2;
        read_int();
      }
    }

    if (peek() == 'H') {
      ++pos_;
      atom.hydrogens = is_digit(peek()) ? read_int() : 1;
    }

    if (peek() == '+' || peek() == '-') {
      const char sign = peek();
      const int s = sign == '+' ? 1 : -1;
      ++pos_;
      if (is_digit(peek())) {
        atom.formal_charge = s * read_int();
      } else {
        int count = 1;
        while (peek() == sign) {
          ++count;
          ++pos_;
        }
        atom.formal_charge = s * count;
      }
    }

    if (peek() == ':') {
      ++pos_;
      if (!is_digit(peek()))
        fail(SmilesErrorKind::kSyntax, pos_, "expected atom class number");
      read_int();
    }

    if (peek() != ']') {
      if (pos_ >= text_.size())
        fail(SmilesErrorKind::kSyntax, open, "unterminated bracket atom");
      fail(SmilesErrorKind::kSyntax, pos_,
           std::string("unexpected '") + printable(peek()) +
               "' in bracket atom");
    }
    ++pos_;
  }

  void ring_token() {
    const std::size_t start = pos_;
    if (prev_ < 0)
      fail(SmilesErrorKind::kSyntax, pos_, "ring closure without an atom");
    int number;
    if (text_[pos_] == '%') {
      if (!is_digit(peek(1)) || !is_digit(peek(2)))
        fail(SmilesErrorKind::kSyntax, pos_, "expected two digits after '%'");
      number = (peek(1) - '0') * 10 + (peek(2) - '0');
      pos_ += 3;
    } else {
      number = text_[pos_] - '0';
      ++pos_;
    }

    auto it = rings_.find(number);
    if (it == rings_.end()) {
      rings_.emplace(number, OpenRing { prev_, pending_, start });
    } else {
      const OpenRing open = it->second;
      rings_.erase(it);
      std::optional<BondOrder> order = open.order;
      if (pending_) {
        if (order && *order != *pending_)
          fail(SmilesErrorKind::kSyntax, start, "conflicting ring bond orders");
        order = pending_;
      }
      add_bond(open.atom, prev_, order, start);
    }
    pending_.reset();
    last_ = Token::kRing;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int prev_ = -1;
  std::optional<BondOrder> pending_;
  std::size_t pending_pos_ = 0;
  Token last_ = Token::kNone;
  bool stereo_ = false;

  std::vector<Atom> atoms_;
  std::vector<bool> bracketed_;
  std::vector<Bond> bonds_;
  std::set<std::pair<int, int>> bond_keys_;
  std::vector<std::pair<int, std::size_t>> branches_;
  std::map<int, OpenRing> rings_;
};

std::string format_message(std::size_t position, const std::string &message) {
  return "SMILES error at position " + std::to_string(position) + ": " +
         message;
}

}  // namespace

SmilesError::SmilesError(SmilesErrorKind kind, std::size_t position,
                         const std::string &message)
    : std::runtime_error(format_message(position, message)), kind_(kind),
      position_(position) { }

Molecule parse_smiles(std::string_view text) {
  return SmilesParser(text).parse();
}

std::size_t stereo_discard_count() { return g_stereo_discards.load(); }

}  // namespace pestgraph

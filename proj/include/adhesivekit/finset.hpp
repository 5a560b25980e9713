#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adhesivekit/errors.hpp"

namespace adk {

// A finite set of distinct string tokens, kept sorted so that iteration order
// (and hence every construction downstream) is deterministic.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<std::string> elems);
  static FinSet of(std::initializer_list<std::string> xs);

  bool contains(const std::string& x) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<std::string>& elements() const { return elems_; }
  bool subset_of(const FinSet& other) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<std::string> elems_;  // sorted, unique
};

// A total function between finite sets, stored pointwise.
class FinFunction {
 public:
  FinFunction() = default;
  FinFunction(FinSet dom, FinSet cod, std::map<std::string, std::string> map);
  static FinFunction identity(const FinSet& s);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::map<std::string, std::string>& mapping() const { return map_; }
  const std::string& at(const std::string& x) const;

  friend bool operator==(const FinFunction&, const FinFunction&) = default;

 private:
  FinSet dom_, cod_;
  std::map<std::string, std::string> map_;
};

// g after f; domains must match up exactly.
FinFunction compose(const FinFunction& g, const FinFunction& f);

bool is_injective(const FinFunction& f);
bool is_surjective(const FinFunction& f);
bool is_bijective(const FinFunction& f);
FinFunction inverse(const FinFunction& f);  // precondition: bijective
FinSet image(const FinFunction& f);
// Restriction of f to a subset of its domain (with the same codomain).
FinFunction restrict_to(const FinFunction& f, const FinSet& sub);

// A finite word over a finite alphabet.
class Word {
 public:
  Word() = default;
  Word(FinSet alphabet, std::vector<std::string> letters);

  const FinSet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  FinSet alphabet_;
  std::vector<std::string> letters_;
};

// Letterwise application: the action of f on words over its domain.
Word star_map(const FinFunction& f, const Word& w);

// --- token plumbing -------------------------------------------------------
//
// Structured names (quotient classes, pullback pairs, tuples) are built from
// user tokens, which may contain the delimiter characters themselves; every
// builder therefore escapes with backslashes, and plain tokens round-trip
// unchanged.

std::string escape_token(const std::string& s, const std::string& specials);
std::string pair_token(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_pair_token(const std::string& t);
std::string tuple_token(const std::vector<std::string>& parts);
std::vector<std::string> split_tuple_token(const std::string& t);
// Quotient-class name: sorted member tokens joined with '|'.
std::string class_token(std::vector<std::string> members);
std::vector<std::string> split_class_token(const std::string& t);

// --- canonical (co)limit constructions in Set ------------------------------

struct SetPushout {
  FinSet apex;          // D
  FinFunction from_c;   // g : C -> D
  FinFunction from_b;   // n : B -> D
};
// Span C <-m- A -f-> B. Classes of the quotient of B + C are named by their
// sorted member tokens prefixed with the origin tag ("B:" / "C:").
// When m is injective, the five characterising properties of the resulting
// square (injectivity of n, joint surjectivity, partition of the apex,
// g-collision and n/g-interaction laws) are asserted on the output.
SetPushout pushout_set(const FinFunction& m, const FinFunction& f);

struct SetPullback {
  FinSet apex;        // P = {(c,b) | g(c) = n(b)}
  FinFunction to_c;   // P -> C
  FinFunction to_b;   // P -> B
};
// Cospan C -g-> D <-n- B.
SetPullback pullback_set(const FinFunction& g, const FinFunction& n);

struct SetEqualizer {
  FinSet apex;
  FinFunction include;  // apex -> dom(f), subset inclusion
};
SetEqualizer equalizer_set(const FinFunction& f, const FinFunction& g);

struct SetCoproduct {
  FinSet apex;
  std::vector<FinFunction> inject;
};
// Tokens are tagged with their summand index ("0:x", "1:y", ...).
SetCoproduct coproduct_set(const std::vector<FinSet>& parts);

struct SetProduct {
  FinSet apex;
  std::vector<FinFunction> project;
};
// Tokens are tuple tokens "(a,b,...)" in lexicographic order.
SetProduct product_set(const std::vector<FinSet>& parts);

// All functions dom -> cod in lexicographic order (empty when cod is empty
// but dom is not).
std::vector<FinFunction> all_functions(const FinSet& dom, const FinSet& cod);

// Quotient of a single set by a list of identified pairs (reflexive,
// symmetric, transitive closure). Class names: sorted members joined by '|'.
struct SetQuotient {
  FinSet classes;
  FinFunction project;  // original -> classes
};
SetQuotient quotient_set(const FinSet& s,
                         const std::vector<std::pair<std::string, std::string>>& rel);

}  // namespace adk

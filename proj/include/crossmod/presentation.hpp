#pragma once

// Finitely presented groups and bounded Todd–Coxeter enumeration over the
// trivial subgroup.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crossmod/group.hpp"

namespace crossmod {

/// Generator i is the letter i+1, its inverse is -(i+1).
using Letter = int;
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  /// Optional human-readable meaning of each generator, e.g. "(q,m)".
  std::vector<std::string> legend;

  int num_generators() const { return static_cast<int>(generators.size()); }
  /// Throws UndeclaredSymbol.
  int generator_index(std::string_view name) const;
  Letter letter(int gen, bool inverted = false) const { return inverted ? -(gen + 1) : gen + 1; }
  /// Freely reduces and appends; the empty word is dropped.
  void add_relator(Word w);
};

/// Builds a presentation from generator names and relator strings.
Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relators);

/// Generators of p2 that collide with p1's are renamed with a "_2" suffix.
Presentation free_product(const Presentation& p1, const Presentation& p2);

/// p with extra relators; throws UndeclaredSymbol for out-of-range letters.
Presentation quotient_by(const Presentation& p, const std::vector<Word>& extra);

/// Parses words such as "a b^-1 (a b)^3"; "1" is the empty word.
Word parse_word(const Presentation& p, std::string_view text);
std::string format_word(const Presentation& p, const Word& w);

enum class EnumStatus { Complete, LimitExceeded };

struct CosetTable {
  int num_generators = 0;
  int num_cosets = 0;
  /// Row c, column 2g is c·g and column 2g+1 is c·g^-1. Standardized numbering.
  std::vector<int> entries;

  int operator()(int coset, int column) const {
    return entries[static_cast<std::size_t>(coset) * 2 * num_generators + column];
  }
  friend bool operator==(const CosetTable&, const CosetTable&) = default;
};

struct EnumerationOptions {
  int coset_limit = 100000;
};

struct EnumerationResult {
  EnumStatus status = EnumStatus::LimitExceeded;
  int coset_limit = 0;
  /// Complete only; cosets in standard (breadth-first) order.
  CosetTable table;
  /// Materialized when Complete and the order is within kExhaustiveBound.
  Group group;
  /// Element of `group` represented by each generator.
  std::vector<Elem> generator_images;
  int max_active = 0;
  int total_defined = 0;

  bool complete() const { return status == EnumStatus::Complete; }
  int order() const { return table.num_cosets; }
};

/// Felsch-style enumeration of the cosets of the trivial subgroup.
/// LimitExceeded means "undecided at limit", not infiniteness.
EnumerationResult todd_coxeter(const Presentation& p, EnumerationOptions opts = {});

/// Evaluates a word in the enumerated group (coset index == element index).
Elem word_image(const Presentation& p, const EnumerationResult& r, const Word& w);

/// Shortest word (in standard BFS order) for each element of a Complete result.
std::vector<Word> element_words(const EnumerationResult& r);

}  // namespace crossmod
